// Copyright 2026 The Coalition Lab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coalition/io.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace coalition {
namespace {

TEST(TensorJsonTest, RoundTrip) {
  const PayoffTensor3 p = RandomSymmetricTensor(4, 17);
  const Json j = TensorToJson(p);
  EXPECT_EQ(j.at("n").get<int>(), 4);
  EXPECT_EQ(j.at("entries").size(), 64u);
  EXPECT_EQ(TensorFromJson(j), p);
  EXPECT_EQ(TensorFromJson(Json::parse(j.dump())), p);
}

TEST(TensorJsonTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "coalition_io_test_tensor.json";
  const PayoffTensor3 p = RandomSymmetricTensor(3, 2);
  WriteTensorFile(path.string(), p);
  EXPECT_EQ(ReadTensorFile(path.string()), p);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadTensorFile(path.string()), std::runtime_error);
}

TEST(TensorJsonTest, RejectsMalformed) {
  EXPECT_THROW(TensorFromJson(Json::parse(R"({"n": 2, "entries": [1, 2, 3]})")), DimensionError);
  EXPECT_THROW(TensorFromJson(Json::parse(R"({"entries": []})")), std::invalid_argument);
  EXPECT_THROW(TensorFromJson(Json::parse(R"([1, 2])")), std::invalid_argument);
  // A flagged tensor must really be symmetric zero-sum.
  Json bad = TensorToJson(RandomSymmetricTensor(2, 1));
  bad["entries"][1] = 0.5;
  EXPECT_THROW(TensorFromJson(bad), std::invalid_argument);
}

TEST(StrategyJsonTest, RoundTrip) {
  const StrategySimplex s({0.25, 0.5, 0.25});
  EXPECT_EQ(StrategyFromJson(StrategyToJson(s)), s);
  EXPECT_THROW(StrategyFromJson(Json::parse("[0.5, 0.6]")), std::invalid_argument);
}

TEST(ReportJsonTest, NullsForMissingValues) {
  ValueReport r;
  r.v_sync = -0.5;
  r.x_opt = StrategySimplex::Uniform(2);
  r.diagnostics.push_back({"k", "v"});
  const Json j = ReportToJson(r);
  EXPECT_TRUE(j.at("v_nash").is_null());
  EXPECT_TRUE(j.at("v_async").is_null());
  EXPECT_EQ(j.at("v_sync").get<double>(), -0.5);
  EXPECT_TRUE(j.at("strategies").contains("x"));
  EXPECT_EQ(j.at("diagnostics").at("k"), "v");
}

TEST(SolverConfigJsonTest, RoundTripAndUnknownKeys) {
  SolverConfig c;
  c.smoothing = SmoothingSpec::LpShift(40);
  c.constraints = ConstraintMode::kSoft;
  c.restarts = 7;
  c.rng_seed = 99;
  c.method = Method::kProjectedGradient;
  const SolverConfig back = SolverConfigFromJson(SolverConfigToJson(c));
  EXPECT_EQ(back.smoothing.kind, c.smoothing.kind);
  EXPECT_EQ(back.smoothing.param, 40.0);
  EXPECT_EQ(back.constraints, ConstraintMode::kSoft);
  EXPECT_EQ(back.restarts, 7u);
  EXPECT_EQ(back.rng_seed, 99u);
  EXPECT_EQ(back.method, Method::kProjectedGradient);
  EXPECT_THROW(SolverConfigFromJson(Json::parse(R"({"bogus": 1})")), std::invalid_argument);
  const SolverConfig partial = SolverConfigFromJson(Json::parse(R"({"restarts": 2})"), c);
  EXPECT_EQ(partial.restarts, 2u);
  EXPECT_EQ(partial.rng_seed, 99u);
}

TEST(SamplesCsvTest, RoundTripIsExact) {
  std::vector<GapSample> samples{MakeGapSample(0, 11, -0.123456789012345, -0.0456),
                                 MakeGapSample(1, 12, 0.0, 0.0),
                                 MakeGapSample(2, 13, -1.0 / 3.0, -2.0 / 7.0)};
  std::stringstream buf;
  WriteSamplesCsv(buf, samples);
  const std::string text = buf.str();
  EXPECT_EQ(text.rfind(kSamplesCsvVersion, 0), 0u);
  EXPECT_NE(text.find("trial,seed,v_sync,v_async,gap,theta"), std::string::npos);
  EXPECT_NE(text.find("null"), std::string::npos);
  std::stringstream in(text);
  EXPECT_EQ(ReadSamplesCsv(in), samples);
}

TEST(SamplesCsvTest, RejectsWrongHeader) {
  std::stringstream in("trial,seed\n1,2\n");
  EXPECT_THROW(ReadSamplesCsv(in), std::invalid_argument);
}

TEST(HistogramCsvTest, Columns) {
  std::stringstream out;
  WriteHistogramCsv(out, {{0.0, 0.02, 3}, {0.02, 0.04, 0}});
  std::string header;
  std::getline(out, header);
  EXPECT_EQ(header, "bin_lo,bin_hi,count");
  std::string row;
  std::getline(out, row);
  EXPECT_EQ(row, "0,0.02,3");
}

TEST(ValueGapCsvTest, Columns) {
  std::stringstream out;
  WriteValueGapCsv(out, {{"softmax", 0, 0.1, 1e-6, 0.01}});
  std::string header;
  std::getline(out, header);
  EXPECT_EQ(header, "method,trial,value,value_gap,wall_time");
}

TEST(CampaignJsonTest, HasStats) {
  CampaignResult r;
  r.samples.push_back(MakeGapSample(0, 1, -0.2, -0.1));
  r.gap = Summarize({0.1});
  const Json j = CampaignToJson(r);
  EXPECT_TRUE(j.contains("gap"));
  EXPECT_TRUE(j.contains("theta"));
}

}  // namespace
}  // namespace coalition
