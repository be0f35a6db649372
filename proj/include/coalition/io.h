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

// JSON and CSV persistence for tensors, reports and campaign output.

#ifndef COALITION_IO_H_
#define COALITION_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "coalition/benchmarks.h"
#include "coalition/fictitious.h"
#include "coalition/lab.h"
#include "coalition/solvers.h"
#include "json.hpp"

namespace coalition {

using Json = nlohmann::json;

// {"n": N, "entries": [N^3 reals, row-major], "symmetric_zero_sum": bool}
Json TensorToJson(const PayoffTensor3& p);
// Throws std::invalid_argument on malformed input.
PayoffTensor3 TensorFromJson(const Json& j);
PayoffTensor3 ReadTensorFile(const std::string& path);
void WriteTensorFile(const std::string& path, const PayoffTensor3& p);

Json StrategyToJson(const StrategySimplex& s);
StrategySimplex StrategyFromJson(const Json& j);

// {"v_nash", "v_sync", "v_async", "strategies": {...}, "diagnostics": {...}};
// unavailable values are null.
Json ReportToJson(const ValueReport& report);
Json BenchmarkToJson(const BenchmarkGame& game);
Json SolutionToJson(const BenchmarkSolution& solution);
Json OutcomeToJson(const SolveOutcome& outcome);
Json FpTraceToJson(const FpTrace& trace);
Json CampaignToJson(const CampaignResult& result);

Json SolverConfigToJson(const SolverConfig& config);
// Overrides the fields of `base` present in `j`; unknown keys are rejected.
SolverConfig SolverConfigFromJson(const Json& j, SolverConfig base = {});

inline constexpr const char* kSamplesCsvVersion = "# coalition-lab gap-samples v1";

// Header line, then trial,seed,v_sync,v_async,gap,theta with %.17g values
// and "null" for an undefined theta.
void WriteSamplesCsv(std::ostream& out, const std::vector<GapSample>& samples);
std::vector<GapSample> ReadSamplesCsv(std::istream& in);

// bin_lo,bin_hi,count
void WriteHistogramCsv(std::ostream& out, const std::vector<HistogramBin>& bins);

// method,trial,value,value_gap,wall_time
void WriteValueGapCsv(std::ostream& out, const std::vector<ValueGapRow>& rows);

}  // namespace coalition

#endif  // COALITION_IO_H_
