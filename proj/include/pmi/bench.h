// Copyright 2026 The PMI Authors
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

// Runs several algorithms over several instances and tabulates wall time,
// oracle calls and changepoint counts against the combinatorial bound.

#ifndef PMI_BENCH_H_
#define PMI_BENCH_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pmi/interdiction.h"

namespace pmi {

struct BenchInput {
  std::string name;
  MatroidInstance instance;
};

struct BenchRow {
  std::string instance;
  Algorithm algorithm = Algorithm::kTree;
  int m = 0;
  int k = 0;
  int ell = 0;
  bool skipped = false;  // enumeration cap exceeded
  double wall_ms = 0;
  std::uint64_t oracle_calls = 0;
  std::size_t changepoints = 0;
  mpz_class bound;
  double bound_ratio = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Every instance got equal value functions from every algorithm that ran.
  bool agree = true;
  // Every changepoint count is within changepoint_bound.
  bool within_bounds = true;
  std::vector<std::string> problems;

  // Tab-separated table with a header row, then the verdicts.
  std::string format() const;
};

BenchReport bench(const std::vector<BenchInput>& inputs, const std::vector<Algorithm>& algorithms);

}  // namespace pmi

#endif  // PMI_BENCH_H_
