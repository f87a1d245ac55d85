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

#include "pmi/bench.h"

#include <iomanip>
#include <optional>
#include <sstream>

#include "pmi/enumeration.h"

namespace pmi {

BenchReport bench(const std::vector<BenchInput>& inputs, const std::vector<Algorithm>& algorithms) {
  BenchReport report;
  for (const BenchInput& input : inputs) {
    const MatroidInstance& instance = input.instance;
    const int k = instance.matroid.rank();
    std::optional<InterdictionSolution> reference;
    for (Algorithm algorithm : algorithms) {
      BenchRow row;
      row.instance = input.name;
      row.algorithm = algorithm;
      row.m = instance.ground_size();
      row.k = k;
      row.ell = instance.ell;
      row.bound = changepoint_bound(row.m, k, instance.ell);
      try {
        InterdictionSolution solution = solve(instance, algorithm);
        row.wall_ms = solution.wall_seconds * 1000.0;
        row.oracle_calls = solution.oracle_calls;
        row.changepoints = solution.changepoints.size();
        if (row.bound > 0) {
          row.bound_ratio = static_cast<double>(row.changepoints) / row.bound.get_d();
        }
        if (k > 0 && mpz_class(static_cast<unsigned long>(row.changepoints)) > row.bound) {
          report.within_bounds = false;
          report.problems.push_back(input.name + " (" + to_string(algorithm) +
                                    "): changepoint count above the bound");
        }
        if (!reference) {
          reference = std::move(solution);
        } else if (!equal_values(reference->y, solution.y)) {
          report.agree = false;
          report.problems.push_back(input.name + ": " + to_string(algorithm) + " disagrees with " +
                                    to_string(reference->algorithm));
        }
      } catch (const EnumerationCapExceeded&) {
        row.skipped = true;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string BenchReport::format() const {
  std::ostringstream os;
  os << "instance\talgorithm\tm\tk\tell\twall_ms\toracle_calls\tchangepoints\tbound\tratio\n";
  for (const BenchRow& r : rows) {
    os << r.instance << '\t' << to_string(r.algorithm) << '\t' << r.m << '\t' << r.k << '\t'
       << r.ell << '\t';
    if (r.skipped) {
      os << "skipped (enumeration cap)\t-\t-\t" << r.bound.get_str() << "\t-\n";
      continue;
    }
    os << std::fixed << std::setprecision(3) << r.wall_ms << '\t' << r.oracle_calls << '\t'
       << r.changepoints << '\t' << r.bound.get_str() << '\t' << std::setprecision(6)
       << r.bound_ratio << '\n';
  }
  os << "algorithms agree: " << (agree ? "yes" : "NO") << '\n';
  os << "changepoints within bound: " << (within_bounds ? "yes" : "NO") << '\n';
  for (const std::string& p : problems) os << "  " << p << '\n';
  return os.str();
}

}  // namespace pmi
