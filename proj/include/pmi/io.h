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

// Instance and solution files (JSON), tabular plot samples.
//
// Instance:
//   {"matroid": {"type": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}
//            | {"type": "uniform", "size": 5, "rank": 2}
//            | {"type": "partition", "blocks": [0,0,1], "capacities": [1,1]}
//            | {"type": "explicit", "size": 3, "bases": [[0,1],[0,2]]},
//    "names": ["a", "b", ...],                       optional
//    "weights": [{"a": "-3", "b": "2"}, ...],        numbers, "p/q" or decimals
//    "ell": 2,
//    "interval": {"lo": "-inf", "hi": "7/2"}}        optional, default the real line
//
// Solution:
//   {"segments": [{"lo", "hi", "slope", "intercept", "f_star", "basis"}],
//    "changepoints": [{"lambda", "kind"}],
//    "meta": {"algorithm", "oracle_calls", "wall_time_ms", ...},
//    "verification": {...}}                          only when verified
// Rationals are written as "p/q"; an infinite segment has intercept "inf" and
// slope "0/1".

#ifndef PMI_IO_H_
#define PMI_IO_H_

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "pmi/interdiction.h"
#include "pmi/oracle.h"

namespace pmi {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All parse functions throw ParseError naming the offending field.
MatroidInstance parse_instance(const nlohmann::json& doc);
MatroidInstance parse_instance_text(const std::string& text);
MatroidInstance parse_instance_file(const std::string& path);

nlohmann::json instance_to_json(const MatroidInstance& instance);

nlohmann::json solution_to_json(const InterdictionSolution& solution,
                                const MatroidInstance& instance,
                                const VerificationReport* verification = nullptr);

nlohmann::json verification_to_json(const VerificationReport& report);

// Reads the segments and changepoints back (meta and verification ignored).
struct SolutionFile {
  PiecewiseLinear y;
  std::vector<ElementSet> bases;
  std::vector<std::pair<Rational, ChangepointKind>> changepoints;
};
SolutionFile parse_solution(const nlohmann::json& doc);

struct PlotRow {
  Rational lambda;
  ExtendedRational value;
  ElementSet f_star;
};

// Samples lo, lo + step, ... up to hi together with every changepoint inside
// [lo, hi], ascending. At a changepoint the row carries the deletion set of the
// piece starting there. Throws std::invalid_argument for step <= 0 or lo > hi.
std::vector<PlotRow> plot_rows(const InterdictionSolution& solution, const Rational& step,
                               const Rational& lo, const Rational& hi);

// Tab-separated, with a header row.
std::string format_plot(const std::vector<PlotRow>& rows,
                        const std::vector<std::string>& names = {});

}  // namespace pmi

#endif  // PMI_IO_H_
