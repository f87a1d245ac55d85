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

// Reference oracle: the optimal interdiction value at a single lambda by
// enumerating every ell-subset, and a verifier that checks a solution against
// it at many sample points.

#ifndef PMI_ORACLE_H_
#define PMI_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pmi/interdiction.h"
#include "pmi/matroid.h"
#include "pmi/rational.h"

namespace pmi {

// Minimum basis weight of the matroid minus F at lambda; +inf when deleting F
// lowers the rank.
ExtendedRational oracle_value_of(const MatroidInstance& instance, const ElementSet& F,
                                 const Rational& lambda);

struct OracleValue {
  ExtendedRational value;
  ElementSet argmax;  // lexicographically smallest maximizer
  std::uint64_t subsets = 0;
};

// Max over all ell-subsets F. Throws EnumerationCapExceeded above the cap.
OracleValue oracle_value(const MatroidInstance& instance, const Rational& lambda);

struct VerificationOptions {
  std::size_t random_samples = 16;
  std::uint64_t seed = 1;
};

struct SampleCheck {
  Rational lambda;
  std::string source;  // changepoint, midpoint, endpoint or random
  ExtendedRational expected;
  ExtendedRational reported;
  bool value_ok = false;
  // Every deletion set the solution reports at lambda attains the optimum.
  bool label_ok = false;
};

struct VerificationReport {
  bool passed = false;
  std::size_t samples = 0;
  std::size_t value_mismatches = 0;
  std::size_t label_mismatches = 0;
  std::vector<SampleCheck> failures;

  std::string summary() const;
};

VerificationReport verify_solution(const MatroidInstance& instance,
                                   const InterdictionSolution& solution,
                                   const VerificationOptions& options = {});

}  // namespace pmi

#endif  // PMI_ORACLE_H_
