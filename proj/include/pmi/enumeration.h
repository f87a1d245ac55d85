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

// Limits on exhaustive subset enumeration.

#ifndef PMI_ENUMERATION_H_
#define PMI_ENUMERATION_H_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmi {

// Name of the environment variable overriding the default cap.
inline constexpr const char* kEnumerationCapEnv = "PMI_ENUM_CAP";
inline constexpr std::uint64_t kDefaultEnumerationCap = 200'000;

// Largest number of size-ell subsets a brute-force routine may enumerate.
std::uint64_t enumeration_cap();

class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mpz_class binomial(long n, long k);

// Throws EnumerationCapExceeded when C(m, ell) exceeds the cap.
void check_enumeration_cap(int m, int ell, const std::string& who);

}  // namespace pmi

#endif  // PMI_ENUMERATION_H_
