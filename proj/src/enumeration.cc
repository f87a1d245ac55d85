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

#include "pmi/enumeration.h"

#include <cstdlib>

namespace pmi {

std::uint64_t enumeration_cap() {
  if (const char* text = std::getenv(kEnumerationCapEnv); text != nullptr && *text != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end != nullptr && *end == '\0') return value;
  }
  return kDefaultEnumerationCap;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void check_enumeration_cap(int m, int ell, const std::string& who) {
  const mpz_class count = binomial(m, ell);
  if (count > mpz_class(std::to_string(enumeration_cap()))) {
    throw EnumerationCapExceeded(who + ": C(" + std::to_string(m) + "," + std::to_string(ell) +
                                 ") = " + count.get_str() + " subsets exceed the cap of " +
                                 std::to_string(enumeration_cap()) + " (set " +
                                 kEnumerationCapEnv + " to raise it)");
  }
}

}  // namespace pmi
