// Copyright 2026 The multicover Authors
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

#include "multicover/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace multicover {

RationalLambda::RationalLambda(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) {
    throw std::domain_error("lambda must be positive: got " + std::to_string(p) + "/" +
                            std::to_string(q));
  }
  const std::int64_t g = std::gcd(p, q);
  num = p / g;
  den = q / g;
  if (num >= den) {
    throw std::domain_error("lambda must lie in (0,1): got " + std::to_string(p) + "/" +
                            std::to_string(q));
  }
}

RationalLambda RationalLambda::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty lambda");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const std::int64_t p = std::stoll(text.substr(0, slash));
      const std::int64_t q = std::stoll(text.substr(slash + 1));
      return RationalLambda(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      // A bare integer can only be invalid (lambda is strictly inside (0,1));
      // let the constructor produce the domain error.
      return RationalLambda(std::stoll(text), 1);
    }
    // Decimal: keep at most six fractional digits, as a fraction over 10^6.
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 6) frac.resize(6);
    while (frac.size() < 6) frac.push_back('0');
    const std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    const std::int64_t p = whole * 1000000 + std::stoll(frac);
    return RationalLambda(p, 1000000);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse lambda from '" + text + "'");
  }
}

std::string RationalLambda::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace multicover
