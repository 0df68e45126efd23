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

#ifndef MULTICOVER_RATIONAL_HPP
#define MULTICOVER_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace multicover {

// A rational weight-decay factor p/q in lowest terms, 0 < p < q.
// All solver payout arithmetic is driven by these two integers.
struct RationalLambda {
  std::int64_t num = 2;
  std::int64_t den = 7;

  RationalLambda() = default;
  RationalLambda(std::int64_t p, std::int64_t q);

  // Accepts "p/q" or a decimal such as "0.287643" (converted to a
  // fraction over 10^6 and reduced).
  static RationalLambda parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  bool operator==(const RationalLambda&) const = default;
};

}  // namespace multicover

#endif  // MULTICOVER_RATIONAL_HPP
