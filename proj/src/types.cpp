// Copyright 2026 The Inset Authors
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

#include "inset/types.hpp"

#include <numeric>

namespace inset {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kAdjacentPair: return "AdjacentPair";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kCycleTooShort: return "CycleTooShort";
    case ErrorCode::kNoCandidates: return "NoCandidates";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kMismatch: return "Mismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

Rational::Rational(Count numerator, Count denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kOutOfDomain, "zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const Count g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Cross-multiplication in 128 bits; denominators are positive.
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace inset
