// Copyright 2026 The qgrass Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qgrass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QGRASS_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

QGRASS_DEFINE_ERROR(InvalidParams);
QGRASS_DEFINE_ERROR(InvalidSubset);
QGRASS_DEFINE_ERROR(MixedParams);
QGRASS_DEFINE_ERROR(CrossingPair);
QGRASS_DEFINE_ERROR(BoxOverflow);
QGRASS_DEFINE_ERROR(SizeMismatch);
QGRASS_DEFINE_ERROR(TruncationTooSmall);
QGRASS_DEFINE_ERROR(DimMismatch);
QGRASS_DEFINE_ERROR(AmbientMismatch);
QGRASS_DEFINE_ERROR(NotDivisible);
QGRASS_DEFINE_ERROR(PoleAtOne);
QGRASS_DEFINE_ERROR(ZeroValueAtNegativeExponent);
QGRASS_DEFINE_ERROR(InvalidMatrix);
QGRASS_DEFINE_ERROR(FrozenIndex);
QGRASS_DEFINE_ERROR(LaurentViolation);
QGRASS_DEFINE_ERROR(NoLabel);
QGRASS_DEFINE_ERROR(IndexOutOfRange);
QGRASS_DEFINE_ERROR(BadConfiguration);
QGRASS_DEFINE_ERROR(ParseError);

#undef QGRASS_DEFINE_ERROR

/// Raised by check_compatible; carries the first offending (k, l) entry of
/// B^t L (0-based, k a mutable column).
class NotCompatible : public Error {
 public:
  NotCompatible(std::size_t k, std::size_t l, const std::string& what)
      : Error(what), k_(k), l_(l) {}
  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }

 private:
  std::size_t k_;
  std::size_t l_;
};

}  // namespace qgrass
