/*
 * Copyright 2026 The ranklab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKLAB_ERRORS_HPP
#define RANKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ranklab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RANKLAB_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
       public:                                                            \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

// field
RANKLAB_DEFINE_ERROR(NonPrimeQ);
RANKLAB_DEFINE_ERROR(ReducibleModulus);
RANKLAB_DEFINE_ERROR(DegreeMismatch);
RANKLAB_DEFINE_ERROR(DivisionByZero);

// ranklin
RANKLAB_DEFINE_ERROR(InvalidPositions);

// gabidulin
RANKLAB_DEFINE_ERROR(LengthMismatch);
RANKLAB_DEFINE_ERROR(DecodingFailure);
RANKLAB_DEFINE_ERROR(DegenerateSystem);
RANKLAB_DEFINE_ERROR(InvalidRank);

// gpt
RANKLAB_DEFINE_ERROR(ParamViolation);

// overbeck
RANKLAB_DEFINE_ERROR(DualDimensionNotOne);
RANKLAB_DEFINE_ERROR(RecoveryInconsistent);

// smartattack
RANKLAB_DEFINE_ERROR(StabilizationNotFound);
RANKLAB_DEFINE_ERROR(NoRedundancyFound);

// serialization
RANKLAB_DEFINE_ERROR(ParseError);

#undef RANKLAB_DEFINE_ERROR

}  // namespace ranklab

#endif  // RANKLAB_ERRORS_HPP
