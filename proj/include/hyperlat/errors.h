// Copyright 2026 The Hyperlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERLAT_ERRORS_H
#define HYPERLAT_ERRORS_H

#include <stdexcept>
#include <string>

namespace hyperlat {

enum class ErrorKind {
    OutsideDisk,
    NonHyperbolicPattern,
    DistanceMismatch,
    RelatorViolation,
    ParseError,
    RelatorNotIdentity,
    NotTransitive,
    NotRegular,
    SignatureMismatch,
    IndexOutOfRange,
    CoverageFailure,
    DegreeViolation,
    NonIntegerCount,
    NotTwoManifold,
    Disconnected,
    BasisIncomplete,
    InvariantViolation,
    PairingDegenerate,
    DimensionMismatch,
    OddDefectCount,
    ResidualHasSyndrome,
    InsufficientData,
    ConfigInvalid,
};

/// Canonical name of an error kind, e.g. "RelatorNotIdentity".
const char *error_kind_name(ErrorKind kind);

/// All library failures are reported as this exception. `what()` is
/// prefixed with the kind name so command-line users see it verbatim.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace hyperlat

#endif  // HYPERLAT_ERRORS_H
