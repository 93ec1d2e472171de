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

#include "hyperlat/errors.h"

namespace hyperlat {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutsideDisk:
            return "OutsideDisk";
        case ErrorKind::NonHyperbolicPattern:
            return "NonHyperbolicPattern";
        case ErrorKind::DistanceMismatch:
            return "DistanceMismatch";
        case ErrorKind::RelatorViolation:
            return "RelatorViolation";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::RelatorNotIdentity:
            return "RelatorNotIdentity";
        case ErrorKind::NotTransitive:
            return "NotTransitive";
        case ErrorKind::NotRegular:
            return "NotRegular";
        case ErrorKind::SignatureMismatch:
            return "SignatureMismatch";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::CoverageFailure:
            return "CoverageFailure";
        case ErrorKind::DegreeViolation:
            return "DegreeViolation";
        case ErrorKind::NonIntegerCount:
            return "NonIntegerCount";
        case ErrorKind::NotTwoManifold:
            return "NotTwoManifold";
        case ErrorKind::Disconnected:
            return "Disconnected";
        case ErrorKind::BasisIncomplete:
            return "BasisIncomplete";
        case ErrorKind::InvariantViolation:
            return "InvariantViolation";
        case ErrorKind::PairingDegenerate:
            return "PairingDegenerate";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::OddDefectCount:
            return "OddDefectCount";
        case ErrorKind::ResidualHasSyndrome:
            return "ResidualHasSyndrome";
        case ErrorKind::InsufficientData:
            return "InsufficientData";
        case ErrorKind::ConfigInvalid:
            return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {
}

}  // namespace hyperlat
