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

#ifndef HYPERLAT_PIPELINE_H
#define HYPERLAT_PIPELINE_H

#include <optional>

#include "hyperlat/css.h"
#include "hyperlat/cycles.h"
#include "hyperlat/fuchsian.h"
#include "hyperlat/lattice.h"

namespace hyperlat {

/// Everything derived from (pattern, Bravais lattice, quotient).
struct LatticeBuild {
    Pattern pattern;
    GeneratorSet generators;
    UnitCell cell;
    QuotientSpec quotient;
    PeriodicGraph graph;
    PredictedCounts predicted;
};

struct CodeBuild {
    PeriodicGraph open;
    PeriodicGraph dual;
    HyperbolicCycleBasis hcb;
    HyperbolicCycleBasis dual_hcb;
    CssCode code;
};

/// Builds the periodic lattice and checks its counts against the
/// prediction. Throws InvariantViolation on a mismatch.
LatticeBuild build_lattice(const Pattern &pattern, const QuotientSpec &quotient);

/// Cycle bases of the lattice and its dual, then the code.
CodeBuild build_code(const LatticeBuild &lattice);

}  // namespace hyperlat

#endif  // HYPERLAT_PIPELINE_H
