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

#ifndef HYPERLAT_MONTECARLO_H
#define HYPERLAT_MONTECARLO_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlat/css.h"
#include "hyperlat/lattice.h"

namespace hyperlat {

enum class NoiseChannel {
    Z,  // Z flips, detected by vertex checks and matched on the lattice
    X,  // X flips, detected by face checks and matched on the dual
};

struct SimConfig {
    Pattern pattern;
    /// One quotient per lattice size.
    std::vector<std::string> quotient_files;
    std::vector<double> p_grid;
    long trials = 10000;
    std::uint64_t seed = 1;
    /// 0 picks the hardware concurrency.
    int threads = 0;
    NoiseChannel channel = NoiseChannel::Z;
};

/// Throws ConfigInvalid unless p values are strictly increasing in [0, 0.5),
/// trials >= 1 and at least one quotient is given.
void validate_config(const SimConfig &config);

struct SimRow {
    std::string pattern;
    int cells = 0;
    int n = 0;
    int k = 0;
    double p = 0.0;
    long trials = 0;
    long failures = 0;
    double logical_rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

struct SimResult {
    std::vector<SimRow> rows;
};

/// One code to sample: the matching graph and the code whose vertex checks
/// live on its vertices.
struct SimTarget {
    int cells = 0;
    const PeriodicGraph *graph = nullptr;
    const CssCode *code = nullptr;
};

/// The code with the roles of X and Z exchanged, its checks on the dual.
CssCode swap_roles(const CssCode &code, const PeriodicGraph &dual);

/// Logical failures out of `trials` at rate p. Trial t draws from its own
/// generator keyed by (seed, size_index, p_index, t), so the count does not
/// depend on `threads`.
long count_failures(const SimTarget &target, double p, long trials, std::uint64_t seed, int size_index,
                    int p_index, int threads);

/// Builds every lattice in the config and sweeps the p grid.
SimResult run(const SimConfig &config);
/// Sweeps prepared targets.
SimResult run(const SimConfig &config, const std::vector<SimTarget> &targets);

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};
/// 95% Wilson score interval.
WilsonInterval wilson_interval(long failures, long trials);

struct ThresholdEstimate {
    double low = 0.0;
    double high = 0.0;
    /// False when no pair of curves crosses; the interval is then the p hull.
    bool crossed = false;
    std::vector<double> crossings;
};

/// Pairwise crossings of the logical-rate curves, linearly interpolated
/// between adjacent grid points. Throws InsufficientData below 2 sizes or
/// 3 p values.
ThresholdEstimate estimate_threshold(const SimResult &result);

/// Points where the rate drops with p by more than the intervals allow.
std::vector<std::string> monotonicity_warnings(const SimResult &result);

/// CSV with header pattern,N,n,k,p,trials,failures,logical_rate,ci_low,ci_high,seed.
void write_csv(const SimResult &result, std::ostream &out);

std::string pattern_label(const Pattern &pattern);

}  // namespace hyperlat

#endif  // HYPERLAT_MONTECARLO_H
