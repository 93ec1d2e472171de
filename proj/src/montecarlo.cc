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

#include "hyperlat/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "hyperlat/decoder.h"
#include "hyperlat/errors.h"
#include "hyperlat/pipeline.h"

namespace hyperlat {

namespace {

constexpr double kWilsonZ = 1.959963984540054;
constexpr long kTrialBlock = 64;

std::mt19937_64 trial_rng(std::uint64_t seed, int size_index, int p_index, long trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(size_index), static_cast<std::uint32_t>(p_index),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
    return std::mt19937_64(seq);
}

bool run_trial(const SimTarget &target, double p, std::mt19937_64 &rng) {
    const CssCode &code = *target.code;
    EdgeVector error(code.n);
    for (int e = 0; e < code.n; ++e) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) {
            error.set(e);
        }
    }
    Syndrome s = extract_syndrome(code, error);
    Matching m = decode(*target.graph, s);
    return residual_is_logical(code, error, m.correction);
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

std::string pattern_label(const Pattern &pattern) {
    return "{" + std::to_string(pattern.p) + "," + std::to_string(pattern.q) + "}";
}

void validate_config(const SimConfig &config) {
    auto fail = [](const std::string &what) { throw Error(ErrorKind::ConfigInvalid, what); };
    if (config.quotient_files.empty()) {
        fail("no quotient files");
    }
    if (config.p_grid.empty()) {
        fail("empty p grid");
    }
    for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
        double p = config.p_grid[i];
        if (!(p >= 0.0 && p < 0.5)) {
            fail("p = " + format_double(p) + " outside [0, 0.5)");
        }
        if (i > 0 && !(p > config.p_grid[i - 1])) {
            fail("p grid not strictly increasing at " + format_double(p));
        }
    }
    if (config.trials < 1) {
        fail("trials must be at least 1");
    }
    if (config.threads < 0) {
        fail("threads must be non-negative");
    }
}

CssCode swap_roles(const CssCode &code, const PeriodicGraph &dual) {
    CssCode s;
    s.n = code.n;
    s.k = code.k;
    s.face_degree = code.vertex_degree;
    s.vertex_degree = code.face_degree;
    s.hz = code.hx;
    s.hx = code.hz;
    s.z_logicals = code.x_logicals;
    s.x_logicals = code.z_logicals;
    s.edge_checks = dual.edges;
    s.hz_span = EchelonBasis(code.n);
    for (const auto &row : s.hz) {
        s.hz_span.add(row);
    }
    return s;
}

long count_failures(const SimTarget &target, double p, long trials, std::uint64_t seed, int size_index,
                    int p_index, int threads) {
    if (p <= 0.0) {
        return 0;
    }
    int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const long blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    workers = static_cast<int>(std::min<long>(workers, blocks));
    std::atomic<long> next_block{0};
    std::vector<long> failures(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](int w) {
        try {
            for (long b = next_block++; b < blocks; b = next_block++) {
                for (long t = b * kTrialBlock; t < std::min(trials, (b + 1) * kTrialBlock); ++t) {
                    auto rng = trial_rng(seed, size_index, p_index, t);
                    failures[w] += run_trial(target, p, rng) ? 1 : 0;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
            next_block = blocks;
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    long total = 0;
    for (long f : failures) {
        total += f;
    }
    return total;
}

SimResult run(const SimConfig &config, const std::vector<SimTarget> &targets) {
    validate_config(config);
    SimResult result;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const SimTarget &t = targets[i];
        for (std::size_t j = 0; j < config.p_grid.size(); ++j) {
            SimRow row;
            row.pattern = pattern_label(config.pattern);
            row.cells = t.cells;
            row.n = t.code->n;
            row.k = t.code->k;
            row.p = config.p_grid[j];
            row.trials = config.trials;
            row.failures = count_failures(t, row.p, config.trials, config.seed, static_cast<int>(i),
                                          static_cast<int>(j), config.threads);
            row.logical_rate = static_cast<double>(row.failures) / static_cast<double>(row.trials);
            WilsonInterval ci = wilson_interval(row.failures, row.trials);
            row.ci_low = ci.low;
            row.ci_high = ci.high;
            row.seed = config.seed;
            result.rows.push_back(row);
        }
    }
    return result;
}

SimResult run(const SimConfig &config) {
    validate_config(config);
    std::vector<std::unique_ptr<LatticeBuild>> lattices;
    std::vector<std::unique_ptr<CodeBuild>> codes;
    std::vector<std::unique_ptr<CssCode>> swapped;
    std::vector<SimTarget> targets;
    for (const auto &file : config.quotient_files) {
        QuotientSpec spec = load_quotient(file);
        lattices.push_back(std::make_unique<LatticeBuild>(build_lattice(config.pattern, spec)));
        codes.push_back(std::make_unique<CodeBuild>(build_code(*lattices.back())));
        SimTarget t;
        t.cells = spec.index;
        if (config.channel == NoiseChannel::Z) {
            t.graph = &lattices.back()->graph;
            t.code = &codes.back()->code;
        } else {
            swapped.push_back(std::make_unique<CssCode>(swap_roles(codes.back()->code, codes.back()->dual)));
            t.graph = &codes.back()->dual;
            t.code = swapped.back().get();
        }
        targets.push_back(t);
    }
    return run(config, targets);
}

WilsonInterval wilson_interval(long failures, long trials) {
    if (trials <= 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = kWilsonZ * kWilsonZ;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = kWilsonZ * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // The bounds are exact at the ends of the range.
    return {failures == 0 ? 0.0 : std::max(0.0, center - half), failures == trials ? 1.0 : std::min(1.0, center + half)};
}

ThresholdEstimate estimate_threshold(const SimResult &result) {
    std::map<int, std::vector<const SimRow *>> by_size;
    for (const auto &row : result.rows) {
        by_size[row.cells].push_back(&row);
    }
    if (by_size.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "need at least two lattice sizes, have " + std::to_string(by_size.size()));
    }
    std::vector<double> grid;
    for (const auto *row : by_size.begin()->second) {
        grid.push_back(row->p);
    }
    if (grid.size() < 3) {
        throw Error(ErrorKind::InsufficientData, "need at least three p values, have " + std::to_string(grid.size()));
    }
    std::vector<std::vector<double>> curves;
    for (auto &[cells, rows] : by_size) {
        if (rows.size() != grid.size()) {
            throw Error(ErrorKind::InsufficientData, "size N = " + std::to_string(cells) + " misses grid points");
        }
        std::vector<double> rates;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j]->p != grid[j]) {
                throw Error(ErrorKind::InsufficientData, "sizes use different p grids");
            }
            rates.push_back(rows[j]->logical_rate);
        }
        curves.push_back(std::move(rates));
    }
    ThresholdEstimate est;
    for (std::size_t a = 0; a < curves.size(); ++a) {
        for (std::size_t b = a + 1; b < curves.size(); ++b) {
            // Sign changes of the difference, skipping points where the
            // curves coincide.
            long last = -1;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                double d = curves[b][j] - curves[a][j];
                if (d == 0.0) {
                    continue;
                }
                if (last >= 0) {
                    double d0 = curves[b][last] - curves[a][last];
                    if ((d0 < 0.0) != (d < 0.0)) {
                        est.crossings.push_back(grid[last] + (grid[j] - grid[last]) * d0 / (d0 - d));
                    }
                }
                last = static_cast<long>(j);
            }
        }
    }
    if (est.crossings.empty()) {
        est.low = grid.front();
        est.high = grid.back();
        return est;
    }
    est.crossed = true;
    std::sort(est.crossings.begin(), est.crossings.end());
    est.low = est.crossings.front();
    est.high = est.crossings.back();
    return est;
}

std::vector<std::string> monotonicity_warnings(const SimResult &result) {
    std::vector<std::string> warnings;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        const SimRow &prev = result.rows[i - 1];
        const SimRow &cur = result.rows[i];
        if (prev.cells == cur.cells && cur.p > prev.p && cur.ci_high < prev.ci_low) {
            warnings.push_back("N=" + std::to_string(cur.cells) + ": rate falls from " + format_double(prev.logical_rate) +
                               " at p=" + format_double(prev.p) + " to " + format_double(cur.logical_rate) +
                               " at p=" + format_double(cur.p));
        }
    }
    return warnings;
}

void write_csv(const SimResult &result, std::ostream &out) {
    std::ostringstream os;
    os << "pattern,N,n,k,p,trials,failures,logical_rate,ci_low,ci_high,seed\n";
    for (const auto &r : result.rows) {
        os << '"' << r.pattern << "\"," << r.cells << ',' << r.n << ',' << r.k << ',' << format_double(r.p) << ','
           << r.trials << ',' << r.failures << ',' << format_double(r.logical_rate) << ',' << format_double(r.ci_low)
           << ',' << format_double(r.ci_high) << ',' << r.seed << '\n';
    }
    out << os.str();
}

}  // namespace hyperlat
