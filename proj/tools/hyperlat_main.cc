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

// Command-line front end: build a periodic lattice, analyze its code, run
// threshold simulations. Exit codes: 1 usage, 2 invalid input, 3 broken
// invariant, 4 simulation failure.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlat/css.h"
#include "hyperlat/cycles.h"
#include "hyperlat/errors.h"
#include "hyperlat/fuchsian.h"
#include "hyperlat/lattice.h"
#include "hyperlat/montecarlo.h"
#include "hyperlat/pipeline.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace hyperlat {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitSimulation = 4;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutsideDisk:
        case ErrorKind::NonHyperbolicPattern:
        case ErrorKind::ParseError:
        case ErrorKind::RelatorNotIdentity:
        case ErrorKind::NotTransitive:
        case ErrorKind::NotRegular:
        case ErrorKind::SignatureMismatch:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::NonIntegerCount:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::ConfigInvalid:
            return kExitInput;
        default:
            return kExitInvariant;
    }
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error(ErrorKind::ConfigInvalid, "cannot write " + path.string());
    }
}

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

std::pair<int, int> parse_pair(const std::string &text, const char *what) {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream is(text);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) {
        throw Error(ErrorKind::ConfigInvalid, std::string(what) + " must look like p,q; got '" + text + "'");
    }
    return {a, b};
}

// Shared manifest fields; each command adds its own.
class Manifest {
   public:
    explicit Manifest(std::string command) : start_(std::chrono::steady_clock::now()) {
        doc_["command"] = std::move(command);
        doc_["version"] = HYPERLAT_VERSION;
        doc_["inputs"] = json::array();
    }
    void input(const fs::path &path, const std::string &bytes) {
        doc_["inputs"].push_back({{"path", path.string()}, {"sha256", sha256_hex(bytes)}});
    }
    json &operator[](const char *key) {
        return doc_[key];
    }
    void write(const fs::path &path) {
        doc_["wall_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_file(path, doc_.dump(2) + "\n");
    }

   private:
    json doc_;
    std::chrono::steady_clock::time_point start_;
};

std::string counts_line(long v, long e, long f, long h) {
    return std::to_string(v) + "/" + std::to_string(e) + "/" + std::to_string(f) + "/" + std::to_string(h);
}

struct BuildArgs {
    std::string pattern;
    std::string bravais;
    std::string quotient;
    std::string out;
};

int cmd_build(const BuildArgs &args) {
    Manifest manifest("build");
    auto [p, q] = parse_pair(args.pattern, "--pattern");
    auto [pb, qb] = parse_pair(args.bravais, "--bravais");
    BravaisSignature sig = BravaisSignature::from_pq(pb, qb);
    std::string quotient_text = read_file(args.quotient);
    manifest.input(args.quotient, quotient_text);
    QuotientSpec spec = parse_quotient(quotient_text);
    if (!(spec.signature == sig)) {
        throw Error(ErrorKind::SignatureMismatch, "quotient is for {" + std::to_string(spec.signature.p_b) + "," +
                                                      std::to_string(spec.signature.q_b) + "}, not {" +
                                                      std::to_string(pb) + "," + std::to_string(qb) + "}");
    }
    LatticeBuild lattice = build_lattice({p, q}, spec);
    const PeriodicGraph &g = lattice.graph;

    fs::path out(args.out);
    fs::create_directories(out);
    std::ostringstream edges, coords, dot;
    write_edge_list(g, edges);
    write_coordinates(g, coords);
    write_dot(g, dot);
    write_file(out / "edges.txt", edges.str());
    write_file(out / "coords.txt", coords.str());
    write_file(out / "lattice.dot", dot.str());
    write_file(out / "quotient.json", quotient_text);
    json lattice_doc = {{"pattern", {p, q}}, {"bravais", {pb, qb}}, {"index", spec.index}};
    write_file(out / "lattice.json", lattice_doc.dump(2) + "\n");

    const PredictedCounts &pc = lattice.predicted;
    const long faces = static_cast<long>(facial_walks(g).size());
    std::ostringstream report;
    report << "V/E/F/h built     " << counts_line(g.vertex_count, g.edge_count(), faces, euler_genus(g)) << "\n";
    report << "V/E/F/h predicted " << counts_line(pc.vertices, pc.edges, pc.faces, pc.genus) << "\n";
    report << "sites per cell " << g.sites_per_cell << ", cells " << g.cells << ", pbc edges "
           << std::count(g.pbc.begin(), g.pbc.end(), 1) << "\n";
    write_file(out / "report.txt", report.str());
    std::cout << report.str();

    manifest["config"] = {{"pattern", args.pattern}, {"bravais", args.bravais}, {"quotient", args.quotient},
                          {"out", args.out}};
    manifest["counts"] = {{"V", g.vertex_count}, {"E", g.edge_count()}, {"F", faces},
                          {"h", euler_genus(g)}};
    manifest.write(out / "manifest.json");
    return 0;
}

int cmd_analyze(const std::string &dir) {
    Manifest manifest("analyze");
    fs::path in(dir);
    std::string lattice_text = read_file(in / "lattice.json");
    std::string quotient_text = read_file(in / "quotient.json");
    std::string edges_text = read_file(in / "edges.txt");
    manifest.input(in / "lattice.json", lattice_text);
    manifest.input(in / "quotient.json", quotient_text);
    manifest.input(in / "edges.txt", edges_text);

    Pattern pattern;
    try {
        json doc = json::parse(lattice_text);
        pattern = {doc.at("pattern").at(0).get<int>(), doc.at("pattern").at(1).get<int>()};
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("lattice.json: ") + e.what());
    }
    QuotientSpec spec = parse_quotient(quotient_text);

    // The stored edge list must be a valid lattice and must agree with the
    // construction it claims to come from.
    std::istringstream edge_stream(edges_text);
    std::vector<GraphEdge> stored = read_edge_list(edge_stream);
    PredictedCounts pc = predicted_counts(pattern, spec.signature, spec.index);
    std::vector<int> degree(pc.vertices, 0);
    for (const auto &e : stored) {
        if (e.u >= pc.vertices || e.v >= pc.vertices) {
            throw Error(ErrorKind::InvariantViolation, "edge list names vertex beyond V = " + std::to_string(pc.vertices));
        }
        ++degree[e.u];
        ++degree[e.v];
    }
    if (static_cast<long>(stored.size()) != pc.edges) {
        throw Error(ErrorKind::InvariantViolation, "edge list has " + std::to_string(stored.size()) +
                                                       " edges, predicted " + std::to_string(pc.edges));
    }
    for (std::size_t v = 0; v < degree.size(); ++v) {
        if (degree[v] != pattern.q) {
            throw Error(ErrorKind::DegreeViolation, "vertex " + std::to_string(v + 1) + " has degree " +
                                                        std::to_string(degree[v]));
        }
    }
    LatticeBuild lattice = build_lattice(pattern, spec);
    const PeriodicGraph &g = lattice.graph;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (stored[i].u != g.edges[i].u || stored[i].v != g.edges[i].v) {
            throw Error(ErrorKind::InvariantViolation, "edge " + std::to_string(i + 1) + " differs from the rebuilt lattice");
        }
    }

    CodeBuild code = build_code(lattice);
    const int dz = distance_Z(g, code.code.x_logicals);
    const int dx = distance_X(code.dual, code.code.z_logicals);
    std::ostringstream hcb, dual_hcb, code_out;
    write_hcb(code.hcb, hcb);
    write_hcb(code.dual_hcb, dual_hcb);
    write_code(code.code, dz, dx, spec.index, code_out);
    write_file(in / "hcb.txt", hcb.str());
    write_file(in / "dual_hcb.txt", dual_hcb.str());
    write_file(in / "code.txt", code_out.str());
    std::string summary = "[[" + std::to_string(code.code.n) + "," + std::to_string(code.code.k) + "," +
                          std::to_string(dz) + "," + std::to_string(dx) + "]]";
    write_file(in / "summary.txt", summary + "\n");
    std::cout << summary << "\n";

    manifest["config"] = {{"in", dir}};
    manifest["code"] = {{"n", code.code.n}, {"k", code.code.k}, {"dZ", dz}, {"dX", dx}};
    manifest.write(in / "analyze_manifest.json");
    return 0;
}

struct SimulateArgs {
    std::string config;
    std::optional<int> threads;
    std::optional<long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

int cmd_simulate(const SimulateArgs &args) {
    Manifest manifest("simulate");
    fs::path config_path(args.config);
    std::string config_text = read_file(config_path);
    manifest.input(config_path, config_text);

    // Precedence: command-line flag, then HYPERLAT_SEED (seed only), then
    // the config file.
    SimConfig config;
    fs::path out_dir;
    try {
        json doc = json::parse(config_text);
        auto pattern = doc.at("pattern");
        if (pattern.is_string()) {
            auto [p, q] = parse_pair(pattern.get<std::string>(), "pattern");
            config.pattern = {p, q};
        } else {
            config.pattern = {pattern.at(0).get<int>(), pattern.at(1).get<int>()};
        }
        for (const auto &q : doc.at("quotients")) {
            fs::path qp(q.get<std::string>());
            config.quotient_files.push_back((qp.is_relative() ? config_path.parent_path() / qp : qp).string());
        }
        config.p_grid = doc.at("p").get<std::vector<double>>();
        config.trials = doc.value("trials", 10000L);
        config.seed = doc.value("seed", std::uint64_t{1});
        config.threads = doc.value("threads", 0);
        std::string channel = doc.value("channel", std::string("Z"));
        if (channel != "Z" && channel != "X") {
            throw Error(ErrorKind::ConfigInvalid, "channel must be Z or X");
        }
        config.channel = channel == "Z" ? NoiseChannel::Z : NoiseChannel::X;
        fs::path out(doc.value("out", std::string("sim_out")));
        out_dir = out.is_relative() ? config_path.parent_path() / out : out;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ConfigInvalid, std::string("config: ") + e.what());
    }
    if (const char *env = std::getenv("HYPERLAT_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception &) {
            throw Error(ErrorKind::ConfigInvalid, std::string("HYPERLAT_SEED is not an integer: ") + env);
        }
    }
    if (args.seed) {
        config.seed = *args.seed;
    }
    if (args.trials) {
        config.trials = *args.trials;
    }
    if (args.threads) {
        config.threads = *args.threads;
    }
    if (args.out) {
        out_dir = *args.out;
    }
    validate_config(config);
    for (const auto &file : config.quotient_files) {
        manifest.input(file, read_file(file));
    }

    SimResult result;
    try {
        result = run(config);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return kExitSimulation;
    }
    fs::create_directories(out_dir);
    std::ostringstream csv;
    write_csv(result, csv);
    write_file(out_dir / "results.csv", csv.str());

    manifest["config"] = {{"pattern", pattern_label(config.pattern)},
                          {"quotients", config.quotient_files},
                          {"p", config.p_grid},
                          {"trials", config.trials},
                          {"seed", config.seed},
                          {"threads", config.threads},
                          {"channel", config.channel == NoiseChannel::Z ? "Z" : "X"},
                          {"out", out_dir.string()}};
    try {
        ThresholdEstimate th = estimate_threshold(result);
        manifest["threshold"] = {{"low", th.low}, {"high", th.high}, {"crossed", th.crossed},
                                 {"crossings", th.crossings}};
        std::cout << "threshold interval [" << th.low << ", " << th.high << "]"
                  << (th.crossed ? "" : " (no crossing, grid hull)") << "\n";
    } catch (const Error &e) {
        manifest["threshold"] = {{"error", e.what()}};
    }
    manifest["warnings"] = monotonicity_warnings(result);
    manifest.write(out_dir / "manifest.json");
    std::cout << "wrote " << (out_dir / "results.csv").string() << "\n";
    return 0;
}

}  // namespace
}  // namespace hyperlat

int main(int argc, char **argv) {
    using namespace hyperlat;
    CLI::App app{"Hyperbolic lattice surface codes"};
    app.set_version_flag("--version", std::string(HYPERLAT_VERSION));
    app.require_subcommand(1);

    BuildArgs build;
    auto *build_cmd = app.add_subcommand("build", "Construct a periodic lattice from a quotient");
    build_cmd->add_option("--pattern", build.pattern, "Schlafli symbol p,q")->required();
    build_cmd->add_option("--bravais", build.bravais, "Bravais lattice pB,qB")->required();
    build_cmd->add_option("--quotient", build.quotient, "Quotient JSON file")->required();
    build_cmd->add_option("--out", build.out, "Output directory")->required();

    std::string analyze_dir;
    auto *analyze_cmd = app.add_subcommand("analyze", "Cycle bases, code and distances of a built lattice");
    analyze_cmd->add_option("--in", analyze_dir, "Directory written by build")->required();

    SimulateArgs sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo logical error rates");
    sim_cmd->add_option("--config", sim.config, "Simulation config JSON")->required();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads (default: logical cores)");
    sim_cmd->add_option("--trials", sim.trials, "Trials per point");
    sim_cmd->add_option("--seed", sim.seed, "Master seed");
    sim_cmd->add_option("--out", sim.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*build_cmd) {
            return cmd_build(build);
        }
        if (*analyze_cmd) {
            return cmd_analyze(analyze_dir);
        }
        return cmd_simulate(sim);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSimulation;
    }
}
