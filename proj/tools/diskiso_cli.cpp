// Batch front end: gen, solve, oracle, verify, ratio.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"
#include "diskiso/instance_io.hpp"
#include "diskiso/oracle.hpp"
#include "diskiso/recsep.hpp"
#include "diskiso/two_point.hpp"

using namespace diskiso;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kParse = 1, kGeneration = 2, kSelfCheck = 3, kTooLarge = 4, kNotSeparated = 5 };

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidInstance:
            return kParse;
        case ErrorKind::GenerationFailed:
            return kGeneration;
        case ErrorKind::TooLarge:
            return kTooLarge;
        case ErrorKind::NotSeparated:
            return kNotSeparated;
        default:
            return kSelfCheck;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json points_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (Point p : pts) arr.push_back({p.x, p.y});
    return arr;
}

std::vector<Disk> select(const std::vector<Disk>& disks, const std::vector<int>& ids) {
    std::vector<Disk> out;
    for (const Disk& d : disks) {
        if (std::find(ids.begin(), ids.end(), d.id) != ids.end()) out.push_back(d);
    }
    return out;
}

struct PairVerdict {
    std::size_t p, q;
    bool exact;
    std::optional<bool> grid;  // empty when the raster could not settle
};

std::vector<PairVerdict> check_pairs(const std::vector<Disk>& chosen, const std::vector<Point>& points,
                                     const Tolerance& tol) {
    const UnionBoundary ub(chosen, tol);
    std::vector<PairVerdict> out;
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t q = p + 1; q < points.size(); ++q) {
            PairVerdict v{p, q, separates(ub, points[p], points[q]), std::nullopt};
            try {
                v.grid = grid_flood_separates(chosen, points[p], points[q]);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ResolutionExhausted) throw;
            }
            out.push_back(v);
        }
    }
    return out;
}

/// 0 when every pair is separated and the verifiers agree.
int self_check(const std::vector<Disk>& chosen, const std::vector<Point>& points, const Tolerance& tol) {
    for (const auto& v : check_pairs(chosen, points, tol)) {
        if (!v.exact || (v.grid && *v.grid != v.exact)) {
            std::cerr << "self-verification failed on pair (" << v.p << ", " << v.q << ")\n";
            return kSelfCheck;
        }
        if (!v.grid) std::cerr << "warning: grid verifier undecided on pair (" << v.p << ", " << v.q << ")\n";
    }
    return kOk;
}

struct GenArgs {
    std::size_t n = 20, k = 4;
    double box = 10.0;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const Instance inst = generate_random_instance(a.n, a.k, a.box, a.seed);
    const std::string text = write_instance(inst);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        write_file(a.out, text);
        std::cout << "wrote " << a.out << ": " << inst.disks.size() << " disks, " << inst.points.size()
                  << " points\n";
    }
    return kOk;
}

struct SolveArgs {
    std::string in, out_json, out_svg;
    std::vector<std::size_t> two_point;
};

int run_solve(const SolveArgs& a) {
    const Instance inst = parse_instance(read_file(a.in));
    json doc;
    SvgOverlay overlay;
    std::vector<int> ids;
    std::vector<Point> checked_points = inst.points;

    if (!a.two_point.empty()) {
        const std::size_t s = a.two_point[0], t = a.two_point[1];
        if (s >= inst.points.size() || t >= inst.points.size() || s == t) {
            throw Error(ErrorKind::InvalidInstance, "--two-point needs two distinct point indices");
        }
        const auto r = separate_two_points(inst.disks, inst.points[s], inst.points[t], inst.tol);
        ids = r.ids;
        doc["mode"] = "two_point";
        doc["s"] = s;
        doc["t"] = t;
        doc["sigma"] = r.sigma.disk_ids;
        doc["pi"] = points_json(r.pi.waypoints);
        doc["cycle_disk"] = r.cycle.disk_id;
        doc["cycle_disks"] = r.cycle.disk_ids;
        overlay.polylines.push_back(r.pi.waypoints);
        std::vector<Point> path;
        for (std::size_t piece : r.cycle.pieces) path.push_back(r.pieces.pieces[piece].representative);
        overlay.piece_paths.push_back(path);
        checked_points = {inst.points[s], inst.points[t]};
    } else {
        const auto r = separate_points(inst.disks, inst.points, RecSepOptions{inst.tol});
        ids = r.ids;
        doc["mode"] = "all_pairs";
        doc["cover_ids"] = r.cover.ids;
        doc["separator_ids"] = r.separator.ids;
        doc["two_point_calls"] = r.separator.two_point_calls;
        json trace = json::array();
        for (const auto& step : r.separator.trace) {
            trace.push_back({{"depth", step.depth},
                             {"group", step.group},
                             {"s", step.s},
                             {"t", step.t},
                             {"chosen", step.chosen},
                             {"partition_sizes", step.partition_sizes},
                             {"pi", points_json(step.pi)}});
            overlay.polylines.push_back(step.pi);
        }
        doc["trace"] = trace;
    }
    doc["ids"] = ids;
    doc["size"] = ids.size();

    const int verdict = self_check(select(inst.disks, ids), checked_points, inst.tol);
    doc["verified"] = verdict == kOk;

    const std::string text = doc.dump(2) + "\n";
    if (a.out_json.empty()) {
        std::cout << text;
    } else {
        write_file(a.out_json, text);
    }
    if (!a.out_svg.empty()) write_file(a.out_svg, render_svg(inst, ids, &overlay));
    if (!a.out_json.empty()) {
        std::cout << "size " << ids.size() << (verdict == kOk ? " (verified)" : " (FAILED verification)")
                  << "\n";
    }
    return verdict;
}

struct OracleArgs {
    std::string in;
    std::size_t max_n = 20;
};

int run_oracle(const OracleArgs& a) {
    const Instance inst = parse_instance(read_file(a.in));
    OracleOptions options;
    options.max_n = a.max_n;
    options.tol = inst.tol;
    const auto r = exact_min_separator(inst.disks, inst.points, options);
    std::cout << "size " << r.ids.size() << "\nids";
    for (int id : r.ids) std::cout << ' ' << id;
    std::cout << "\nsubsets_checked " << r.subsets_checked << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string in;
    std::vector<int> ids;
};

int run_verify(const VerifyArgs& a) {
    const Instance inst = parse_instance(read_file(a.in));
    for (int id : a.ids) {
        if (std::none_of(inst.disks.begin(), inst.disks.end(), [&](const Disk& d) { return d.id == id; })) {
            throw Error(ErrorKind::InvalidInstance, "unknown disk id " + std::to_string(id));
        }
    }
    bool all = true, agree = true;
    for (const auto& v : check_pairs(select(inst.disks, a.ids), inst.points, inst.tol)) {
        std::cout << "pair " << v.p << ' ' << v.q << " arrangement=" << (v.exact ? "separated" : "connected")
                  << " grid=" << (v.grid ? (*v.grid ? "separated" : "connected") : "undecided") << "\n";
        all = all && v.exact;
        agree = agree && v.grid && *v.grid == v.exact;
    }
    if (!agree) {
        std::cout << "verifiers disagree\n";
        return kSelfCheck;
    }
    std::cout << (all ? "all pairs separated\n" : "not separated\n");
    return all ? kOk : kNotSeparated;
}

struct RatioArgs {
    std::size_t trials = 10, n = 10, k = 2, max_n = 20;
    double box = 5.0;
    std::uint64_t seed0 = 1;
    std::string out_csv;
};

int run_ratio(const RatioArgs& a) {
    // Seeds advance past generation failures until `trials` instances exist.
    std::vector<Instance> instances;
    const std::uint64_t seed_limit = a.seed0 + 20 * a.trials + 100;
    for (std::uint64_t seed = a.seed0; instances.size() < a.trials; ++seed) {
        if (seed >= seed_limit) {
            throw Error(ErrorKind::GenerationFailed, "too many seeds failed to produce an instance");
        }
        try {
            instances.push_back(generate_random_instance(a.n, a.k, a.box, seed));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::GenerationFailed) throw;
        }
    }

    std::vector<ExperimentRecord> records(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    const long count = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            const Instance& inst = instances[i];
            ExperimentRecord& rec = records[i];
            rec.instance = "n" + std::to_string(a.n) + "-seed" + std::to_string(inst.seed);
            rec.n = inst.disks.size();
            rec.k = inst.points.size();
            const auto t0 = std::chrono::steady_clock::now();
            RecSepOptions options{inst.tol, Execution::Serial};
            rec.alg_size = separate_points(inst.disks, inst.points, options).ids.size();
            rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (inst.disks.size() <= a.max_n) {
                OracleOptions oo;
                oo.max_n = a.max_n;
                oo.tol = inst.tol;
                oo.execution = Execution::Serial;
                rec.opt_size = exact_min_separator(inst.disks, inst.points, oo).ids.size();
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    bool need_header = true;
    if (std::ifstream probe(a.out_csv); probe && probe.peek() != std::ifstream::traits_type::eof()) {
        need_header = false;
    }
    std::ofstream out(a.out_csv, std::ios::app);
    if (!out) throw std::runtime_error("cannot write " + a.out_csv);
    if (need_header) out << kCsvHeader << "\n";
    std::vector<double> ratios;
    for (const auto& rec : records) {
        out << to_csv_row(rec) << "\n";
        if (auto r = rec.ratio()) ratios.push_back(*r);
    }

    std::cout << "trials " << records.size();
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        const std::size_t m = ratios.size();
        const double median = m % 2 ? ratios[m / 2] : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
        std::cout << " max_ratio " << ratios.back() << " median_ratio " << median;
    } else if (!records.empty()) {
        std::cout << " (oracle skipped)";
    }
    std::cout << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isolating points with disks: generator, solver, exact oracle and verifiers."};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--n", gen.n, "number of unit disks")->required();
    gen_cmd->add_option("--k", gen.k, "requested number of points")->required();
    gen_cmd->add_option("--box", gen.box, "side of the square holding disk centres")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
    gen_cmd->add_option("--out", gen.out, "instance file (stdout if omitted)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "separate every pair of points");
    solve_cmd->add_option("--in", solve.in, "instance file")->required();
    solve_cmd->add_option("--out-json", solve.out_json, "result file (stdout if omitted)");
    solve_cmd->add_option("--out-svg", solve.out_svg, "drawing of the solution");
    solve_cmd->add_option("--two-point", solve.two_point, "separate only points s_idx and t_idx")
        ->expected(2);

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum separator by enumeration");
    oracle_cmd->add_option("--in", oracle.in, "instance file")->required();
    oracle_cmd->add_option("--max-n", oracle.max_n, "refuse instances with more disks");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check that a disk subset separates all pairs");
    verify_cmd->add_option("--in", verify.in, "instance file")->required();
    verify_cmd->add_option("--ids", verify.ids, "disk ids, comma separated")->delimiter(',');

    RatioArgs ratio;
    auto* ratio_cmd = app.add_subcommand("ratio", "solver size versus exact optimum on random instances");
    ratio_cmd->add_option("--trials", ratio.trials)->required();
    ratio_cmd->add_option("--n", ratio.n)->required();
    ratio_cmd->add_option("--k", ratio.k)->required();
    ratio_cmd->add_option("--box", ratio.box)->required();
    ratio_cmd->add_option("--seed0", ratio.seed0)->required();
    ratio_cmd->add_option("--out-csv", ratio.out_csv)->required();
    ratio_cmd->add_option("--max-n", ratio.max_n, "skip the oracle above this many disks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*oracle_cmd) return run_oracle(oracle);
        if (*verify_cmd) return run_verify(verify);
        if (*ratio_cmd) return run_ratio(ratio);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSelfCheck;
    }
    return kOk;
}
