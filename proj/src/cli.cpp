#include "bettipair/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bettipair/certificate.hpp"
#include "bettipair/construction.hpp"
#include "bettipair/graded_model.hpp"

namespace bettipair {

namespace {

Sequence parse_hvector(const std::string& text) {
    Sequence s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        i64 v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
        s.values.push_back(v);
    }
    if (s.values.empty()) throw std::invalid_argument("empty h-vector");
    return s;
}

std::pair<i64, i64> parse_ci(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected a,b");
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
}

int cmd_analyze(const std::string& hvec_text, const std::string& ci_text, std::ostream& out,
                std::ostream& err) {
    Sequence dh;
    std::optional<std::pair<i64, i64>> ci;
    try {
        dh = parse_hvector(hvec_text);
        if (!ci_text.empty()) ci = parse_ci(ci_text);
    } catch (const std::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    }
    try {
        AnalyzeResult a = analyze(dh, ci);
        out << "admissible\n";
        out << "d = " << a.inv.d << ", t = " << a.inv.t << ", s = " << a.inv.s << " ("
            << (a.inv.d_even ? "even" : "odd") << " d), CI type (" << a.inv.ci_type.first << ","
            << a.inv.ci_type.second << ")\n";
        if (!a.inv.tail.empty()) {
            out << "tail:";
            for (i64 b : a.inv.tail) out << ' ' << b;
            out << '\n';
        }
        out << a.table.render();
        out << "target |Z| = " << a.h_bar.eventual.value_or(0) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "inadmissible: " << e.what() << "\n";
        return 2;
    }
}

void print_wlp(std::ostream& out, const std::string& label, const WlpReport& r) {
    out << label << ": " << (r.holds ? "WLP holds" : "WLP fails") << '\n';
    out << "  deg   dim_i dim_i+1 rank\n";
    for (const auto& row : r.rows)
        out << "  " << row.degree << "\t" << row.dim_from << "\t" << row.dim_to << "\t"
            << row.best_rank << '\n';
    if (!r.holds) {
        out << "  failing degrees:";
        for (int d : r.failing_degrees) out << ' ' << d;
        out << '\n';
    }
}

int cmd_verify(const std::string& hvec_text, i64 prime, std::uint64_t seed,
               const std::string& json_path, const std::string& points_dir, std::ostream& out,
               std::ostream& err) {
    Sequence dh;
    try {
        dh = parse_hvector(hvec_text);
    } catch (const std::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    }

    BuildConfig cfg;
    cfg.prime = prime;
    cfg.seed = seed;

    auto t0 = std::chrono::steady_clock::now();
    WitnessPair w;
    try {
        w = build_witness_pair(dh, cfg);
    } catch (const RegularSequenceRetryExhaustedError& e) {
        err << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const TruncationSamplingExhaustedError& e) {
        err << "construction failed: " << e.what() << "\n";
        return 3;
    } catch (const ConstraintCheckFailedError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "inadmissible: " << e.what() << "\n";
        return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    const auto& inv = w.analysis.inv;
    out << "invariants: d = " << inv.d << ", t = " << inv.t << ", s = " << inv.s << '\n';
    out << w.analysis.table.render();
    out << "|Z| = " << w.z.points.size() << ", |Z'| = " << w.zprime.points.size() << " ("
        << w.zprime.yprime.size() << " lifted + "
        << (w.zprime.points.size() - w.zprime.yprime.size()) << " on "
        << w.zprime.v_lines.size() << " lines)\n\n";
    out << "Betti diagram of R/I_Z:\n" << w.betti_z.render() << '\n';
    out << "Betti diagram of R/I_Z':\n" << w.betti_zprime.render() << '\n';
    print_wlp(out, "Z", w.wlp_z);
    print_wlp(out, "Z'", w.wlp_zprime);
    out << "\nchecks:\n";
    for (const auto& c : w.checks)
        out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.details << '\n';
    out << "verdict: "
        << (w.verdict.strongly_incomparable ? "STRONGLY INCOMPARABLE" : "common descendant exists")
        << '\n';
    out << "wall clock: " << ms << " ms\n";

    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << certificate_bytes(w);
    }
    if (!points_dir.empty()) {
        std::ofstream fz(points_dir + "/z_points.json");
        fz << point_set_to_json(w.z.points).dump(2) << '\n';
        std::ofstream fzp(points_dir + "/zprime_points.json");
        fzp << point_set_to_json(w.zprime.points).dump(2) << '\n';
    }
    return w.all_checks_pass ? 0 : 4;
}

int cmd_macaulay(bool expand, i64 value, i64 degree, std::ostream& out, std::ostream& err) {
    try {
        if (expand) {
            out << binomial_expansion(value, degree).str() << '\n';
        } else {
            out << macaulay_bound(value, degree) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_recheck(const std::string& z_path, const std::string& zp_path, i64 prime,
                std::ostream& out, std::ostream& err) {
    try {
        PrimeField F(prime);
        auto load = [](const std::string& path) {
            std::ifstream f(path);
            if (!f) throw std::runtime_error("cannot open " + path);
            json j;
            f >> j;
            return point_set_from_json(j);
        };
        PointSet z = load(z_path), zp = load(zp_path);
        auto report = [&](const std::string& label, const PointSet& pts) {
            int maxdeg = 2;
            std::unique_ptr<EvaluationModel> m;
            for (;;) {
                m = std::make_unique<EvaluationModel>(pts, F, maxdeg);
                if (m->dim(maxdeg) == pts.size() && m->dim(maxdeg - 1) == pts.size()) break;
                ++maxdeg;
            }
            int jmax = maxdeg + 2;
            EvaluationModel model(pts, F, jmax + 1);
            Sequence h = hilbert_function(model, jmax + 1);
            BettiDiagram b = koszul_betti(model, jmax);
            out << label << ": " << pts.size() << " points\n";
            out << "hilbert: " << h.str() << '\n';
            out << b.render() << '\n';
            return b;
        };
        BettiDiagram bz = report("Z", z);
        BettiDiagram bzp = report("Z'", zp);
        bz.ncols = 4;
        bzp.ncols = 4;
        auto verdict = strongly_incomparable(bz, bzp);
        out << "verdict: "
            << (verdict.strongly_incomparable ? "STRONGLY INCOMPARABLE" : "common descendant exists")
            << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "recheck failed: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constructive witnesses for Hilbert functions whose Betti-diagram poset has no minimum"};
    app.require_subcommand(1);

    std::string hvec, ci_text, json_path, points_dir, z_path, zp_path;
    i64 prime = 32003, value = 0, degree = 0;
    std::uint64_t seed = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "validate an h-vector and print the difference table");
    analyze_cmd->add_option("--hvector", hvec, "comma-separated first difference")->required();
    analyze_cmd->add_option("--ci", ci_text, "override the complete intersection type, e.g. 4,7");

    auto* verify_cmd = app.add_subcommand("verify", "build and certify a witness pair");
    verify_cmd->add_option("--hvector", hvec, "comma-separated first difference")->required();
    verify_cmd->add_option("--prime", prime, "field characteristic (default 32003)");
    verify_cmd->add_option("--seed", seed, "randomness seed (default 0)");
    verify_cmd->add_option("--json", json_path, "write the JSON certificate here");
    verify_cmd->add_option("--points-out", points_dir, "write point-set files into this directory");

    auto* macaulay_cmd = app.add_subcommand("macaulay", "binomial expansion utilities");
    auto* expand_cmd = macaulay_cmd->add_subcommand("expand", "i-binomial expansion");
    auto* bound_cmd = macaulay_cmd->add_subcommand("bound", "Macaulay growth bound a^<i>");
    for (auto* c : {expand_cmd, bound_cmd}) {
        c->add_option("--value", value, "the integer a")->required();
        c->add_option("--degree", degree, "the degree i")->required();
    }
    macaulay_cmd->require_subcommand(1);

    auto* recheck_cmd = app.add_subcommand("recheck", "recompute invariants from point-set files");
    recheck_cmd->add_option("--z", z_path, "Z point file")->required();
    recheck_cmd->add_option("--zprime", zp_path, "Z' point file")->required();
    recheck_cmd->add_option("--prime", prime, "field characteristic (default 32003)");

    std::vector<std::string> argv = args; // CLI11 consumes a reversed vector
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.get_name() << '\n';
        return 1;
    }

    if (*analyze_cmd) return cmd_analyze(hvec, ci_text, out, err);
    if (*verify_cmd) return cmd_verify(hvec, prime, seed, json_path, points_dir, out, err);
    if (*macaulay_cmd) return cmd_macaulay(expand_cmd->parsed(), value, degree, out, err);
    if (*recheck_cmd) return cmd_recheck(z_path, zp_path, prime, out, err);
    return 1;
}

} // namespace bettipair
