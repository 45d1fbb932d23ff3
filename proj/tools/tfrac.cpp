// Command-line front end: solve / verify / converge / report.
//
// Exit codes: 0 ok, 2 input error (usage, file, invalid parameters),
// 3 solver error, 4 verification suite failure.

#include "tfrac/fode.hpp"
#include "tfrac/problem_file.hpp"
#include "tfrac/spectral.hpp"
#include "tfrac/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << body;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

struct Overrides {
    std::optional<double> alpha;
    std::optional<int> N;
    std::optional<int> K;
    std::optional<double> T;
    std::optional<std::string> solver;

    void apply(tfrac::ProblemSpec& spec) const {
        if (alpha) spec.alpha = *alpha;
        if (N) spec.N = *N;
        if (K) spec.K = *K;
        if (T) spec.T = *T;
        if (solver) spec.solver = tfrac::parse_solver_id(*solver);
        spec.validate();
    }
};

json meta_block(const tfrac::ProblemFile& pf) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(pf.hash));
    json m;
    m["alpha"] = pf.spec.alpha;
    m["T"] = pf.spec.T;
    m["N"] = pf.spec.N;
    m["K"] = pf.spec.K;
    m["domain"] =
        pf.spec.domain.kind == tfrac::SpatialDomain::Kind::interval ? "interval" : "rectangle";
    m["solver"] = tfrac::solver_name(pf.spec.solver);
    m["spec_hash"] = hash;
    m["version"] = "1.0.0";
    return m;
}

int cmd_solve(const tfrac::ProblemFile& pf, const std::string& out_path) {
    const tfrac::ProblemSpec& spec = pf.spec;
    const tfrac::SpectralField field = tfrac::solve_field(spec);

    // Modal coefficient trajectories.
    std::string csv = "t";
    for (int k = 0; k < field.basis.count(); ++k) csv += ",c" + std::to_string(k + 1);
    csv += "\n";
    const tfrac::TimeGrid grid = field.coeffs.at(0).grid;
    for (int n = 0; n <= grid.N; ++n) {
        csv += fmt17(grid.node(n));
        for (int k = 0; k < field.basis.count(); ++k) csv += "," + fmt17(field.coeffs[k][n]);
        csv += "\n";
    }
    write_text(out_path, csv);

    // Reconstructed field at the final time on a fixed sampling lattice.
    const bool is_2d = spec.domain.kind == tfrac::SpatialDomain::Kind::rectangle;
    const int P = 33;
    std::string fcsv = is_2d ? "x,y,u\n" : "x,u\n";
    for (int i = 0; i <= P; ++i) {
        const double x = spec.domain.Lx * i / P;
        if (is_2d) {
            for (int j = 0; j <= P; ++j) {
                const double y = spec.domain.Ly * j / P;
                fcsv += fmt17(x) + "," + fmt17(y) + "," +
                        fmt17(tfrac::evaluate_field(field, {x, y}, spec.T)) + "\n";
            }
        } else {
            fcsv += fmt17(x) + "," + fmt17(tfrac::evaluate_field(field, {x, 0.0}, spec.T)) + "\n";
        }
    }
    write_text(out_path + ".field.csv", fcsv);

    json meta = meta_block(pf);
    meta["command"] = "solve";
    meta["spectral_tail"] = field.spectral_tail();
    write_text(out_path + ".json", meta.dump(2) + "\n");

    std::cout << "solve: " << field.basis.count() << " modes, N=" << grid.N << ", wrote "
              << out_path << "\n";
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& out_path) {
    const auto suites = tfrac::run_all_suites(seed);
    json report;
    report["command"] = "verify";
    report["seed"] = seed;
    json arr = json::array();
    bool all_pass = true;
    for (const auto& s : suites) {
        std::cout << (s.pass ? "PASS" : "FAIL") << "  " << s.name
                  << "  discrepancy=" << fmt17(s.discrepancy) << "  tol=" << s.tolerance << "\n";
        json e;
        e["name"] = s.name;
        e["discrepancy"] = s.discrepancy;
        e["tolerance"] = s.tolerance;
        e["pass"] = s.pass;
        e["detail"] = s.detail;
        arr.push_back(e);
        all_pass = all_pass && s.pass;
    }
    report["suites"] = arr;
    report["pass"] = all_pass;
    if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n");
    return all_pass ? 0 : 4;
}

// Refinement study on the first mode: the uncorrected and corrected schemes
// side by side, plus the fitted-order gap between them.
int cmd_converge(const tfrac::ProblemFile& pf, const std::string& out_path) {
    const tfrac::ProblemSpec& spec = pf.spec;
    const tfrac::EigenBasis basis = tfrac::build_basis(spec.domain, spec.K);
    const auto u0_modes = tfrac::project(spec.u0, basis);

    tfrac::ModeProblemSpec mode;
    mode.alpha = spec.alpha;
    mode.lambda = basis.modes.at(0).lambda;
    mode.y0 = u0_modes.at(0);
    mode.T = spec.T;
    if (spec.f) {
        const auto& basis_ref = basis;
        const auto& f = spec.f;
        mode.g = [&basis_ref, f](double t) {
            return tfrac::project([&](tfrac::Point p) { return f(p, t); }, basis_ref).at(0);
        };
    } else {
        mode.g = [](double) { return 0.0; };
    }
    mode.g0 = mode.g(0.0);

    const int levels = 4;
    const tfrac::ConvergenceTable plain =
        tfrac::estimate_order(tfrac::SolverId::l1, mode, spec.N, levels);
    const tfrac::ConvergenceTable corrected =
        tfrac::estimate_order(tfrac::SolverId::l1_corrected, mode, spec.N, levels);

    std::string csv =
        "N,l1_err_linf,l1_err_l2,l1_order_linf,corrected_err_linf,corrected_err_l2,"
        "corrected_order_linf\n";
    for (size_t i = 0; i < plain.sizes.size(); ++i) {
        csv += std::to_string(plain.sizes[i]) + "," + fmt17(plain.err_linf[i]) + "," +
               fmt17(plain.err_l2[i]);
        csv += i + 1 < plain.sizes.size() ? "," + fmt17(plain.order_linf[i]) : std::string(",");
        csv += "," + fmt17(corrected.err_linf[i]) + "," + fmt17(corrected.err_l2[i]);
        csv +=
            i + 1 < plain.sizes.size() ? "," + fmt17(corrected.order_linf[i]) : std::string(",");
        csv += "\n";
    }
    write_text(out_path, csv);

    const bool exact = plain.exact && corrected.exact;
    const double gap =
        exact ? 0.0 : corrected.fitted_order_linf(2) - plain.fitted_order_linf(2);
    json meta = meta_block(pf);
    meta["command"] = "converge";
    meta["exact"] = exact;
    meta["l1_order_linf"] = plain.exact ? 0.0 : plain.fitted_order_linf(2);
    meta["corrected_order_linf"] = corrected.exact ? 0.0 : corrected.fitted_order_linf(2);
    meta["order_gap"] = gap;
    meta["levels"] = levels;
    write_text(out_path + ".json", meta.dump(2) + "\n");

    if (exact)
        std::cout << "converge: both schemes reproduce the reference to rounding\n";
    else
        std::cout << "converge: order l1=" << (plain.exact ? 0.0 : plain.fitted_order_linf(2))
                  << " corrected=" << (corrected.exact ? 0.0 : corrected.fitted_order_linf(2))
                  << " gap=" << gap << "\n";
    return 0;
}

int cmd_report(const tfrac::ProblemFile& pf, const std::string& out_path) {
    std::vector<std::string> ids = pf.estimates;
    if (ids.empty())
        ids = {"esti-u-1", "esti-u-2", "esti-u-3", "ode-1-1", "ode-1-2",
               "ode-1-3", "ode-2-1",  "ode-2-2",  "ode-2-3"};
    const tfrac::RegularityReport rep = tfrac::regularity_report(pf.spec, ids);

    json out = meta_block(pf);
    out["command"] = "report";
    json arr = json::array();
    for (const auto& r : rep.records) {
        json e;
        e["id"] = r.id;
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        e["ratio"] = r.ratio;
        e["refinement_stable"] = r.refinement_stable;
        e["refinement_change"] = r.refinement_change;
        arr.push_back(e);
        std::cout << r.id << ": ratio=" << fmt17(r.ratio)
                  << (r.refinement_stable ? " (stable)" : " (NOT stable)") << "\n";
    }
    out["records"] = arr;
    write_text(out_path, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-fractional diffusion solver and verification harness"};
    app.require_subcommand(1);

    std::string spec_path, out_path;
    double opt_alpha = -1.0, opt_T = -1.0;
    int opt_N = -1, opt_K = -1;
    std::string opt_solver;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool spec_required) {
        auto* s = sub->add_option("--spec", spec_path, "problem file (key = value)");
        if (spec_required) s->required();
        sub->add_option("--out", out_path, "output path")->required();
        sub->add_option("--alpha", opt_alpha, "override alpha");
        sub->add_option("--N", opt_N, "override time steps");
        sub->add_option("--K", opt_K, "override mode count");
        sub->add_option("--T", opt_T, "override final time");
        sub->add_option("--solver", opt_solver, "oracle | l1 | l1_corrected");
        sub->add_option("--seed", seed, "seed for randomized checks");
    };

    auto* solve = app.add_subcommand("solve", "solve the problem, write trajectories");
    add_common(solve, true);
    auto* verify = app.add_subcommand("verify", "run the operator identity suites");
    verify->add_option("--out", out_path, "JSON report path");
    verify->add_option("--seed", seed, "seed for randomized checks");
    auto* converge = app.add_subcommand("converge", "mode-1 refinement study");
    add_common(converge, true);
    auto* report = app.add_subcommand("report", "regularity estimate ratios");
    add_common(report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(seed, out_path);

        tfrac::ProblemFile pf;
        Overrides ov;
        if (opt_alpha > 0) ov.alpha = opt_alpha;
        if (opt_N > 0) ov.N = opt_N;
        if (opt_K > 0) ov.K = opt_K;
        if (opt_T > 0) ov.T = opt_T;
        if (!opt_solver.empty()) ov.solver = opt_solver;
        try {
            pf = tfrac::ProblemFile::load(spec_path);
            ov.apply(pf.spec);
        } catch (const std::exception& e) {
            // Unreadable, unparseable, or invalid problem data: input error.
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }

        if (solve->parsed()) return cmd_solve(pf, out_path);
        if (converge->parsed()) return cmd_converge(pf, out_path);
        if (report->parsed()) return cmd_report(pf, out_path);
        return 2;
    } catch (const std::exception& e) {
        // Anything thrown past this point happened while solving.
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
