#include "locallmo/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace locallmo {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> default_claims(Method m) {
    switch (m) {
        case Method::LocalLMO:
        case Method::NonsmoothLocalLMO:
            return {"fejer", "boundary_step", "radius_bound"};
        case Method::StochasticLocalLMO:
            return {"boundary_step"};
        case Method::PGD:
            return {"pgd_descent", "pgd_fejer", "pgd_rate", "pgd_grad_diff"};
        case Method::FrankWolfe:
            return {"fw_gap_nonneg"};
    }
    return {};
}

ExperimentSpec build_comparison() {
    ExperimentSpec spec{"paperK-comparison", make_box2d(2, 2, 4, 4), make_benchmark_quadratic(),
                        Vector(2), {}};
    spec.x0 << 4.0, 4.0;

    SolverConfig lmo;
    lmo.method = Method::LocalLMO;
    lmo.rule = RadiusRule{StronglyConvexTheta{}};
    lmo.max_iters = 100;
    spec.runs.push_back(
        {"local_lmo", lmo, {"fejer", "boundary_step", "radius_bound", "contraction", "smooth_rate"}});

    SolverConfig pgd;
    pgd.method = Method::PGD;
    pgd.rule = StepsizeRule{InverseL{}};
    pgd.max_iters = 100;
    spec.runs.push_back({"pgd", pgd, default_claims(Method::PGD)});

    SolverConfig fw;
    fw.method = Method::FrankWolfe;
    fw.rule = StepsizeRule{FWClassic{}};
    fw.max_iters = 100;
    spec.runs.push_back({"fw", fw, default_claims(Method::FrankWolfe)});
    return spec;
}

ExperimentSpec build_qsweep() {
    ExperimentSpec spec{"paperL-qsweep", make_box2d(2, 2, 4, 4), make_benchmark_quadratic(),
                        Vector(2), {}};
    spec.x0 << 4.0, 4.0;

    SolverConfig adaptive;
    adaptive.method = Method::LocalLMO;
    adaptive.rule = RadiusRule{StronglyConvexTheta{}};
    adaptive.max_iters = 100;
    spec.runs.push_back({"adaptive", adaptive, {"fejer", "boundary_step"}});

    for (int i = 0; i < 10; ++i) {
        const double q = 0.8 + 0.15 * i / 9.0;
        SolverConfig cfg;
        cfg.method = Method::LocalLMO;
        cfg.rule = RadiusRule{make_geometric_from_optimum(spec.objective, spec.x0, q)};
        cfg.max_iters = 100;
        char label[16];
        std::snprintf(label, sizeof(label), "q%.3f", q);
        spec.runs.push_back({label, cfg, {"boundary_step"}});
    }
    return spec;
}

// Three unit-radius geometries (l1 diamond, l2 ball, l-inf box) around the
// same quadratic. Centers are chosen so the unconstrained minimizer (0,0) is
// infeasible and each constrained optimum sits on the boundary; they are a
// configurable default, nothing more.
ExperimentSpec build_geometries() {
    Objective base = make_benchmark_quadratic();
    const Quadratic quad = *base.as<Quadratic>();

    Vector c_diamond(2), c_ball(2), box_lo(2), box_hi(2);
    c_diamond << 1.5, 0.0;
    c_ball << 1.0, 1.0;
    box_lo << 0.5, 0.5;
    box_hi << 2.5, 2.5;

    const ConstraintSet diamond{Diamond{c_diamond, 1.0}};
    const ConstraintSet ball{EuclideanBall{c_ball, 1.0}};
    const ConstraintSet box{Box{box_lo, box_hi}};

    ExperimentSpec spec{"paperM-geometries", box, base, Vector(2), {}};
    spec.x0 << 2.5, 2.5;

    auto add_run = [&](const std::string& label, const ConstraintSet& set, const Vector& x0) {
        Objective obj = base;
        obj.optimum() = quadratic_optimum_on(set, quad);
        SolverConfig cfg;
        cfg.method = Method::LocalLMO;
        cfg.rule = RadiusRule{StronglyConvexTheta{}};
        cfg.max_iters = 100;
        spec.runs.push_back({label,
                             cfg,
                             {"fejer", "boundary_step", "radius_bound", "contraction"},
                             set,
                             x0,
                             std::move(obj)});
    };

    Vector x0d(2), x0b(2), x0x(2);
    x0d << 2.5, 0.0;
    x0b << 1.0 + std::sqrt(0.5), 1.0 + std::sqrt(0.5);
    x0x << 2.5, 2.5;
    add_run("l1_diamond", diamond, x0d);
    add_run("l2_ball", ball, x0b);
    add_run("linf_box", box, x0x);
    return spec;
}

double final_of(const std::vector<double>& col) {
    return col.empty() ? std::numeric_limits<double>::quiet_NaN() : col.back();
}

}  // namespace

std::vector<std::string> experiment_names() {
    return {"paperK-comparison", "paperL-qsweep", "paperM-geometries"};
}

ExperimentSpec get_experiment(const std::string& name) {
    if (name == "paperK-comparison") return build_comparison();
    if (name == "paperL-qsweep") return build_qsweep();
    if (name == "paperM-geometries") return build_geometries();
    throw ConfigError("unknown experiment: " + name);
}

RunReport run_experiment(const ExperimentSpec& spec, const std::string& out_dir) {
    fs::create_directories(out_dir);
    RunReport report;
    report.name = spec.name;

    for (const RunSpec& run : spec.runs) {
        RunOutcome outcome;
        outcome.label = run.label;
        const ConstraintSet& set = run.set_override ? *run.set_override : spec.set;
        const Objective& obj = run.objective_override ? *run.objective_override : spec.objective;
        const Vector& x0 = run.x0_override ? *run.x0_override : spec.x0;
        try {
            outcome.trajectory = run_solver(set, obj, x0, run.config);
            const Trajectory& traj = outcome.trajectory;
            outcome.final_metrics["iters"] = traj.steps();
            if (!traj.dist_sq_to_opt.empty()) {
                outcome.final_metrics["dist_sq"] = final_of(traj.dist_sq_to_opt);
                outcome.final_metrics["f_gap"] = final_of(traj.f_gap);
                outcome.final_metrics["grad_diff_sq"] = final_of(traj.grad_diff_sq);
            }
            if (!traj.grad_map_norm.empty())
                outcome.final_metrics["grad_map_norm"] = final_of(traj.grad_map_norm);
            if (!traj.fw_gap.empty()) outcome.final_metrics["fw_gap"] = final_of(traj.fw_gap);

            outcome.csv_path = (fs::path(out_dir) / (run.label + ".csv")).string();
            write_trajectory_csv(outcome.csv_path, traj);

            std::vector<std::string> claims =
                run.claims.empty() ? default_claims(run.config.method) : run.claims;
            outcome.checks = check_trajectory(traj, obj, claims);
        } catch (const Error& e) {
            outcome.error = e.what();
        }
        report.outcomes.push_back(std::move(outcome));
    }

    report.summary_path = (fs::path(out_dir) / (spec.name + "_summary.csv")).string();
    std::ofstream summary(report.summary_path);
    if (!summary) throw ConfigError("cannot open for writing: " + report.summary_path);
    summary << "label,status,iters,dist_sq,f_gap,grad_diff_sq,checks,error\n";
    for (const RunOutcome& o : report.outcomes) {
        auto metric = [&](const char* key) {
            auto it = o.final_metrics.find(key);
            return it == o.final_metrics.end() ? std::string() : format_double(it->second);
        };
        summary << o.label << ",";
        summary << (o.ok() ? status_name(o.trajectory.status) : "error") << ",";
        summary << (o.ok() ? std::to_string(o.trajectory.steps()) : std::string()) << ",";
        summary << metric("dist_sq") << "," << metric("f_gap") << "," << metric("grad_diff_sq")
                << ",";
        if (o.ok()) summary << (o.checks_pass() ? "pass" : "FAIL");
        summary << "," << o.error << "\n";
    }
    return report;
}

std::vector<std::string> emit_bound_curves(const ExperimentSpec& spec, const RunReport& report,
                                           const std::string& out_dir) {
    std::vector<std::string> files;
    for (size_t i = 0; i < report.outcomes.size(); ++i) {
        const RunOutcome& o = report.outcomes[i];
        if (!o.ok()) continue;
        const RunSpec& run = spec.runs[i];
        const Objective& obj = run.objective_override ? *run.objective_override : spec.objective;
        if (!obj.optimum()) throw MissingConstant("emit_bound_curves requires optimum metadata");
        if (!obj.constants().L || !obj.constants().mu)
            throw MissingConstant("emit_bound_curves requires declared L and mu");
        const double L = *obj.constants().L;
        const double mu = *obj.constants().mu;
        const double rho2 = std::pow((L - mu) / (L + mu), 2);
        const Vector& x0 = run.x0_override ? *run.x0_override : spec.x0;
        const double R0sq = (x0 - obj.optimum()->x_star).squaredNorm();

        const std::string path = (fs::path(out_dir) / (o.label + "_bounds.csv")).string();
        std::ofstream out(path);
        if (!out) throw ConfigError("cannot open for writing: " + path);
        out << "k,dist_sq,contraction_bound,grad_diff_sq,smooth_bound\n";
        const Trajectory& traj = o.trajectory;
        double contraction = R0sq;
        for (size_t k = 0; k < traj.iterates.size(); ++k) {
            out << k << ",";
            if (k < traj.dist_sq_to_opt.size()) out << format_double(traj.dist_sq_to_opt[k]);
            out << "," << format_double(contraction) << ",";
            if (k < traj.grad_diff_sq.size()) out << format_double(traj.grad_diff_sq[k]);
            out << "," << format_double(L * L * R0sq / (k + 1)) << "\n";
            contraction *= rho2;
        }
        files.push_back(path);
    }
    return files;
}

Json to_json(const ExperimentSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["set"] = to_json(spec.set);
    j["objective"] = to_json(spec.objective);
    Json x0 = Json::array();
    for (int i = 0; i < spec.x0.size(); ++i) x0.push_back(spec.x0(i));
    j["x0"] = x0;
    Json runs = Json::array();
    for (const RunSpec& r : spec.runs) {
        Json rj;
        rj["label"] = r.label;
        rj["config"] = to_json(r.config);
        if (!r.claims.empty()) rj["claims"] = r.claims;
        if (r.set_override) rj["set"] = to_json(*r.set_override);
        if (r.x0_override) {
            Json x = Json::array();
            for (int i = 0; i < r.x0_override->size(); ++i) x.push_back((*r.x0_override)(i));
            rj["x0"] = x;
        }
        if (r.objective_override) rj["objective"] = to_json(*r.objective_override);
        runs.push_back(rj);
    }
    j["runs"] = runs;
    return j;
}

ExperimentSpec experiment_from_json(const Json& j) {
    ExperimentSpec spec{j.at("name").get<std::string>(), set_from_json(j.at("set")),
                        objective_from_json(j.at("objective")), Vector(), {}};
    const Json& x0 = j.at("x0");
    spec.x0.resize(x0.size());
    for (size_t i = 0; i < x0.size(); ++i) spec.x0(static_cast<int>(i)) = x0[i].get<double>();
    if (!spec.set.contains(spec.x0, 1e-9)) throw ConfigError("experiment x0 is not feasible");

    for (const Json& rj : j.at("runs")) {
        RunSpec run;
        run.label = rj.at("label").get<std::string>();
        run.config = solver_config_from_json(rj.at("config"));
        if (rj.contains("claims"))
            run.claims = rj.at("claims").get<std::vector<std::string>>();
        if (rj.contains("set")) run.set_override = set_from_json(rj.at("set"));
        if (rj.contains("x0")) {
            const Json& x = rj.at("x0");
            Vector v(x.size());
            for (size_t i = 0; i < x.size(); ++i) v(static_cast<int>(i)) = x[i].get<double>();
            run.x0_override = v;
        }
        if (rj.contains("objective"))
            run.objective_override = objective_from_json(rj.at("objective"));
        for (const RunSpec& other : spec.runs)
            if (other.label == run.label) throw ConfigError("duplicate run label: " + run.label);
        spec.runs.push_back(std::move(run));
    }
    if (spec.runs.empty()) throw ConfigError("experiment has no runs");
    return spec;
}

ExperimentSpec load_experiment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open experiment file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("cannot parse experiment file: ") + e.what());
    }
    return experiment_from_json(j);
}

// --- CSV-only claim checks -------------------------------------------------------

std::vector<ClaimResult> check_trajectory_csv(const std::string& path,
                                              const std::vector<std::string>& claims,
                                              const CsvCheckOptions& options) {
    const Trajectory traj = read_trajectory_csv(path);
    const int K = traj.steps();
    const size_t n = traj.iterates.size();
    const bool lmo_family = traj.method == Method::LocalLMO ||
                            traj.method == Method::NonsmoothLocalLMO ||
                            traj.method == Method::StochasticLocalLMO;

    auto need_col = [&](const std::vector<double>& col, const std::string& claim,
                        const char* name) -> const std::vector<double>& {
        if (col.size() != n)
            throw UnknownClaim("claim " + claim + " needs the " + name +
                               " column, absent from " + path);
        return col;
    };

    std::vector<ClaimResult> out;
    for (const std::string& claim : claims) {
        ClaimResult res;
        res.claim = claim;
        double worst = -std::numeric_limits<double>::infinity();
        int checked = 0;
        auto track = [&](double lhs, double rhs) {
            worst = std::max(worst, lhs - rhs);
            ++checked;
        };

        if (claim == "fejer" && lmo_family && traj.method != Method::StochasticLocalLMO) {
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            for (int k = 0; k < K; ++k)
                track(d[k + 1], d[k] - traj.radii_or_steps[k] * traj.radii_or_steps[k] +
                                    1e-10 * (1.0 + d[k]));
        } else if (claim == "boundary_step" && lmo_family) {
            for (int k = 0; k < K; ++k) {
                const double t = traj.radii_or_steps[k];
                if (t == 0) continue;
                track(std::abs((traj.iterates[k + 1] - traj.iterates[k]).norm() - t),
                      1e-9 * std::max(1.0, t));
            }
        } else if (claim == "radius_bound" && lmo_family) {
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            for (int k = 0; k < K; ++k) track(traj.radii_or_steps[k], std::sqrt(d[k]) + 1e-9);
        } else if (claim == "contraction" && traj.method == Method::LocalLMO) {
            if (!options.rho) throw UnknownClaim("claim contraction needs --rho in csv mode");
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            for (int k = 0; k < K; ++k)
                track(std::sqrt(d[k + 1]), *options.rho * std::sqrt(d[k]) + 1e-9);
        } else if (claim == "smooth_rate" && traj.method == Method::LocalLMO) {
            if (!options.L) throw UnknownClaim("claim smooth_rate needs --L in csv mode");
            const auto& gd = need_col(traj.grad_diff_sq, claim, "grad_diff_sq");
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            double run_min = std::numeric_limits<double>::infinity();
            for (int k = 0; k < K; ++k) {
                run_min = std::min(run_min, gd[k]);
                track(run_min, (*options.L) * (*options.L) * d[0] / (k + 1) + 1e-8);
            }
        } else if (claim == "polyak_rate" && lmo_family) {
            if (!options.G) throw UnknownClaim("claim polyak_rate needs --G in csv mode");
            const auto& fg = need_col(traj.f_gap, claim, "f_gap");
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            double acc = 0;
            for (int k = 0; k < K; ++k) {
                acc += fg[k] * fg[k];
                track(acc / (k + 1), (*options.G) * (*options.G) * d[0] / (k + 1) + 1e-8);
            }
        } else if (claim == "nonconvex_descent" && traj.method == Method::LocalLMO) {
            if (!traj.grad_map_gamma)
                throw UnknownClaim("claim nonconvex_descent needs grad_map_gamma metadata");
            const auto& fg = need_col(traj.f_gap, claim, "f_gap");
            const auto& gm = need_col(traj.grad_map_norm, claim, "grad_map_norm");
            for (int k = 0; k < K; ++k)
                track(fg[k + 1], fg[k] - 0.5 * (*traj.grad_map_gamma) * gm[k] * gm[k] + 1e-10);
        } else if (claim == "pgd_descent" && traj.method == Method::PGD) {
            const auto& fg = need_col(traj.f_gap, claim, "f_gap");
            const auto& gm = need_col(traj.grad_map_norm, claim, "grad_map_norm");
            for (int k = 0; k < K; ++k)
                track(fg[k + 1],
                      fg[k] - 0.5 * traj.radii_or_steps[k] * gm[k] * gm[k] + 1e-9);
        } else if (claim == "pgd_fejer" && traj.method == Method::PGD) {
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            const auto& fg = need_col(traj.f_gap, claim, "f_gap");
            for (int k = 0; k < K; ++k)
                track(d[k + 1],
                      d[k] - 2 * traj.radii_or_steps[k] * fg[k + 1] + 1e-9 * (1.0 + d[k]));
        } else if (claim == "pgd_rate" && traj.method == Method::PGD) {
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            const auto& fg = need_col(traj.f_gap, claim, "f_gap");
            for (int k = 1; k <= K; ++k)
                track(fg[k], d[0] / (2 * traj.radii_or_steps[k - 1] * k) + 1e-9);
        } else if (claim == "pgd_grad_diff" && traj.method == Method::PGD) {
            const auto& d = need_col(traj.dist_sq_to_opt, claim, "dist_sq");
            const auto& gd = need_col(traj.grad_diff_sq, claim, "grad_diff_sq");
            double run_min = std::numeric_limits<double>::infinity();
            for (int k = 1; k <= K; ++k) {
                run_min = std::min(run_min, gd[k - 1]);
                const double gamma = traj.radii_or_steps[k - 1];
                track(run_min, d[0] / (gamma * gamma * k) + 1e-9);
            }
        } else if (claim == "fw_gap_nonneg" && traj.method == Method::FrankWolfe) {
            const auto& gaps = need_col(traj.fw_gap, claim, "fw_gap");
            for (double gvalue : gaps) track(-gvalue, 1e-12);
        } else {
            throw UnknownClaim("claim " + claim + " is unknown or does not apply to method " +
                               method_name(traj.method) + " in csv mode");
        }
        res.checked = checked;
        res.max_violation = checked ? worst : 0.0;
        res.pass = res.max_violation <= 0.0;
        out.push_back(res);
    }
    return out;
}

// --- CLI ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

Vector parse_vector_arg(const std::string& s) {
    std::vector<double> vals;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) vals.push_back(std::stod(tok));
    Vector v(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) v(static_cast<int>(i)) = vals[i];
    return v;
}

std::string resolve_out_dir(const std::optional<std::string>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("LOCAL_LMO_OUT")) return env;
    return "out";
}

int cmd_run(const std::string& target, const std::optional<std::string>& out_flag,
            const std::optional<std::uint64_t>& seed, const std::optional<int>& iters,
            std::ostream& out, std::ostream& err) {
    ExperimentSpec spec = [&] {
        for (const std::string& name : experiment_names())
            if (name == target) return get_experiment(target);
        if (!fs::exists(target)) throw ConfigError("no such experiment or config file: " + target);
        return load_experiment_file(target);
    }();
    for (RunSpec& run : spec.runs) {
        if (seed) run.config.seed = *seed;
        if (iters) run.config.max_iters = *iters;
    }

    const std::string out_dir = resolve_out_dir(out_flag);
    RunReport report = run_experiment(spec, out_dir);
    bool has_bounds = true;
    try {
        emit_bound_curves(spec, report, out_dir);
    } catch (const MissingConstant&) {
        has_bounds = false;
    }

    out << "experiment " << report.name << " -> " << out_dir << "\n";
    bool any_error = false;
    for (const RunOutcome& o : report.outcomes) {
        if (!o.ok()) {
            any_error = true;
            out << "  " << o.label << ": ERROR " << o.error << "\n";
            continue;
        }
        out << "  " << o.label << ": " << status_name(o.trajectory.status) << " after "
            << o.trajectory.steps() << " steps";
        if (auto it = o.final_metrics.find("dist_sq"); it != o.final_metrics.end())
            out << ", dist_sq=" << format_double(it->second);
        out << ", checks " << (o.checks_pass() ? "pass" : "FAIL") << "\n";
        for (const ClaimResult& c : o.checks)
            if (!c.pass)
                out << "    claim " << c.claim << " violated by " << format_double(c.max_violation)
                    << "\n";
    }
    out << "summary: " << report.summary_path << (has_bounds ? " (+bound curves)" : "") << "\n";
    if (any_error) {
        err << "one or more runs failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << "usage: locallmo <list|show|run|check|oracle> ...\n";
            return 2;
        }
        const std::string& cmd = args[0];

        if (cmd == "list") {
            for (const std::string& name : experiment_names()) out << name << "\n";
            return 0;
        }

        if (cmd == "show") {
            if (args.size() != 2) {
                err << "usage: locallmo show <experiment>\n";
                return 2;
            }
            out << to_json(get_experiment(args[1])).dump(2) << "\n";
            return 0;
        }

        if (cmd == "run") {
            std::optional<std::string> target, out_flag;
            std::optional<std::uint64_t> seed;
            std::optional<int> iters;
            for (size_t i = 1; i < args.size(); ++i) {
                if (args[i] == "--out" && i + 1 < args.size()) out_flag = args[++i];
                else if (args[i] == "--seed" && i + 1 < args.size()) seed = std::stoull(args[++i]);
                else if (args[i] == "--iters" && i + 1 < args.size()) iters = std::stoi(args[++i]);
                else if (!target) target = args[i];
                else {
                    err << "unexpected argument: " << args[i] << "\n";
                    return 2;
                }
            }
            if (!target) {
                err << "usage: locallmo run <name|config.json> [--out DIR] [--seed N] [--iters K]\n";
                return 2;
            }
            return cmd_run(*target, out_flag, seed, iters, out, err);
        }

        if (cmd == "check") {
            std::optional<std::string> path;
            std::vector<std::string> claims;
            CsvCheckOptions options;
            for (size_t i = 1; i < args.size(); ++i) {
                if (args[i] == "--claims" && i + 1 < args.size()) claims = split_csv_list(args[++i]);
                else if (args[i] == "--rho" && i + 1 < args.size()) options.rho = std::stod(args[++i]);
                else if (args[i] == "--L" && i + 1 < args.size()) options.L = std::stod(args[++i]);
                else if (args[i] == "--G" && i + 1 < args.size()) options.G = std::stod(args[++i]);
                else if (!path) path = args[i];
                else {
                    err << "unexpected argument: " << args[i] << "\n";
                    return 2;
                }
            }
            if (!path || claims.empty()) {
                err << "usage: locallmo check <trajectory.csv> --claims a,b[,...] [--rho R] [--L v] [--G v]\n";
                return 2;
            }
            const std::vector<ClaimResult> results = check_trajectory_csv(*path, claims, options);
            bool all_pass = true;
            for (const ClaimResult& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << " " << r.claim << " (" << r.checked
                    << " checks, max violation " << format_double(r.max_violation) << ")\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }

        if (cmd == "oracle") {
            if (args.size() != 5) {
                err << "usage: locallmo oracle <set.json> <center> <radius> <g>\n";
                return 2;
            }
            std::ifstream in(args[1]);
            if (!in) {
                err << "cannot open set file: " << args[1] << "\n";
                return 2;
            }
            Json j;
            in >> j;
            const ConstraintSet set = set_from_json(j);
            const LocalBall ball{parse_vector_arg(args[2]), std::stod(args[3])};
            const OracleResult res = oracle_local_lmo(set, ball, parse_vector_arg(args[4]));
            out << to_json(res).dump(2) << "\n";
            return 0;
        }

        err << "unknown command: " << cmd << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownClaim& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace locallmo
