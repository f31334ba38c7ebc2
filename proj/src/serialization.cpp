#include "locallmo/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace locallmo {

namespace {

Json vec_to_json(const Vector& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Vector vec_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("expected a number array");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = j[i].get<double>();
    return v;
}

Json mat_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(Vector(m.row(i).transpose())));
    return rows;
}

Matrix mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("expected a matrix (array of rows)");
    const size_t cols = j[0].size();
    Matrix m(j.size(), cols);
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != cols) throw ConfigError("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m(static_cast<int>(i), static_cast<int>(c)) = j[i][c].get<double>();
    }
    return m;
}

std::string variant_of(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("variant"))
        throw ConfigError(std::string(what) + ": missing \"variant\" key");
    return j.at("variant").get<std::string>();
}

void validate_or_throw(const std::vector<std::string>& violations, const char* what) {
    if (violations.empty()) return;
    std::string msg = std::string(what) + " violates invariants:";
    for (const std::string& v : violations) msg += "\n  - " + v;
    throw ConfigError(msg);
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json to_json(const ConstraintSet& set) {
    Json j;
    j["variant"] = set.kind();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                j["dim"] = s.dim;
            } else if constexpr (std::is_same_v<T, Singleton>) {
                j["point"] = vec_to_json(s.point);
            } else if constexpr (std::is_same_v<T, AffineSubspace>) {
                j["origin"] = vec_to_json(s.origin);
                Json basis = Json::array();
                for (const Vector& b : s.basis) basis.push_back(vec_to_json(b));
                j["basis"] = basis;
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                j["normal"] = vec_to_json(s.normal);
                j["offset"] = s.offset;
            } else if constexpr (std::is_same_v<T, AffineLine> || std::is_same_v<T, Ray>) {
                j["origin"] = vec_to_json(s.origin);
                j["direction"] = vec_to_json(s.direction);
            } else if constexpr (std::is_same_v<T, Segment>) {
                j["a"] = vec_to_json(s.a);
                j["b"] = vec_to_json(s.b);
            } else if constexpr (std::is_same_v<T, EuclideanBall>) {
                j["center"] = vec_to_json(s.center);
                j["radius"] = s.radius;
            } else if constexpr (std::is_same_v<T, Box>) {
                j["lo"] = vec_to_json(s.lo);
                j["hi"] = vec_to_json(s.hi);
            } else if constexpr (std::is_same_v<T, Slab>) {
                j["normal"] = vec_to_json(s.normal);
                j["lower"] = s.lower;
                j["upper"] = s.upper;
            } else {  // Diamond
                j["center"] = vec_to_json(s.center);
                j["radius"] = s.radius;
            }
        },
        set.variant());
    return j;
}

ConstraintSet set_from_json(const Json& j) {
    const std::string kind = variant_of(j, "constraint set");
    ConstraintSet::Variant v = [&]() -> ConstraintSet::Variant {
        if (kind == "whole_space") return WholeSpace{j.at("dim").get<int>()};
        if (kind == "singleton") return Singleton{vec_from_json(j.at("point"))};
        if (kind == "affine_subspace") {
            AffineSubspace s;
            s.origin = vec_from_json(j.at("origin"));
            for (const Json& b : j.at("basis")) s.basis.push_back(vec_from_json(b));
            return s;
        }
        if (kind == "hyperplane")
            return Hyperplane{vec_from_json(j.at("normal")), j.at("offset").get<double>()};
        if (kind == "affine_line")
            return AffineLine{vec_from_json(j.at("origin")), vec_from_json(j.at("direction"))};
        if (kind == "ray")
            return Ray{vec_from_json(j.at("origin")), vec_from_json(j.at("direction"))};
        if (kind == "segment") return Segment{vec_from_json(j.at("a")), vec_from_json(j.at("b"))};
        if (kind == "euclidean_ball")
            return EuclideanBall{vec_from_json(j.at("center")), j.at("radius").get<double>()};
        if (kind == "box") return Box{vec_from_json(j.at("lo")), vec_from_json(j.at("hi"))};
        if (kind == "slab")
            return Slab{vec_from_json(j.at("normal")), j.at("lower").get<double>(),
                        j.at("upper").get<double>()};
        if (kind == "diamond")
            return Diamond{vec_from_json(j.at("center")), j.at("radius").get<double>()};
        throw ConfigError("unknown constraint set variant: " + kind);
    }();
    ConstraintSet set{std::move(v)};
    validate_or_throw(set.validate(), "constraint set");
    return set;
}

Json to_json(const Objective& obj) {
    Json j;
    j["variant"] = obj.kind();
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Quadratic>) {
                j["Q"] = mat_to_json(f.Q);
                j["q"] = vec_to_json(f.q);
                j["c0"] = f.c0;
            } else if constexpr (std::is_same_v<T, CounterexampleQuadratic>) {
                j["alpha"] = f.alpha;
            } else if constexpr (std::is_same_v<T, FiniteSum>) {
                Json comps = Json::array();
                for (const Objective& c : f.components) comps.push_back(to_json(c));
                j["components"] = comps;
            } else if constexpr (std::is_same_v<T, QuarticTwoWell>) {
                j["dim"] = f.dim;
            }
        },
        obj.variant());
    Json constants = Json::object();
    const ObjectiveConstants& c = obj.constants();
    if (c.L) constants["L"] = *c.L;
    if (c.mu) constants["mu"] = *c.mu;
    if (c.L0) constants["L0"] = *c.L0;
    if (c.L1) constants["L1"] = *c.L1;
    if (c.G) constants["G"] = *c.G;
    if (c.strictly_convex) constants["strictly_convex"] = true;
    if (!constants.empty()) j["constants"] = constants;
    if (obj.optimum()) {
        Json opt;
        opt["x_star"] = vec_to_json(obj.optimum()->x_star);
        opt["f_star"] = obj.optimum()->f_star;
        opt["grad_star"] = vec_to_json(obj.optimum()->grad_star);
        j["optimum"] = opt;
    }
    return j;
}

Objective objective_from_json(const Json& j) {
    const std::string kind = variant_of(j, "objective");
    Objective::Variant v = [&]() -> Objective::Variant {
        if (kind == "quadratic")
            return Quadratic{mat_from_json(j.at("Q")), vec_from_json(j.at("q")),
                             j.value("c0", 0.0)};
        if (kind == "power_three_halves") return PowerThreeHalves{};
        if (kind == "counterexample_quadratic")
            return CounterexampleQuadratic{j.at("alpha").get<double>()};
        if (kind == "finite_sum") {
            FiniteSum f;
            for (const Json& c : j.at("components")) f.components.push_back(objective_from_json(c));
            return f;
        }
        if (kind == "quartic_two_well") return QuarticTwoWell{j.at("dim").get<int>()};
        if (kind == "abs_value") return AbsValue{};
        throw ConfigError("unknown objective variant: " + kind);
    }();
    Objective obj{std::move(v)};
    if (j.contains("constants")) {
        const Json& c = j.at("constants");
        if (c.contains("L")) obj.constants().L = c.at("L").get<double>();
        if (c.contains("mu")) obj.constants().mu = c.at("mu").get<double>();
        if (c.contains("L0")) obj.constants().L0 = c.at("L0").get<double>();
        if (c.contains("L1")) obj.constants().L1 = c.at("L1").get<double>();
        if (c.contains("G")) obj.constants().G = c.at("G").get<double>();
        if (c.contains("strictly_convex"))
            obj.constants().strictly_convex = c.at("strictly_convex").get<bool>();
    }
    if (j.contains("optimum")) {
        const Json& o = j.at("optimum");
        obj.optimum() = OptimumInfo{vec_from_json(o.at("x_star")), o.at("f_star").get<double>(),
                                    vec_from_json(o.at("grad_star"))};
    }
    validate_or_throw(obj.validate(), "objective");
    return obj;
}

Json to_json(const RadiusRule& rule) {
    Json j;
    j["variant"] = rule_name(rule);
    if (const auto* gm = std::get_if<GradientMappingRadius>(&rule)) j["gamma"] = gm->gamma;
    if (const auto* g = std::get_if<GeometricSchedule>(&rule)) {
        j["c"] = g->c;
        j["q"] = g->q;
    }
    if (const auto* c = std::get_if<ConstantRadius>(&rule)) j["t"] = c->t;
    return j;
}

RadiusRule radius_rule_from_json(const Json& j) {
    const std::string kind = variant_of(j, "radius rule");
    if (kind == "smooth_grad_diff") return SmoothGradDiff{};
    if (kind == "strongly_convex_theta") return StronglyConvexTheta{};
    if (kind == "polyak") return PolyakRadius{};
    if (kind == "asym_l0l1") return AsymL0L1{};
    if (kind == "gradient_mapping") return GradientMappingRadius{j.at("gamma").get<double>()};
    if (kind == "geometric")
        return GeometricSchedule{j.at("c").get<double>(), j.at("q").get<double>()};
    if (kind == "constant") return ConstantRadius{j.at("t").get<double>()};
    throw ConfigError("unknown radius rule variant: " + kind);
}

Json to_json(const StepsizeRule& rule) {
    Json j;
    j["variant"] = rule_name(rule);
    if (const auto* c = std::get_if<ConstantGamma>(&rule)) j["gamma"] = c->gamma;
    return j;
}

StepsizeRule stepsize_rule_from_json(const Json& j) {
    const std::string kind = variant_of(j, "stepsize rule");
    if (kind == "constant_gamma") return ConstantGamma{j.at("gamma").get<double>()};
    if (kind == "inverse_l") return InverseL{};
    if (kind == "two_over_l_plus_mu") return TwoOverLplusMu{};
    if (kind == "fw_classic") return FWClassic{};
    if (kind == "pgd_asym_l0l1") return PGDAsymL0L1{};
    throw ConfigError("unknown stepsize rule variant: " + kind);
}

Json to_json(const SolverConfig& cfg) {
    Json j;
    j["method"] = method_name(cfg.method);
    if (const auto* r = std::get_if<RadiusRule>(&cfg.rule)) j["rule"] = to_json(*r);
    else j["rule"] = to_json(std::get<StepsizeRule>(cfg.rule));
    j["max_iters"] = cfg.max_iters;
    j["seed"] = cfg.seed;
    j["stop_tol"] = cfg.stop_tol;
    return j;
}

SolverConfig solver_config_from_json(const Json& j) {
    SolverConfig cfg;
    const std::string m = j.at("method").get<std::string>();
    if (m == "local_lmo") cfg.method = Method::LocalLMO;
    else if (m == "stochastic_local_lmo") cfg.method = Method::StochasticLocalLMO;
    else if (m == "nonsmooth_local_lmo") cfg.method = Method::NonsmoothLocalLMO;
    else if (m == "pgd") cfg.method = Method::PGD;
    else if (m == "frank_wolfe") cfg.method = Method::FrankWolfe;
    else throw ConfigError("unknown method: " + m);

    const bool lmo_family = cfg.method == Method::LocalLMO ||
                            cfg.method == Method::StochasticLocalLMO ||
                            cfg.method == Method::NonsmoothLocalLMO;
    if (lmo_family) cfg.rule = radius_rule_from_json(j.at("rule"));
    else cfg.rule = stepsize_rule_from_json(j.at("rule"));

    cfg.max_iters = j.value("max_iters", 100);
    if (cfg.max_iters < 1) throw ConfigError("max_iters must be >= 1");
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.stop_tol = j.value("stop_tol", 0.0);
    if (cfg.stop_tol < 0) throw ConfigError("stop_tol must be >= 0");
    return cfg;
}

Json to_json(const OracleResult& res) {
    Json j;
    j["point"] = vec_to_json(res.point);
    j["objective"] = res.objective;
    j["method_tag"] = oracle_method_name(res.method_tag);
    return j;
}

// --- CSV ------------------------------------------------------------------------

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    const int d = static_cast<int>(traj.iterates.front().size());
    out << "# method=" << method_name(traj.method) << " status=" << status_name(traj.status);
    if (traj.grad_map_gamma) out << " grad_map_gamma=" << format_double(*traj.grad_map_gamma);
    out << "\n";
    out << "k";
    for (int i = 0; i < d; ++i) out << ",x" << i;
    out << ",t_or_gamma,dist_sq,f_gap,grad_diff_sq,grad_map_norm,fw_gap\n";

    const size_t n = traj.iterates.size();
    auto cell = [&](const std::vector<double>& col, size_t k) {
        return col.size() == n ? format_double(col[k]) : std::string();
    };
    for (size_t k = 0; k < n; ++k) {
        out << k;
        for (int i = 0; i < d; ++i) out << "," << format_double(traj.iterates[k](i));
        out << ",";
        if (k < traj.radii_or_steps.size()) out << format_double(traj.radii_or_steps[k]);
        out << "," << cell(traj.dist_sq_to_opt, k) << "," << cell(traj.f_gap, k) << ","
            << cell(traj.grad_diff_sq, k) << "," << cell(traj.grad_map_norm, k) << ","
            << cell(traj.fw_gap, k) << "\n";
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    write_trajectory_csv(out, traj);
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trajectory csv: " + path);
    Trajectory traj;
    std::string line;

    if (!std::getline(in, line) || line.rfind("# method=", 0) != 0)
        throw ConfigError("trajectory csv: missing '# method=' metadata line");
    {
        std::istringstream meta(line.substr(2));
        std::string tok;
        while (meta >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "method") {
                if (val == "local_lmo") traj.method = Method::LocalLMO;
                else if (val == "stochastic_local_lmo") traj.method = Method::StochasticLocalLMO;
                else if (val == "nonsmooth_local_lmo") traj.method = Method::NonsmoothLocalLMO;
                else if (val == "pgd") traj.method = Method::PGD;
                else if (val == "frank_wolfe") traj.method = Method::FrankWolfe;
                else throw ConfigError("trajectory csv: unknown method " + val);
            } else if (key == "status") {
                if (val == "max_iters") traj.status = RunStatus::MaxIters;
                else if (val == "stationary") traj.status = RunStatus::Stationary;
                else if (val == "converged") traj.status = RunStatus::Converged;
            } else if (key == "grad_map_gamma") {
                traj.grad_map_gamma = std::stod(val);
            }
        }
    }

    if (!std::getline(in, line)) throw ConfigError("trajectory csv: missing header");
    int d = 0;
    {
        std::istringstream hdr(line);
        std::string col;
        while (std::getline(hdr, col, ','))
            if (col.size() > 1 && col[0] == 'x') ++d;
    }
    if (d < 1) throw ConfigError("trajectory csv: no coordinate columns");

    auto push_if = [&](std::vector<double>& col, const std::string& cellv) {
        if (!cellv.empty()) col.push_back(std::stod(cellv));
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cellv;
        std::vector<std::string> cells;
        while (std::getline(row, cellv, ',')) cells.push_back(cellv);
        cells.resize(2 + d + 6);  // pad trailing empties
        Vector x(d);
        for (int i = 0; i < d; ++i) x(i) = std::stod(cells[1 + i]);
        traj.iterates.push_back(x);
        if (!cells[1 + d].empty()) traj.radii_or_steps.push_back(std::stod(cells[1 + d]));
        push_if(traj.dist_sq_to_opt, cells[2 + d]);
        push_if(traj.f_gap, cells[3 + d]);
        push_if(traj.grad_diff_sq, cells[4 + d]);
        push_if(traj.grad_map_norm, cells[5 + d]);
        push_if(traj.fw_gap, cells[6 + d]);
    }
    if (traj.iterates.empty()) throw ConfigError("trajectory csv: no rows");
    if (traj.radii_or_steps.size() + 1 != traj.iterates.size())
        throw ConfigError("trajectory csv: iterate/step count mismatch");
    return traj;
}

}  // namespace locallmo
