#include "vicollage/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "vicollage/galerkin.hpp"

namespace vicollage {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for key '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for key '" + key + "': " + v);
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    if (out.empty()) out.push_back("");
    return out;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
    return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    for (const auto& item : split_list(v)) out.push_back(parse_int(key, item));
    return out;
}

std::string fmt_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_csv(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string join(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += fmt_full(xs[i]);
    }
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

const char* objective_name(ObjectiveKind k) {
    return k == ObjectiveKind::kAbsSum ? "abs_sum" : "dual_norm";
}

const char* norm_name(Normalization n) {
    return n == Normalization::kFlat ? "flat" : "l2";
}

void validate(const RunConfig& c) {
    if (!(c.j_true > 0.0)) throw ConfigError("config key 'j_true' must be positive");
    if (!(c.j_lo < c.j_hi)) throw ConfigError("config keys 'j_lo'/'j_hi': need j_lo < j_hi");
    if (!(c.tol > 0.0)) throw ConfigError("config key 'tol' must be positive");
    if (c.m_values.empty()) throw ConfigError("config key 'm' must not be empty");
    if (c.n_values.empty()) throw ConfigError("config key 'n' must not be empty");
    for (int m : c.m_values)
        if (m < 1) throw ConfigError("config key 'm': values must be >= 1");
    for (int n : c.n_values)
        if (n < 1) throw ConfigError("config key 'n': values must be >= 1");
    if (c.f_coeffs.empty()) throw ConfigError("config key 'f_coeffs' must not be empty");
}

int thread_cap() {
    if (const char* env = std::getenv("VICOLLAGE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// compute row strings possibly concurrently, emit in index order
std::string run_rows(const std::vector<std::function<std::string()>>& tasks,
                     const std::string& header) {
    std::vector<std::string> rows(tasks.size());
    const int cap = std::min<int>(thread_cap(), static_cast<int>(tasks.size()));
    if (cap <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = tasks[i]();
    } else {
        for (std::size_t base = 0; base < tasks.size(); base += cap) {
            std::vector<std::future<std::string>> batch;
            for (std::size_t i = base; i < std::min(tasks.size(), base + cap); ++i)
                batch.push_back(std::async(std::launch::async, tasks[i]));
            for (std::size_t i = 0; i < batch.size(); ++i) rows[base + i] = batch[i].get();
        }
    }
    std::string out = header + "\n";
    for (const auto& row : rows) out += row;
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::vector<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw ConfigError("duplicate config key '" + key + "'");
        seen.push_back(key);

        if (key == "alpha")
            c.alpha = parse_double(key, val);
        else if (key == "beta")
            c.beta = parse_double(key, val);
        else if (key == "j_true")
            c.j_true = parse_double(key, val);
        else if (key == "f_coeffs")
            c.f_coeffs = parse_double_list(key, val);
        else if (key == "m")
            c.m_values = parse_int_list(key, val);
        else if (key == "n")
            c.n_values = parse_int_list(key, val);
        else if (key == "j_lo")
            c.j_lo = parse_double(key, val);
        else if (key == "j_hi")
            c.j_hi = parse_double(key, val);
        else if (key == "objective") {
            if (val == "abs_sum")
                c.objective = ObjectiveKind::kAbsSum;
            else if (val == "dual_norm")
                c.objective = ObjectiveKind::kDualNorm;
            else
                throw ConfigError("config key 'objective': expected abs_sum or dual_norm");
        } else if (key == "normalization") {
            if (val == "flat")
                c.normalization = Normalization::kFlat;
            else if (val == "l2")
                c.normalization = Normalization::kL2;
            else
                throw ConfigError("config key 'normalization': expected flat or l2");
        } else if (key == "tol")
            c.tol = parse_double(key, val);
        else if (key == "exact_coeffs")
            c.exact_coeffs = parse_double_list(key, val);
        else if (key == "output_path")
            c.output_path = val;
        else
            throw ConfigError("unknown config key '" + key + "'");
    }
    validate(c);
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string render_config(const RunConfig& c) {
    std::string out;
    out += "alpha = " + fmt_full(c.alpha) + "\n";
    out += "beta = " + fmt_full(c.beta) + "\n";
    out += "j_true = " + fmt_full(c.j_true) + "\n";
    out += "f_coeffs = " + join(c.f_coeffs) + "\n";
    out += "m = " + join(c.m_values) + "\n";
    out += "n = " + join(c.n_values) + "\n";
    out += "j_lo = " + fmt_full(c.j_lo) + "\n";
    out += "j_hi = " + fmt_full(c.j_hi) + "\n";
    out += std::string("objective = ") + objective_name(c.objective) + "\n";
    out += std::string("normalization = ") + norm_name(c.normalization) + "\n";
    out += "tol = " + fmt_full(c.tol) + "\n";
    if (c.exact_coeffs) out += "exact_coeffs = " + join(*c.exact_coeffs) + "\n";
    if (!c.output_path.empty()) out += "output_path = " + c.output_path + "\n";
    return out;
}

RunConfig preset_table1(Normalization norm) {
    RunConfig c;
    const double s2 = std::sqrt(2.0);
    c.alpha = -3.0;
    c.beta = -4.0;
    c.j_true = s2;
    c.f_coeffs = {-2.0 - 3.0 * s2, -2.0 * s2, s2}; // -2 + sqrt(2)(x^2 - 2x - 3)
    c.exact_coeffs = std::vector<double>{-3.0, -2.0, 1.0}; // x^2 - 2x - 3
    c.m_values = {3, 7, 15, 31, 63};
    c.n_values = {31};
    c.normalization = norm;
    return c;
}

RunConfig preset_table2(Normalization norm) {
    RunConfig c = preset_table1(norm);
    c.m_values = {3, 7, 15, 31};
    c.n_values = {31};
    c.objective = ObjectiveKind::kAbsSum;
    return c;
}

namespace {

ProblemSpec make_spec(const RunConfig& c) {
    return ProblemSpec{c.alpha, c.beta, c.j_true, PiecewisePoly::from_coeffs(c.f_coeffs)};
}

} // namespace

std::string run_direct(const RunConfig& c) {
    validate(c);
    const ProblemSpec spec = make_spec(c);
    if (c.exact_coeffs) {
        const PiecewisePoly exact = PiecewisePoly::from_coeffs(*c.exact_coeffs);
        std::vector<std::function<std::string()>> tasks;
        for (int m : c.m_values)
            tasks.push_back([&, m] {
                const auto sol = solve_direct(spec, m, c.normalization);
                const auto e = error_norms(sol, exact);
                return std::to_string(m) + "," + fmt_csv(e.l2) + "," + fmt_csv(e.h1semi) +
                       "," + fmt_csv(e.h1) + "\n";
            });
        return run_rows(tasks, "m,l2_error,h1semi_error,h1_error");
    }
    // no exact solution: dump solution samples on a uniform grid
    std::vector<std::function<std::string()>> tasks;
    for (int m : c.m_values)
        tasks.push_back([&, m] {
            const auto sol = solve_direct(spec, m, c.normalization);
            std::string rows;
            for (int i = 0; i <= 100; ++i) {
                const double x = i / 100.0;
                rows += std::to_string(m) + "," + fmt_csv(x) + "," +
                        fmt_csv(sol.as_pwpoly(x)) + "\n";
            }
            return rows;
        });
    return run_rows(tasks, "m,x,u");
}

std::string run_inverse(const RunConfig& c) {
    validate(c);
    const ProblemSpec spec = make_spec(c);
    std::vector<std::function<std::string()>> tasks;
    for (int m : c.m_values)
        for (int n : c.n_values)
            tasks.push_back([&, m, n] {
                const auto target = solve_direct(spec, m, c.normalization);
                const auto res =
                    recover_parameter(target.as_pwpoly, spec.f, n, c.j_lo, c.j_hi,
                                      c.objective, c.normalization, c.tol, m);
                return std::to_string(m) + "," + std::to_string(n) + "," +
                       fmt_csv(res.j_star) + "," + fmt_csv(res.objective_value) + "," +
                       objective_name(res.objective_kind) + "," + norm_name(res.norm) +
                       "\n";
            });
    return run_rows(tasks, "m,n,j_star,objective_value,objective,normalization");
}

std::string run_bound(const RunConfig& c) {
    validate(c);
    if (!c.exact_coeffs)
        throw ConfigError("bound command requires config key 'exact_coeffs'");
    const ProblemSpec spec = make_spec(c);
    const PiecewisePoly exact = PiecewisePoly::from_coeffs(*c.exact_coeffs);
    std::vector<std::function<std::string()>> tasks;
    for (int m : c.m_values)
        for (int n : c.n_values)
            tasks.push_back([&, m, n] {
                const auto target = solve_direct(spec, m, c.normalization);
                const auto e = error_norms(target, exact);
                const double bound =
                    collage_bound(target.as_pwpoly, spec, n, c.normalization);
                const double ratio = e.h1 > 0.0 ? bound / e.h1 : 0.0;
                return std::to_string(m) + "," + std::to_string(n) + "," +
                       fmt_csv(e.h1) + "," + fmt_csv(bound) + "," + fmt_csv(ratio) +
                       "\n";
            });
    return run_rows(tasks, "m,n,h1_error,collage_bound,ratio");
}

} // namespace vicollage
