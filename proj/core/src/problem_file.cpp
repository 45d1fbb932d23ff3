#include "tfrac/problem_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tfrac {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_number(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ProblemFileError("problem file: key '" + key + "' needs a number, got '" + value +
                               "'");
    }
}

int to_int(const std::string& key, const std::string& value) {
    const double v = to_number(key, value);
    const int n = static_cast<int>(v);
    if (n != v) throw ProblemFileError("problem file: key '" + key + "' needs an integer");
    return n;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ProblemFile ProblemFile::parse(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ProblemFileError("problem file: line " + std::to_string(lineno) +
                                   " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ProblemFileError("problem file: line " + std::to_string(lineno) +
                                   " has an empty key or value");
        if (kv.count(key))
            throw ProblemFileError("problem file: duplicate key '" + key + "'");
        kv[key] = value;
    }

    ProblemFile out;
    out.source = text;
    out.hash = fnv1a64(text);

    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) return std::string();
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    const std::string domain = take("domain");
    double L = 1.0, Lx = 1.0, Ly = 1.0;
    if (auto v = take("L"); !v.empty()) L = to_number("L", v);
    if (auto v = take("Lx"); !v.empty()) Lx = to_number("Lx", v);
    if (auto v = take("Ly"); !v.empty()) Ly = to_number("Ly", v);
    if (domain.empty() || domain == "interval")
        out.spec.domain = SpatialDomain::interval(L);
    else if (domain == "rectangle")
        out.spec.domain = SpatialDomain::rectangle(Lx, Ly);
    else
        throw ProblemFileError("problem file: domain must be 'interval' or 'rectangle', got '" +
                               domain + "'");

    if (auto v = take("alpha"); !v.empty()) out.spec.alpha = to_number("alpha", v);
    if (auto v = take("T"); !v.empty()) out.spec.T = to_number("T", v);
    if (auto v = take("K"); !v.empty()) out.spec.K = to_int("K", v);
    if (auto v = take("N"); !v.empty()) out.spec.N = to_int("N", v);
    if (auto v = take("solver"); !v.empty()) {
        try {
            out.spec.solver = parse_solver_id(v);
        } catch (const std::exception& e) {
            throw ProblemFileError(std::string("problem file: ") + e.what());
        }
    }

    const double alpha = out.spec.alpha;
    const double T = out.spec.T;

    const std::string u0_text = take("u0");
    if (u0_text.empty()) throw ProblemFileError("problem file: key 'u0' is required");
    Expr u0_expr;
    try {
        u0_expr = Expr::parse(u0_text);
    } catch (const ExprError& e) {
        throw ProblemFileError(std::string("problem file: u0: ") + e.what());
    }
    out.spec.u0 = [u0_expr, alpha, T](Point p) {
        ExprEnv env;
        env.x = p.x;
        env.y = p.y;
        env.alpha = alpha;
        env.T = T;
        return u0_expr.eval(env);
    };

    if (const std::string f_text = take("f"); !f_text.empty()) {
        Expr f_expr;
        try {
            f_expr = Expr::parse(f_text);
        } catch (const ExprError& e) {
            throw ProblemFileError(std::string("problem file: f: ") + e.what());
        }
        out.spec.f = [f_expr, alpha, T](Point p, double t) {
            ExprEnv env;
            env.x = p.x;
            env.y = p.y;
            env.t = t;
            env.alpha = alpha;
            env.T = T;
            return f_expr.eval(env);
        };
    }

    if (const std::string est = take("estimates"); !est.empty()) {
        std::istringstream es(est);
        std::string id;
        while (std::getline(es, id, ',')) {
            id = trim(id);
            if (!id.empty()) out.estimates.push_back(id);
        }
    }

    if (!kv.empty())
        throw ProblemFileError("problem file: unknown key '" + kv.begin()->first + "'");

    out.spec.validate();
    return out;
}

ProblemFile ProblemFile::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProblemFileError("problem file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace tfrac
