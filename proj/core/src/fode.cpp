#include "tfrac/fode.hpp"

#include "tfrac/frac_ops.hpp"
#include "tfrac/special.hpp"

#include <cmath>

namespace tfrac {

void ModeProblem::validate() const {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("ModeProblem: alpha out of (0,1)");
    if (!(lambda > 0.0)) throw std::invalid_argument("ModeProblem: lambda must be positive");
    g.check();
}

double SingularPart::eval(double t) const { return coefficient * std::pow(t, alpha); }

GridFn SingularPart::sample(TimeGrid grid) const {
    GridFn s(grid);
    for (int n = 0; n <= grid.N; ++n) s[n] = eval(grid.node(n));
    return s;
}

SolverId parse_solver_id(const std::string& name) {
    if (name == "oracle") return SolverId::oracle;
    if (name == "l1") return SolverId::l1;
    if (name == "l1_corrected") return SolverId::l1_corrected;
    throw std::invalid_argument("unknown solver '" + name + "'");
}

std::string solver_name(SolverId id) {
    switch (id) {
        case SolverId::oracle: return "oracle";
        case SolverId::l1: return "l1";
        default: return "l1_corrected";
    }
}

GridFn solve_ml_oracle(const ModeProblem& p) {
    p.validate();
    const TimeGrid grid = p.g.grid;
    const int N = grid.N;
    const double tau = grid.tau();
    const double a = p.alpha;
    const double l = p.lambda;

    // Per-lag tables at u = d tau:
    //   E_d = E_a(-l u^a)            (homogeneous factor)
    //   B_d = u^a E_{a,a+1}(-l u^a)  (antiderivative of the kernel)
    //   C_d = u^{a+1} E_{a,a+2}(-l u^a)
    // so that  int u K du = [u B(u) - C(u)]  and  int K du = [B(u)].
    const MLParams pa(a, 1.0), pb(a, a + 1.0), pc(a, a + 2.0);
    std::vector<double> E(N + 1), B(N + 1), C(N + 1);
    for (int d = 0; d <= N; ++d) {
        const double u = d * tau;
        const double z = -l * std::pow(u, a);
        E[d] = mittag_leffler(pa, z);
        B[d] = std::pow(u, a) * mittag_leffler(pb, z);
        C[d] = std::pow(u, a + 1.0) * mittag_leffler(pc, z);
    }

    GridFn y(grid);
    y[0] = p.y0;
    for (int n = 1; n <= N; ++n) {
        double conv = 0.0;
        for (int d = 1; d <= n; ++d) {
            const double g0 = p.g[n - d];
            const double m = (p.g[n - d + 1] - g0) / tau;
            const double dB = B[d] - B[d - 1];
            const double dUB = d * tau * B[d] - C[d] - ((d - 1) * tau * B[d - 1] - C[d - 1]);
            conv += (g0 + m * d * tau) * dB - m * dUB;
        }
        y[n] = p.y0 * E[n] + conv;
    }
    return y;
}

namespace {

// Shared L1 stepping for w with w(0) = 0: D^a w + lambda w = rhs.
GridFn l1_step(double alpha, double lambda, const GridFn& rhs) {
    const TimeGrid grid = rhs.grid;
    const int N = grid.N;
    const double tau = grid.tau();
    const double scale = std::pow(tau, -alpha) / gamma_fn(2.0 - alpha);
    const std::vector<double> b = l1_weights(alpha, N);

    GridFn w(grid);
    w[0] = 0.0;
    for (int n = 1; n <= N; ++n) {
        double hist = 0.0;  // sum_{j=1}^{n-1} b_j (w_{n-j} - w_{n-j-1})
        for (int j = 1; j < n; ++j) hist += b[j] * (w[n - j] - w[n - j - 1]);
        w[n] = (rhs[n] + scale * (w[n - 1] - hist)) / (scale + lambda);
    }
    return w;
}

}  // namespace

GridFn solve_l1(const ModeProblem& p) {
    p.validate();
    // Solve for w = y - y0: D^a w + lambda w = g - lambda y0, w(0) = 0.
    GridFn rhs(p.g.grid);
    for (int n = 0; n <= p.g.grid.N; ++n) rhs[n] = p.g[n] - p.lambda * p.y0;
    GridFn w = l1_step(p.alpha, p.lambda, rhs);
    for (double& v : w.values) v += p.y0;
    return w;
}

std::pair<GridFn, SingularPart> solve_l1_corrected(const ModeProblem& p) {
    p.validate();
    SingularPart S{(p.g0 - p.lambda * p.y0) / gamma_fn(1.0 + p.alpha), p.alpha};
    // w = y - y0 - S satisfies D^a w + lambda w = g - g0 - lambda S,
    // using the identity D^a S = g0 - lambda y0.
    GridFn rhs(p.g.grid);
    for (int n = 0; n <= p.g.grid.N; ++n)
        rhs[n] = p.g[n] - p.g0 - p.lambda * S.eval(p.g.grid.node(n));
    GridFn w = l1_step(p.alpha, p.lambda, rhs);
    GridFn y(p.g.grid);
    for (int n = 0; n <= p.g.grid.N; ++n) y[n] = p.y0 + S.eval(p.g.grid.node(n)) + w[n];
    return {std::move(y), S};
}

ModeProblem ModeProblemSpec::instantiate(int N) const {
    TimeGrid grid(T, N);
    return ModeProblem{alpha, lambda, y0, GridFn::sample(grid, g), g0};
}

double ConvergenceTable::fitted_order_linf(int tail) const {
    if (order_linf.empty()) return 0.0;
    int from = tail > 0 ? std::max<int>(0, int(order_linf.size()) - tail) : 0;
    double s = 0.0;
    for (std::size_t i = from; i < order_linf.size(); ++i) s += order_linf[i];
    return s / (order_linf.size() - from);
}

double ConvergenceTable::fitted_order_l2(int tail) const {
    if (order_l2.empty()) return 0.0;
    int from = tail > 0 ? std::max<int>(0, int(order_l2.size()) - tail) : 0;
    double s = 0.0;
    for (std::size_t i = from; i < order_l2.size(); ++i) s += order_l2[i];
    return s / (order_l2.size() - from);
}

ConvergenceTable estimate_order(SolverId solver, const ModeProblemSpec& spec, int base_N,
                                int levels) {
    if (levels < 3) throw std::invalid_argument("estimate_order: need at least 3 levels");
    ConvergenceTable table;
    double scale = 0.0;
    for (int i = 0; i < levels; ++i) {
        const int N = base_N << i;
        const ModeProblem p = spec.instantiate(N);
        const GridFn ref = solve_ml_oracle(p);
        GridFn num = (solver == SolverId::oracle)  ? solve_ml_oracle(p)
                     : (solver == SolverId::l1)    ? solve_l1(p)
                                                   : solve_l1_corrected(p).first;
        GridFn diff(p.g.grid);
        for (int n = 0; n <= N; ++n) diff[n] = num[n] - ref[n];
        table.sizes.push_back(N);
        table.err_linf.push_back(diff.max_norm());
        table.err_l2.push_back(diff.l2_norm());
        scale = std::max(scale, ref.max_norm());
    }
    table.exact = true;
    for (double e : table.err_linf)
        if (e > 1e-12 * std::max(1.0, scale)) table.exact = false;
    for (int i = 0; i + 1 < levels; ++i) {
        auto safe_order = [](double a, double b) {
            if (a <= 0.0 || b <= 0.0) return 0.0;
            return std::log2(a / b);
        };
        table.order_linf.push_back(safe_order(table.err_linf[i], table.err_linf[i + 1]));
        table.order_l2.push_back(safe_order(table.err_l2[i], table.err_l2[i + 1]));
    }
    return table;
}

double estimate_singular_exponent(const GridFn& y, double y0, int window) {
    const int N = y.grid.N;
    if (window < 2 || window > N / 8)
        throw std::invalid_argument("estimate_singular_exponent: window must lie in [2, N/8]");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = 1; n <= window; ++n) {
        const double dy = std::abs(y[n] - y0);
        if (dy <= 0.0)
            throw std::invalid_argument("estimate_singular_exponent: degenerate window");
        const double lx = std::log(y.grid.node(n));
        const double ly = std::log(dy);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const int m = window;
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace tfrac
