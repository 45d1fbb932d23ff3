#include "tfrac/spectral.hpp"

#include "tfrac/frac_ops.hpp"
#include "tfrac/norms.hpp"
#include "tfrac/parallel.hpp"
#include "tfrac/special.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

namespace tfrac {

SpatialDomain SpatialDomain::interval(double L, int M) {
    SpatialDomain d;
    d.kind = Kind::interval;
    d.Lx = L;
    d.quad_res = M;
    d.validate();
    return d;
}

SpatialDomain SpatialDomain::rectangle(double Lx, double Ly, int M) {
    SpatialDomain d;
    d.kind = Kind::rectangle;
    d.Lx = Lx;
    d.Ly = Ly;
    d.quad_res = M;
    d.validate();
    return d;
}

void SpatialDomain::validate() const {
    if (!(Lx > 0.0) || (kind == Kind::rectangle && !(Ly > 0.0)))
        throw std::invalid_argument("SpatialDomain: side lengths must be positive");
    if (quad_res < 64) throw std::invalid_argument("SpatialDomain: quadrature resolution < 64");
}

double EigenBasis::eval(int k, Point p) const {
    const EigenMode& m = modes.at(k);
    if (p.x < 0.0 || p.x > domain.Lx)
        throw std::out_of_range("EigenBasis::eval: point outside domain");
    const double sx = std::sqrt(2.0 / domain.Lx) * std::sin(m.kx * M_PI * p.x / domain.Lx);
    if (domain.kind == SpatialDomain::Kind::interval) return sx;
    if (p.y < 0.0 || p.y > domain.Ly)
        throw std::out_of_range("EigenBasis::eval: point outside domain");
    return sx * std::sqrt(2.0 / domain.Ly) * std::sin(m.ky * M_PI * p.y / domain.Ly);
}

EigenBasis build_basis(const SpatialDomain& domain, int K) {
    domain.validate();
    if (K < 1) throw std::invalid_argument("build_basis: K must be at least 1");
    EigenBasis basis;
    basis.domain = domain;
    if (domain.kind == SpatialDomain::Kind::interval) {
        for (int k = 1; k <= K; ++k) {
            const double w = k * M_PI / domain.Lx;
            basis.modes.push_back({w * w, k, 0});
        }
        return basis;
    }
    // Enumerate enough tensor pairs, sort by eigenvalue with lexicographic
    // (kx, ky) tie-break, keep the K smallest.
    std::vector<EigenMode> all;
    for (int kx = 1; kx <= K + 1; ++kx)
        for (int ky = 1; ky <= K + 1; ++ky) {
            const double wx = kx * M_PI / domain.Lx;
            const double wy = ky * M_PI / domain.Ly;
            all.push_back({wx * wx + wy * wy, kx, ky});
        }
    std::stable_sort(all.begin(), all.end(), [](const EigenMode& a, const EigenMode& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        if (a.kx != b.kx) return a.kx < b.kx;
        return a.ky < b.ky;
    });
    all.resize(K);
    basis.modes = std::move(all);
    return basis;
}

namespace {

// 4-point Gauss-Legendre on [0,1].
constexpr double kGaussX[4] = {0.06943184420297371, 0.33000947820757187,
                               0.6699905217924281, 0.9305681557970263};
constexpr double kGaussW[4] = {0.17392742256872693, 0.32607257743127305,
                               0.32607257743127305, 0.17392742256872693};

struct AxisQuad {
    std::vector<double> x;  // nodes on [0, L]
    std::vector<double> w;  // weights
};

AxisQuad axis_quad(double L, int M) {
    AxisQuad q;
    const double h = L / M;
    q.x.reserve(4 * M);
    q.w.reserve(4 * M);
    for (int m = 0; m < M; ++m)
        for (int i = 0; i < 4; ++i) {
            q.x.push_back((m + kGaussX[i]) * h);
            q.w.push_back(kGaussW[i] * h);
        }
    return q;
}

double sine_mode(double x, int k, double L) {
    return std::sqrt(2.0 / L) * std::sin(k * M_PI * x / L);
}

std::vector<double> project_impl(const std::function<double(Point)>& fn, const EigenBasis& basis,
                                 int M) {
    const SpatialDomain& dom = basis.domain;
    const AxisQuad qx = axis_quad(dom.Lx, M);
    std::vector<double> out(basis.count(), 0.0);
    if (dom.kind == SpatialDomain::Kind::interval) {
        std::vector<double> fv(qx.x.size());
        for (std::size_t q = 0; q < qx.x.size(); ++q) fv[q] = fn({qx.x[q], 0.0});
        for (int k = 0; k < basis.count(); ++k) {
            double acc = 0.0;
            for (std::size_t q = 0; q < qx.x.size(); ++q)
                acc += qx.w[q] * fv[q] * sine_mode(qx.x[q], basis.modes[k].kx, dom.Lx);
            out[k] = acc;
        }
        return out;
    }
    const AxisQuad qy = axis_quad(dom.Ly, M);
    const std::size_t QX = qx.x.size(), QY = qy.x.size();
    std::vector<double> fv(QX * QY);
    for (std::size_t i = 0; i < QX; ++i)
        for (std::size_t j = 0; j < QY; ++j) fv[i * QY + j] = fn({qx.x[i], qy.x[j]});
    // Factorized tensor contraction: first the y axis, then x per mode.
    std::vector<int> kys;
    for (const auto& m : basis.modes) kys.push_back(m.ky);
    std::sort(kys.begin(), kys.end());
    kys.erase(std::unique(kys.begin(), kys.end()), kys.end());
    std::vector<std::vector<double>> partial;  // indexed like kys: [QX]
    for (int ky : kys) {
        std::vector<double> row(QX, 0.0);
        for (std::size_t i = 0; i < QX; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < QY; ++j)
                acc += qy.w[j] * fv[i * QY + j] * sine_mode(qy.x[j], ky, dom.Ly);
            row[i] = acc;
        }
        partial.push_back(std::move(row));
    }
    for (int k = 0; k < basis.count(); ++k) {
        const auto it = std::lower_bound(kys.begin(), kys.end(), basis.modes[k].ky);
        const auto& row = partial[it - kys.begin()];
        double acc = 0.0;
        for (std::size_t i = 0; i < QX; ++i)
            acc += qx.w[i] * row[i] * sine_mode(qx.x[i], basis.modes[k].kx, dom.Lx);
        out[k] = acc;
    }
    return out;
}

}  // namespace

std::vector<double> project(const std::function<double(Point)>& fn, const EigenBasis& basis) {
    const int M = basis.domain.quad_res;
    std::vector<double> coarse = project_impl(fn, basis, M);
    std::vector<double> fine = project_impl(fn, basis, 2 * M);
    for (int k = 0; k < basis.count(); ++k)
        if (std::abs(coarse[k] - fine[k]) > 1e-6) {
            std::cerr << "[tfrac] warning: projection coefficient " << k
                      << " not resolved at quadrature resolution M=" << M << "\n";
            break;
        }
    return fine;
}

void ProblemSpec::validate() const {
    domain.validate();
    if (!(alpha > 0.5) || !(alpha < 1.0))
        throw std::invalid_argument("ProblemSpec: the model requires 0.5 < alpha < 1");
    if (!(T > 0.0)) throw std::invalid_argument("ProblemSpec: T must be positive");
    if (K < 1 || N < 2) throw std::invalid_argument("ProblemSpec: K >= 1 and N >= 2 required");
    if (!u0) throw std::invalid_argument("ProblemSpec: missing u0");
}

double SpectralField::spectral_tail() const {
    double peak = 0.0, last = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const double m = coeffs[k].max_norm();
        peak = std::max(peak, m);
        if (k + 1 == coeffs.size()) last = m;
    }
    return peak > 0.0 ? last / peak : 0.0;
}

SpectralField solve_field(const ProblemSpec& spec) {
    spec.validate();
    SpectralField field;
    field.basis = build_basis(spec.domain, spec.K);
    field.c0 = project(spec.u0, field.basis);

    const TimeGrid grid(spec.T, spec.N);
    field.modal_force.assign(spec.K, GridFn(grid));
    if (spec.f) {
        // Project one time slab at a time so f is evaluated once per point.
        std::vector<std::vector<double>> slabs(spec.N + 1);
        parallel_for(spec.N + 1, [&](int n) {
            const double t = grid.node(n);
            slabs[n] = project_impl([&](Point p) { return spec.f(p, t); }, field.basis,
                                    spec.domain.quad_res);
        });
        for (int n = 0; n <= spec.N; ++n)
            for (int k = 0; k < spec.K; ++k) field.modal_force[k][n] = slabs[n][k];
    }

    field.coeffs.assign(spec.K, GridFn(grid));
    std::vector<std::string> failures(spec.K);
    parallel_for(spec.K, [&](int k) {
        try {
            ModeProblem p{spec.alpha, field.basis.modes[k].lambda, field.c0[k],
                          field.modal_force[k], field.modal_force[k][0]};
            switch (spec.solver) {
                case SolverId::oracle: field.coeffs[k] = solve_ml_oracle(p); break;
                case SolverId::l1: field.coeffs[k] = solve_l1(p); break;
                case SolverId::l1_corrected: field.coeffs[k] = solve_l1_corrected(p).first; break;
            }
        } catch (const std::exception& e) {
            failures[k] = e.what();
        }
    });
    std::ostringstream bad;
    for (int k = 0; k < spec.K; ++k)
        if (!failures[k].empty()) bad << " [mode " << k + 1 << "] " << failures[k];
    if (!bad.str().empty()) throw std::runtime_error("solve_field: mode solves failed:" + bad.str());
    return field;
}

SingularField singular_field(const SpectralField& field, const ProblemSpec& spec) {
    if (field.modal_force.empty())
        throw std::invalid_argument("singular_field: field carries no modal force data");
    SingularField s;
    s.basis = field.basis;
    s.alpha = spec.alpha;
    const double ga = gamma_fn(1.0 + spec.alpha);
    for (int k = 0; k < field.basis.count(); ++k)
        s.sigma.push_back((field.modal_force[k][0] - field.basis.modes[k].lambda * field.c0[k]) /
                          ga);
    return s;
}

double SingularField::eval(Point p, double t) const {
    double acc = 0.0;
    const double ta = std::pow(t, alpha);
    for (int k = 0; k < basis.count(); ++k) acc += sigma[k] * ta * basis.eval(k, p);
    return acc;
}

double evaluate_field(const SpectralField& field, Point p, double t) {
    if (t < 0.0 || t > field.coeffs.front().grid.T)
        throw std::out_of_range("evaluate_field: time outside [0,T]");
    double acc = 0.0;
    for (int k = 0; k < field.basis.count(); ++k)
        acc += field.coeffs[k].eval(t) * field.basis.eval(k, p);
    return acc;
}

double weak_residual(const SpectralField& field, const ProblemSpec& spec, int mode_j,
                     const std::function<double(double)>& eta,
                     const std::function<double(double)>& eta_prime) {
    const GridFn& c = field.coeffs.at(mode_j);
    const TimeGrid grid = c.grid;
    GridFn shifted(grid);
    for (int n = 0; n <= grid.N; ++n) shifted[n] = c[n] - field.c0[mode_j];
    const GridFn integral = frac_integral_left(shifted, 1.0 - spec.alpha);
    const GridFn eta_fn = GridFn::sample(grid, eta);
    const GridFn etap_fn = GridFn::sample(grid, eta_prime);
    const double frac_term = -inner_product(integral, etap_fn);
    const double stiff_term = field.basis.modes[mode_j].lambda * inner_product(c, eta_fn);
    const double force_term = inner_product(field.modal_force[mode_j], eta_fn);
    return std::abs(frac_term + stiff_term - force_term);
}

namespace {

// H^s(0,T) norm for s in [0,2]; s = 2 stacks two difference quotients.
double norm_h(const GridFn& v, double s) {
    if (s < 2.0) return sobolev_norm(v, s);
    const GridFn d = difference_quotient(v);
    const GridFn dd = difference_quotient(d);
    const double a = v.l2_norm(), b = d.l2_norm(), c = dd.l2_norm();
    return std::sqrt(a * a + b * b + c * c);
}

struct Evaluated {
    const SpectralField& field;
    const ProblemSpec& spec;
    std::vector<double> lambda;   // per mode
    std::vector<double> sigma;    // singular coefficients
    std::vector<GridFn> u_minus_s;  // c_k - sigma_k t^alpha

    explicit Evaluated(const SpectralField& f, const ProblemSpec& sp) : field(f), spec(sp) {
        for (const auto& m : f.basis.modes) lambda.push_back(m.lambda);
        SingularField sf = singular_field(f, sp);
        sigma = sf.sigma;
        const TimeGrid grid = f.coeffs.front().grid;
        for (int k = 0; k < f.basis.count(); ++k) {
            GridFn w(grid);
            for (int n = 0; n <= grid.N; ++n)
                w[n] = f.coeffs[k][n] - sigma[k] * std::pow(grid.node(n), sp.alpha);
            u_minus_s.push_back(std::move(w));
        }
    }

    std::vector<double> weight_pow(double e) const {
        std::vector<double> w;
        for (double l : lambda) w.push_back(std::pow(l, e));
        return w;
    }

    double vec_norm(const std::vector<GridFn>& c, double lam_pow, double s) const {
        double acc = 0.0;
        const std::vector<double> w = weight_pow(lam_pow);
        for (std::size_t k = 0; k < c.size(); ++k) {
            const double nk = norm_h(c[k], s);
            acc += w[k] * nk * nk;
        }
        return std::sqrt(acc);
    }

    double data_f_norm(double s) const {
        double acc = 0.0;
        for (const auto& fk : field.modal_force) {
            const double n = norm_h(fk, s);
            acc += n * n;
        }
        return std::sqrt(acc);
    }

    double data_u0_norm(double lam_pow) const {
        double acc = 0.0;
        for (std::size_t k = 0; k < field.c0.size(); ++k)
            acc += std::pow(lambda[k], lam_pow) * field.c0[k] * field.c0[k];
        return std::sqrt(acc);
    }

    double data_f0_h2() const {
        double acc = 0.0;
        for (std::size_t k = 0; k < field.modal_force.size(); ++k)
            acc += lambda[k] * lambda[k] * field.modal_force[k][0] * field.modal_force[k][0];
        return std::sqrt(acc);
    }
};

std::pair<double, double> evaluate_estimate(const Evaluated& ev, const std::string& id) {
    const double a = ev.spec.alpha;
    const auto& c = ev.field.coeffs;
    if (id == "esti-u-1")
        return {ev.vec_norm(c, 0, a) + ev.vec_norm(c, 1, a / 2) + ev.vec_norm(c, 2, 0),
                ev.data_f_norm(0) + ev.data_u0_norm(1)};
    if (id == "esti-u-2")
        return {ev.vec_norm(c, 0, 1), ev.data_f_norm(1.0 - a) + ev.data_u0_norm(2)};
    if (id == "esti-u-3")
        return {ev.vec_norm(ev.u_minus_s, 0, 1 + a) + ev.vec_norm(ev.u_minus_s, 1, 1 + a / 2) +
                    ev.vec_norm(c, 2, 1),
                ev.data_f_norm(1) + ev.data_f0_h2() + ev.data_u0_norm(4)};
    if (id == "esti-u-4") {
        if (!(a > 0.75))
            throw std::invalid_argument("esti-u-4 requires 0.75 < alpha < 1");
        return {ev.vec_norm(ev.u_minus_s, 0, 2.0),
                ev.data_f_norm(2.0 - a) + ev.data_f0_h2() + ev.data_u0_norm(4)};
    }

    // ODE-layer estimates evaluated on the dominant (first) mode.
    const GridFn& y = c.front();
    const GridFn& ys = ev.u_minus_s.front();
    const GridFn& g = ev.field.modal_force.front();
    const double l = ev.lambda.front();
    const double sl = std::sqrt(l);
    const double y0 = ev.field.c0.front();
    const double jump = std::abs(g[0] - l * y0);
    if (id == "ode-1-1")
        return {norm_h(y, a / 2) + sl * y.l2_norm(), g.l2_norm() / sl + std::abs(y0)};
    if (id == "ode-1-2")
        return {norm_h(y, a) + sl * norm_h(y, a / 2), g.l2_norm() + sl * std::abs(y0)};
    if (id == "ode-1-3") return {l * y.l2_norm(), g.l2_norm() + sl * std::abs(y0)};
    if (id == "ode-1-4") return {norm_h(y, 1), norm_h(g, 1.0 - a) + l * std::abs(y0)};
    if (id == "ode-2-1")
        return {norm_h(ys, 1 + a / 2) + sl * norm_h(y, 1),
                norm_h(g, 1) / sl + std::abs(y0) + sl * jump};
    if (id == "ode-2-2")
        return {norm_h(ys, 1 + a) + sl * norm_h(ys, 1 + a / 2),
                norm_h(g, 1) + std::abs(y0) + l * jump};
    if (id == "ode-2-3")
        return {l * norm_h(y, 1), norm_h(g, 1) + sl * std::abs(y0) + l * jump};
    if (id == "ode-2-4") {
        if (!(a > 0.75))
            throw std::invalid_argument("ode-2-4 requires 0.75 < alpha < 1");
        return {norm_h(ys, 2.0), norm_h(g, 2.0 - a) + std::abs(y0) + l * jump};
    }
    throw std::invalid_argument("unknown estimate id '" + id + "'");
}

}  // namespace

RegularityReport regularity_report(const ProblemSpec& spec,
                                   const std::vector<std::string>& estimate_ids) {
    ProblemSpec fine = spec;
    fine.N *= 2;
    fine.K *= 2;
    const SpectralField base_field = solve_field(spec);
    const SpectralField fine_field = solve_field(fine);
    const Evaluated base(base_field, spec);
    const Evaluated refined(fine_field, fine);

    RegularityReport report;
    report.alpha = spec.alpha;
    report.T = spec.T;
    report.N = spec.N;
    report.K = spec.K;
    report.solver = solver_name(spec.solver);
    for (const auto& id : estimate_ids) {
        const auto [lhs, rhs] = evaluate_estimate(base, id);
        const auto [lhs2, rhs2] = evaluate_estimate(refined, id);
        RegularityRecord rec;
        rec.id = id;
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
        const double ratio2 = rhs2 > 0.0 ? lhs2 / rhs2 : 0.0;
        rec.refinement_change =
            rec.ratio > 0.0 ? std::abs(ratio2 - rec.ratio) / rec.ratio : std::abs(ratio2);
        rec.refinement_stable = rec.refinement_change <= 0.15;
        report.records.push_back(rec);
    }
    return report;
}

}  // namespace tfrac
