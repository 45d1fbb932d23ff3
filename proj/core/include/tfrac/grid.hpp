#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace tfrac {

/// Uniform mesh 0 = t_0 < t_1 < ... < t_N = T.
struct TimeGrid {
    double T = 1.0;
    int N = 2;

    TimeGrid() = default;
    TimeGrid(double duration, int intervals) : T(duration), N(intervals) {
        if (!(T > 0.0)) throw std::invalid_argument("TimeGrid: T must be positive");
        if (N < 2) throw std::invalid_argument("TimeGrid: need at least 2 intervals");
    }

    double tau() const { return T / N; }
    double node(int n) const { return T * n / N; }

    bool operator==(const TimeGrid& o) const { return T == o.T && N == o.N; }
};

/// Sampled function on a TimeGrid, read as its piecewise linear interpolant.
struct GridFn {
    TimeGrid grid;
    std::vector<double> values;  // length N+1

    GridFn() = default;
    GridFn(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        check();
    }
    explicit GridFn(TimeGrid g) : grid(g), values(g.N + 1, 0.0) {}

    static GridFn sample(TimeGrid g, const std::function<double(double)>& f) {
        std::vector<double> v(g.N + 1);
        for (int n = 0; n <= g.N; ++n) v[n] = f(g.node(n));
        return GridFn(g, std::move(v));
    }

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int n) const { return values[n]; }
    double& operator[](int n) { return values[n]; }

    /// Linear interpolation; t clamped to [0, T].
    double eval(double t) const {
        const double tau = grid.tau();
        double s = t / tau;
        if (s <= 0.0) return values.front();
        if (s >= grid.N) return values.back();
        int n = static_cast<int>(s);
        double w = s - n;
        return (1.0 - w) * values[n] + w * values[n + 1];
    }

    /// Trapezoidal L2(0,T) norm.
    double l2_norm() const {
        const double tau = grid.tau();
        double acc = 0.5 * (values.front() * values.front() + values.back() * values.back());
        for (int n = 1; n < grid.N; ++n) acc += values[n] * values[n];
        return std::sqrt(tau * acc);
    }

    double max_norm() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    void check() const {
        if (static_cast<int>(values.size()) != grid.N + 1)
            throw std::invalid_argument("GridFn: value count does not match grid");
        for (double v : values)
            if (!std::isfinite(v)) throw std::invalid_argument("GridFn: non-finite sample");
    }
};

/// Trapezoidal inner product of two functions on the same grid.
double inner_product(const GridFn& u, const GridFn& v);

/// Node-wise difference quotient: forward at 0, centered inside, backward at T.
GridFn difference_quotient(const GridFn& v);

/// Reverse the samples in time (t -> T - t).
GridFn reverse(const GridFn& v);

}  // namespace tfrac
