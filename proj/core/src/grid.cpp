#include "tfrac/grid.hpp"

namespace tfrac {

double inner_product(const GridFn& u, const GridFn& v) {
    if (!(u.grid == v.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    const double tau = u.grid.tau();
    double acc = 0.5 * (u[0] * v[0] + u[u.grid.N] * v[u.grid.N]);
    for (int n = 1; n < u.grid.N; ++n) acc += u[n] * v[n];
    return tau * acc;
}

GridFn difference_quotient(const GridFn& v) {
    const int N = v.grid.N;
    const double tau = v.grid.tau();
    GridFn d(v.grid);
    d[0] = (v[1] - v[0]) / tau;
    for (int n = 1; n < N; ++n) d[n] = (v[n + 1] - v[n - 1]) / (2.0 * tau);
    d[N] = (v[N] - v[N - 1]) / tau;
    return d;
}

GridFn reverse(const GridFn& v) {
    GridFn r(v.grid);
    for (int n = 0; n <= v.grid.N; ++n) r[n] = v[v.grid.N - n];
    return r;
}

}  // namespace tfrac
