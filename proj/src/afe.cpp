#include "hlab/afe.hpp"

#include <cmath>

#include "hlab/specfun.hpp"

namespace hlab {

double afe_kernel(double x, int d, int A) {
    if (x <= 0.0) throw std::domain_error("afe_kernel: x must be positive");
    if (d < 1 || A < 1) throw std::domain_error("afe_kernel: need d >= 1, A >= 1");
    cplx log_norm = log_gamma(cplx(2.0 * d * (A + 1.0), 0.0));
    // sigma = -1/2 keeps the integrand O(x^{1/2}) as x -> 0 (pole at 0 crossed,
    // residue 1); sigma = +1 gives x^{-1} decay for x >= 1
    double sigma = x < 1.0 ? -0.5 : 1.0;
    double base = x < 1.0 ? 1.0 : 0.0;
    auto integrand = [&](double u) {
        cplx s(sigma, u);
        cplx g = std::exp(log_gamma(2.0 * d * (s + cplx(A + 1.0, 0.0))) - log_norm);
        return g * std::exp(-s * std::log(x)) / s;
    };
    double U = 44.0 / (PI * d) + 6.0;
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-12;
    // conjugate symmetry: 2 Re of the upper half
    cplx upper = integrate([&](double u) { return integrand(u); }, 0.0, U, spec).checked("afe kernel contour");
    return base + upper.real() / PI;
}

AfeKernelTable::AfeKernelTable(int d, int A) : d_(d), A_(A) {
    x_lo_ = 1e-9;
    // find where the kernel is dead
    double hi = 2.0;
    while (std::abs(afe_kernel(hi, d, A)) > 1e-15 && hi < 1e9) hi *= 1.4;
    x_hi_ = hi;
    int n = 1400;
    std::vector<double> ts(static_cast<size_t>(n)), vs(static_cast<size_t>(n));
    double t0 = std::log(x_lo_), t1 = std::log(x_hi_);
    for (int i = 0; i < n; ++i) {
        double t = t0 + (t1 - t0) * i / (n - 1.0);
        ts[static_cast<size_t>(i)] = t;
        vs[static_cast<size_t>(i)] = afe_kernel(std::exp(t), d, A);
    }
    spline_.build(std::move(ts), std::move(vs));
}

double AfeKernelTable::operator()(double x) const {
    if (x <= x_lo_) return 1.0;  // V -> 1 as x -> 0, tail O(x^{1/2}) below the grid
    if (x >= x_hi_) return 0.0;
    return spline_(std::log(x));
}

double AfeKernelTable::cutoff(double tol) const {
    double x = x_hi_;
    while (x > x_lo_ * 2.0 && std::abs((*this)(x * 0.8)) < tol) x *= 0.8;
    return x;
}

namespace {

template <typename T>
cplx afe_value_impl(const std::vector<T>& lambda, int d, double Q, double X, int A, double tail_tol) {
    if (X < Q) throw std::domain_error("afe_value: X below the conductor");
    AfeKernelTable V(d, A);
    double xcut = V.cutoff(tail_tol * 1e-2);
    double n_needed = xcut * X;
    if (n_needed > static_cast<double>(lambda.size()) + 0.5)
        throw std::length_error("afe_value: coefficient list too short for the kernel tail");
    cplx acc = 0.0;
    size_t nmax = std::min(lambda.size(), static_cast<size_t>(n_needed) + 1);
    for (size_t i = 0; i < nmax; ++i) {
        double n = static_cast<double>(i + 1);
        double v = V(n / X);
        if (v == 0.0) continue;
        acc += cplx(lambda[i]) * (v / std::sqrt(n));
    }
    return acc;
}

}  // namespace

cplx afe_value(const std::vector<cplx>& lambda, int d, double Q, double X, int A, double tail_tol) {
    return afe_value_impl(lambda, d, Q, X, A, tail_tol);
}

cplx afe_value(const std::vector<double>& lambda, int d, double Q, double X, int A, double tail_tol) {
    return afe_value_impl(lambda, d, Q, X, A, tail_tol);
}

}  // namespace hlab
