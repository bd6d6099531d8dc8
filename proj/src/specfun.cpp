#include "hlab/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hlab {

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients)
static const double kLanczosG = 607.0 / 128.0;
static const double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

static bool is_nonpositive_integer(cplx s) {
    if (s.imag() != 0.0) return false;
    double r = s.real();
    return r <= 0.0 && r == std::floor(r);
}

cplx log_gamma(cplx s) {
    if (is_nonpositive_integer(s)) throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // reflection: log Gamma(s) = log(pi / sin(pi s)) - log Gamma(1 - s)
        cplx logsin = std::log(std::sin(PI * s));
        // keep the principal branch consistent by unwinding the sine's
        // exponential growth off the real axis explicitly
        return std::log(cplx(PI, 0.0)) - logsin - log_gamma(1.0 - s);
    }
    cplx x = s - 1.0;
    cplx acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (x + static_cast<double>(k));
    cplx t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * PI) + (x + 0.5) * std::log(t) - t + std::log(acc);
}

cplx gamma_c(cplx s) { return std::exp(log_gamma(s)); }

cplx bessel_K(cplx nu, double y, bool* underflowed) {
    if (y <= 0.0) throw std::domain_error("bessel_K: y must be positive");
    if (underflowed) *underflowed = false;
    if (y > 650.0) {
        if (underflowed) *underflowed = true;
        return 0.0;
    }
    // truncate where y cosh u - |Re nu| u is safely past the underflow of
    // the requested tolerances
    double target = 45.0 + std::abs(nu.imag());
    double ch = std::max(2.0, target / y + std::abs(nu.real()));
    double umax = std::acosh(ch);
    QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-13;
    auto f = [&](double u) { return std::exp(-y * std::cosh(u)) * std::cosh(nu * u); };
    return integrate_trapezoid(f, 0.0, umax, spec).checked("bessel_K cosh kernel");
}

double bessel_K_it(double t, double y, bool* underflowed) {
    cplx v = bessel_K(cplx(0.0, t), y, underflowed);
    return v.real();
}

cplx bessel_J_series(cplx nu, double y) {
    // negative integer orders via J_{-n} = (-1)^n J_n
    if (nu.imag() == 0.0 && nu.real() == std::floor(nu.real()) && nu.real() < 0.0) {
        double n = -nu.real();
        double sign = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
        return sign * bessel_J_series(cplx(n, 0.0), y);
    }
    // sum_k (-1)^k (y/2)^{nu+2k} / (k! Gamma(nu+k+1))
    cplx prefac = std::exp(nu * std::log(0.5 * y) - log_gamma(nu + 1.0));
    cplx term = prefac;
    cplx acc = term;
    double q = 0.25 * y * y;
    for (int k = 1; k < 400; ++k) {
        term *= -q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        acc += term;
        if (std::abs(term) < 1e-17 * (std::abs(acc) + 1e-280) && k > 4) break;
    }
    return acc;
}

cplx bessel_J_integral(cplx nu, double y) {
    if (nu.real() <= -0.5) throw std::domain_error("bessel_J_integral: requires Re(nu) > -1/2");
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-12;
    spec.max_depth = 40;
    // int_0^{pi/2} sin(theta)^{2 nu} cos(y cos theta) dtheta, split at 0.3
    // with a log substitution near 0 where sin^{2nu} spins or vanishes
    double split = 0.3;
    auto main_part = integrate(
        [&](double th) { return std::exp(2.0 * nu * std::log(std::sin(th))) * std::cos(y * std::cos(th)); },
        split, 0.5 * PI, spec);
    // theta = split*exp(-s): d theta = -theta ds
    auto near0 = integrate(
        [&](double s) {
            double th = split * std::exp(-s);
            return std::exp(2.0 * nu * std::log(std::sin(th))) * std::cos(y * std::cos(th)) * th;
        },
        0.0, 42.0 / (1.0 + 2.0 * nu.real()), spec);
    cplx integral = main_part.checked("bessel_J_integral main") + near0.checked("bessel_J_integral origin");
    cplx prefac = 2.0 * std::exp(nu * std::log(0.5 * y)) / (gamma_c(nu + 0.5) * std::sqrt(PI));
    return prefac * integral;
}

namespace {

// y'' = -(1/y) J' - (1 - nu^2/y^2) J as a first-order complex system,
// Dormand-Prince 5(4) with adaptive steps
struct JState {
    cplx j, jp;
};

JState j_ode_rhs(const cplx& nu2, double x, const JState& s) {
    JState d;
    d.j = s.jp;
    d.jp = -s.jp / x - (1.0 - nu2 / (x * x)) * s.j;
    return d;
}

JState axpy(const JState& a, double c, const JState& b) { return {a.j + c * b.j, a.jp + c * b.jp}; }

JState j_ode_integrate(cplx nu, double x0, JState s, double x1) {
    cplx nu2 = nu * nu;
    double x = x0;
    double h = 0.05;
    const double rtol = 1e-12, atol = 1e-280;
    int guard = 0;
    while (x < x1 && ++guard < 2000000) {
        if (x + h > x1) h = x1 - x;
        JState k1 = j_ode_rhs(nu2, x, s);
        JState k2 = j_ode_rhs(nu2, x + h * 0.2, axpy(s, h * 0.2, k1));
        JState y3 = axpy(axpy(s, h * 3.0 / 40.0, k1), h * 9.0 / 40.0, k2);
        JState k3 = j_ode_rhs(nu2, x + h * 0.3, y3);
        JState y4 = axpy(axpy(axpy(s, h * 44.0 / 45.0, k1), -h * 56.0 / 15.0, k2), h * 32.0 / 9.0, k3);
        JState k4 = j_ode_rhs(nu2, x + h * 0.8, y4);
        JState y5 = axpy(axpy(axpy(axpy(s, h * 19372.0 / 6561.0, k1), -h * 25360.0 / 2187.0, k2),
                              h * 64448.0 / 6561.0, k3),
                         -h * 212.0 / 729.0, k4);
        JState k5 = j_ode_rhs(nu2, x + h * 8.0 / 9.0, y5);
        JState y6 = axpy(axpy(axpy(axpy(axpy(s, h * 9017.0 / 3168.0, k1), -h * 355.0 / 33.0, k2),
                                   h * 46732.0 / 5247.0, k3),
                              h * 49.0 / 176.0, k4),
                         -h * 5103.0 / 18656.0, k5);
        JState k6 = j_ode_rhs(nu2, x + h, y6);
        JState y7 = axpy(axpy(axpy(axpy(axpy(s, h * 35.0 / 384.0, k1), h * 500.0 / 1113.0, k3),
                                   h * 125.0 / 192.0, k4),
                              -h * 2187.0 / 6784.0, k5),
                         h * 11.0 / 84.0, k6);
        JState k7 = j_ode_rhs(nu2, x + h, y7);
        // 4th-order comparison
        JState z = axpy(axpy(axpy(axpy(axpy(axpy(s, h * 5179.0 / 57600.0, k1), h * 7571.0 / 16695.0, k3),
                                       h * 393.0 / 640.0, k4),
                                  -h * 92097.0 / 339200.0, k5),
                             h * 187.0 / 2100.0, k6),
                        h / 40.0, k7);
        double sc = atol + rtol * std::max(std::abs(y7.j), std::abs(s.j));
        double err = std::max(std::abs(y7.j - z.j), std::abs(y7.jp - z.jp)) / sc;
        if (err <= 1.0) {
            x += h;
            s = y7;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::min(4.0, std::max(0.2, fac));
        h = std::min(h, 0.5);
    }
    return s;
}

}  // namespace

cplx bessel_J(cplx nu, double y) {
    if (y <= 0.0) throw std::domain_error("bessel_J: y must be positive");
    if (y <= 18.0) return bessel_J_series(nu, y);
    if (nu.imag() == 0.0 && nu.real() >= 0.0 && y <= 1e4)
        return cplx(std::cyl_bessel_j(nu.real(), y), 0.0);
    // anchor with the series and continue in the argument
    double x0 = 12.0;
    JState s;
    s.j = bessel_J_series(nu, x0);
    s.jp = 0.5 * (bessel_J_series(nu - 1.0, x0) - bessel_J_series(nu + 1.0, x0));
    s = j_ode_integrate(nu, x0, s, y);
    return s.j;
}

cplx bessel_J_imag_order(double mu, double y) {
    cplx nu(0.0, mu);
    if (y <= 18.0) return bessel_J_series(nu, y);
    double x0 = 12.0;
    JState s;
    s.j = bessel_J_series(nu, x0);
    s.jp = 0.5 * (bessel_J_series(nu - 1.0, x0) - bessel_J_series(nu + 1.0, x0));
    s = j_ode_integrate(nu, x0, s, y);
    return s.j;
}

}  // namespace hlab
