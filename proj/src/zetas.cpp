#include "hlab/zetas.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hlab/specfun.hpp"

namespace hlab {

// B_2 .. B_16
static const double kBernoulli[8] = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                     5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

cplx hurwitz_zeta(cplx s, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0) throw std::domain_error("hurwitz_zeta: alpha must be in (0,1]");
    if (s == cplx(1.0, 0.0)) throw std::domain_error("hurwitz_zeta: pole at s=1");
    int N = static_cast<int>(16 + 1.8 * std::abs(s.imag()));
    cplx acc = 0.0;
    for (int n = 0; n < N; ++n) acc += std::pow(cplx(n + alpha, 0.0), -s);
    double Na = N + alpha;
    cplx NaPow = std::pow(cplx(Na, 0.0), -s);  // (N+alpha)^{-s}
    acc += NaPow * Na / (s - 1.0);
    acc += 0.5 * NaPow;
    // Euler-Maclaurin corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (N+a)^{-s-2k+1}
    cplx rising = s;           // s ... (s+2k-2), updated per k
    cplx power = NaPow / Na;   // (N+alpha)^{-s-2k+1}
    double fact = 2.0;         // (2k)!
    for (int k = 1; k <= 8; ++k) {
        acc += kBernoulli[k - 1] / fact * rising * power;
        // advance to k+1
        rising *= (s + cplx(2.0 * k - 1.0, 0.0)) * (s + cplx(2.0 * k, 0.0));
        power /= Na * Na;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return acc;
}

cplx zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

// digamma for real x > 0: recurrence into the asymptotic region, then
// psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
static double digamma(double x) {
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    double series = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (int k = 1; k <= 8; ++k) {
        series -= kBernoulli[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    return acc + series;
}

cplx dirichlet_L(cplx s, i64 d) {
    if (!is_fundamental_discriminant(d)) throw std::domain_error("dirichlet_L: d must be fundamental");
    if (d == 1) return zeta(s);
    i64 q = d < 0 ? -d : d;
    if (s == cplx(1.0, 0.0)) {
        // the Hurwitz poles cancel against sum chi(a) = 0; take the limit
        // through the digamma expansion zeta(s, a) = 1/(s-1) - psi(a) + O(s-1)
        double acc = 0.0;
        for (i64 a = 1; a <= q; ++a) {
            int chi = kronecker(d, a);
            if (chi == 0) continue;
            acc -= chi * digamma(static_cast<double>(a) / static_cast<double>(q));
        }
        return cplx(acc / static_cast<double>(q), 0.0);
    }
    cplx acc = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        int chi = kronecker(d, a);
        if (chi == 0) continue;
        acc += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
    }
    return acc * std::pow(cplx(static_cast<double>(q), 0.0), -s);
}

namespace {

// shared smallest-prime-factor sieve for the L(1) series oracle
std::vector<int32_t> g_spf;
std::mutex g_spf_mutex;

void ensure_spf(size_t n) {
    if (g_spf.size() >= n + 1) return;
    size_t cap = std::max(n + 1, g_spf.size() * 2);
    g_spf.assign(cap, 0);
    for (size_t i = 2; i < cap; ++i) {
        if (g_spf[i] == 0)
            for (size_t j = i; j < cap; j += i)
                if (g_spf[j] == 0) g_spf[j] = static_cast<int32_t>(i);
    }
}

}  // namespace

double dirichlet_L1_series(i64 d, double eps) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::domain_error("dirichlet_L1_series: d must be a negative fundamental discriminant");
    double q = static_cast<double>(-d);
    // |tail past N| <= 2 sqrt(q) ln q / N by Polya-Vinogradov and Abel summation
    double lnq = std::log(std::max(3.0, q));
    i64 N = static_cast<i64>(2.0 * std::sqrt(q) * lnq / (0.5 * eps)) + 16;
    std::lock_guard<std::mutex> lk(g_spf_mutex);
    ensure_spf(static_cast<size_t>(N));
    // chi at primes once, then multiplicatively over spf factorizations
    std::vector<int8_t> chi(static_cast<size_t>(N) + 1, 0);
    chi[1] = 1;
    double acc = 1.0;
    for (i64 n = 2; n <= N; ++n) {
        i64 p = g_spf[static_cast<size_t>(n)];
        i64 m = n / p;
        int8_t cp = (n == p) ? static_cast<int8_t>(kronecker(d, p)) : chi[static_cast<size_t>(p)];
        chi[static_cast<size_t>(n)] = static_cast<int8_t>(cp * chi[static_cast<size_t>(m)]);
        acc += static_cast<double>(chi[static_cast<size_t>(n)]) / static_cast<double>(n);
    }
    return acc;
}

double class_number_formula(i64 D, double eps_h) {
    double w = D > 4 ? 2.0 : (D == 4 ? 4.0 : 6.0);
    double eps_L = eps_h * 2.0 * PI / (w * std::sqrt(static_cast<double>(D)));
    double L1 = dirichlet_L1_series(-D, eps_L);
    return w * std::sqrt(static_cast<double>(D)) * L1 / (2.0 * PI);
}

cplx xi_completed(cplx s) {
    return std::pow(cplx(PI, 0.0), -0.5 * s) * gamma_c(0.5 * s) * zeta(s);
}

double riemann_siegel_theta(double t) {
    cplx lg = log_gamma(cplx(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(PI);
}

double hardy_z(double t) {
    cplx rot = std::exp(cplx(0.0, riemann_siegel_theta(t)));
    cplx v = rot * zeta_critical(t);
    return v.real();
}

}  // namespace hlab
