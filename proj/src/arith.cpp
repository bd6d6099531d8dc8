#include "hlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hlab {

cplx e_frac(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("e_frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    num = mod_norm(num, den);
    i64 g = std::gcd(num, den);
    num /= g; den /= g;
    double a = TWO_PI * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(a), std::sin(a)};
}

i64 mod_pow(i64 a, i64 e, i64 m) {
    a = mod_norm(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = static_cast<i64>(static_cast<i128>(r) * a % m);
        a = static_cast<i64>(static_cast<i128>(a) * a % m);
        e >>= 1;
    }
    return r;
}

i64 mod_inverse(i64 a, i64 m) {
    if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
    i64 r0 = m, r1 = mod_norm(a, m);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1; r0 = r1; r1 = r2;
        i64 t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return mod_norm(t0, m);
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // strip 2s from n using (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    if (v & 1) {
        i64 am8 = mod_norm(a, 8);
        if (am8 == 3 || am8 == 5) sign = -sign;
    }
    a = mod_norm(a, n);
    // Jacobi symbol (a|n) for odd n > 0
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 nm8 = n & 7;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit range
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<i64>(static_cast<i128>(x) * x % n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

static bool is_squarefree(i64 n) {
    if (n < 1) return false;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

bool is_fundamental_discriminant(i64 disc) {
    if (disc == 1) return true;
    i64 m = mod_norm(disc, 4);
    if (m == 1) return is_squarefree(disc < 0 ? -disc : disc);
    if (m == 0) {
        i64 q = disc / 4;
        i64 qm = mod_norm(q, 4);
        return (qm == 2 || qm == 3) && is_squarefree(q < 0 ? -q : q);
    }
    return false;
}

int divisor_count(i64 n) {
    if (n < 0) n = -n;
    if (n == 0) return 0;
    int cnt = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            cnt *= e + 1;
        }
    }
    if (n > 1) cnt *= 2;
    return cnt;
}

cplx gauss_sum_unit(i64 p) {
    if (p % 4 == 1) return {1.0, 0.0};
    return {0.0, 1.0};
}

static std::vector<i64> unit_inverses(i64 c) {
    std::vector<i64> inv(static_cast<size_t>(c), -1);
    for (i64 x = 0; x < c; ++x)
        if (std::gcd(x, c) == 1) inv[static_cast<size_t>(x)] = mod_inverse(x, c);
    if (c == 1) inv[0] = 0;
    return inv;
}

double kloosterman(i64 m, i64 n, i64 c) {
    if (c < 1) throw std::domain_error("kloosterman: c must be >= 1");
    if (c == 1) return 1.0;
    m = mod_norm(m, c);
    n = mod_norm(n, c);
    long double acc = 0.0L;
    for (i64 x = 1; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 xb = mod_inverse(x, c);
        i64 arg = mod_norm(m * x + n * xb, c);
        acc += std::cos(TWO_PI * static_cast<long double>(arg) / static_cast<long double>(c));
    }
    return static_cast<double>(acc);
}

std::vector<double> kloosterman_table(i64 c) {
    if (c < 1) throw std::domain_error("kloosterman_table: c must be >= 1");
    if (c == 1) return {1.0};
    std::vector<long double> cost(static_cast<size_t>(c));
    for (i64 k = 0; k < c; ++k)
        cost[static_cast<size_t>(k)] =
            std::cos(TWO_PI * static_cast<long double>(k) / static_cast<long double>(c));
    std::vector<long double> acc(static_cast<size_t>(c), 0.0L);
    for (i64 x = 1; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 xb = mod_inverse(x, c);
        // arg(r) = r*x + xb walks by x as r increments
        i64 arg = xb;
        for (i64 r = 0; r < c; ++r) {
            acc[static_cast<size_t>(r)] += cost[static_cast<size_t>(arg)];
            arg += x;
            if (arg >= c) arg -= c;
        }
    }
    std::vector<double> out(static_cast<size_t>(c));
    for (i64 r = 0; r < c; ++r) out[static_cast<size_t>(r)] = static_cast<double>(acc[static_cast<size_t>(r)]);
    return out;
}

cplx salie(i64 m, i64 n, i64 l) {
    if (l < 1 || (l & 1) == 0) throw std::domain_error("salie: modulus must be odd and positive");
    if (l == 1) return {1.0, 0.0};
    m = mod_norm(m, l);
    n = mod_norm(n, l);
    long double re = 0.0L, im = 0.0L;
    for (i64 y = 1; y < l; ++y) {
        if (std::gcd(y, l) != 1) continue;
        int chi = kronecker(y, l);
        i64 yb = mod_inverse(y, l);
        i64 arg = mod_norm(m * y + n * yb, l);
        long double a = TWO_PI * static_cast<long double>(arg) / static_cast<long double>(l);
        re += chi * std::cos(a);
        im += chi * std::sin(a);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

cplx quadratic_gauss(i64 p, i64 m) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("quadratic_gauss: p must be an odd prime");
    m = mod_norm(m, p);
    long double re = 0.0L, im = 0.0L;
    for (i64 x = 0; x < p; ++x) {
        int chi = kronecker(x, p);
        if (chi == 0) continue;
        long double a = TWO_PI * static_cast<long double>(mod_norm(m * x, p)) / static_cast<long double>(p);
        re += chi * std::cos(a);
        im += chi * std::sin(a);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace hlab
