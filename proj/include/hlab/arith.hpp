#pragma once

// Exact modular arithmetic and the complete exponential sums
// (Kloosterman, quadratic Gauss, Salie) used everywhere else.
// All sums are evaluated exactly over the stated residue ranges;
// complex output is double precision.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hlab {

using i64 = std::int64_t;
using i128 = __int128;
using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;

// e(x) = exp(2 pi i x)
inline cplx e_of(double x) {
    double frac = x - static_cast<double>(static_cast<long long>(x));
    double a = TWO_PI * frac;
    return {std::cos(a), std::sin(a)};
}

// e(num/den) with exact reduction of the rational argument first
cplx e_frac(i64 num, i64 den);

// nonnegative residue of a mod m, m > 0
inline i64 mod_norm(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mod_pow(i64 a, i64 e, i64 m);

// b with a*b == 1 mod m, 0 <= b < m.  Throws std::domain_error if gcd(a,m) > 1.
i64 mod_inverse(i64 a, i64 m);

// Kronecker symbol (a|n), full extended convention (total function).
int kronecker(i64 a, i64 n);

bool is_prime(i64 n);

// -d is a fundamental discriminant (d > 0 here means discriminant -d... no:
// fundamental discriminant test for a signed discriminant value).
bool is_fundamental_discriminant(i64 disc);

int divisor_count(i64 n);

// epsilon_p = 1 if p = 1 mod 4, i if p = 3 mod 4
cplx gauss_sum_unit(i64 p);

// S(m,n;c) = sum_{x mod c, (x,c)=1} e((mx + n xbar)/c).  Real-valued.
double kloosterman(i64 m, i64 n, i64 c);

// S(r,1;c) for every residue r mod c, one shared pass over the units.
std::vector<double> kloosterman_table(i64 c);

// Salie sum: sum_{y mod l, (y,l)=1} (y|l) e((my + n ybar)/l), l odd.
cplx salie(i64 m, i64 n, i64 l);

// sum_{x mod p} (x|p) e(mx/p) for odd prime p
cplx quadratic_gauss(i64 p, i64 m);

}  // namespace hlab
