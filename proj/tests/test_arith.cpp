#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hlab/arith.hpp"

using namespace hlab;

// Independent brute-force oracles kept free of the library's internal shortcuts:
// every residue is enumerated and inverses found by scanning.
namespace oracle {

static i64 inv_scan(i64 a, i64 m) {
    a = mod_norm(a, m);
    for (i64 b = 0; b < m; ++b)
        if (mod_norm(a * b, m) == 1 % m) return b;
    return -1;
}

static cplx kloosterman(i64 m, i64 n, i64 c) {
    cplx s = 0.0;
    for (i64 x = 0; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 xb = inv_scan(x, c);
        s += e_frac(m * x + n * xb, c);
    }
    if (c == 1) s = 1.0;
    return s;
}

static cplx salie(i64 m, i64 n, i64 l) {
    cplx s = l == 1 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    for (i64 y = 1; y < l; ++y) {
        if (std::gcd(y, l) != 1) continue;
        s += static_cast<double>(kronecker(y, l)) * e_frac(m * y + n * inv_scan(y, l), l);
    }
    return s;
}

}  // namespace oracle

TEST_CASE("kronecker basic values") {
    CHECK(kronecker(-7, 1) == 1);
    CHECK(kronecker(-7, 7) == 0);
    // (-4|3): x^2 = -4 = 2 mod 3 is insoluble (squares mod 3 are 0,1)
    bool soluble = false;
    for (i64 x = 0; x < 3; ++x)
        if (mod_norm(x * x + 4, 3) == 0) soluble = true;
    CHECK_FALSE(soluble);
    CHECK(kronecker(-4, 3) == -1);
}

TEST_CASE("kronecker is completely multiplicative in n") {
    for (i64 D : {-3, -4, -7, -8, -15, -20, -23, 5, 12}) {
        for (i64 m = 1; m <= 40; ++m)
            for (i64 n = 1; n <= 40; ++n)
                CHECK(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
    }
}

TEST_CASE("kronecker has period |D| for fundamental D") {
    for (i64 D : {-3, -4, -7, -8, -11, -15, -20, -23, -24}) {
        for (i64 n = 1; n <= 3 * (-D); ++n)
            CHECK(kronecker(D, n) == kronecker(D, n + (-D)));
    }
}

TEST_CASE("kronecker against Euler criterion at odd primes") {
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (i64 a = 1; a < p; ++a) {
            i64 eu = mod_pow(a, (p - 1) / 2, p);
            int expect = eu == 1 ? 1 : -1;
            CHECK(kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(2, 3) == 2);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(6, 9), std::domain_error);
    for (i64 m = 2; m <= 60; ++m)
        for (i64 a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) CHECK(mod_inverse(a, m) == oracle::inv_scan(a, m));
}

TEST_CASE("kloosterman small values") {
    CHECK(kloosterman(1, 1, 1) == doctest::Approx(1.0));
    CHECK(kloosterman(1, 1, 2) == doctest::Approx(1.0));
    // S(1,1;3) = e(2/3) + e(1/3) = -1 by direct enumeration
    CHECK(kloosterman(1, 1, 3) == doctest::Approx(-1.0));
}

TEST_CASE("kloosterman equals enumeration, is real, weil bound, symmetry") {
    for (i64 c = 1; c <= 120; ++c) {
        for (i64 m : {0L, 1L, 2L, 5L, 11L}) {
            for (i64 n : {1L, 3L, 7L}) {
                cplx full = oracle::kloosterman(m, n, c);
                CHECK(std::abs(full.imag()) < 1e-9);
                double s = kloosterman(m, n, c);
                CHECK(s == doctest::Approx(full.real()).epsilon(0).scale(1).epsilon(1e-12));
                CHECK(std::abs(s - full.real()) < 1e-9);
                double weil = divisor_count(c) * std::sqrt(static_cast<double>(c)) *
                              std::sqrt(static_cast<double>(std::gcd(std::gcd(m, n), c)));
                CHECK(std::abs(s) <= weil + 1e-9);
                CHECK(std::abs(kloosterman(n, m, c) - s) < 1e-9);
            }
        }
    }
}

TEST_CASE("kloosterman spot checks out to c = 500") {
    for (i64 c : {211, 360, 499, 500}) {
        for (i64 m : {1L, 17L}) {
            cplx full = oracle::kloosterman(m, 1, c);
            CHECK(std::abs(kloosterman(m, 1, c) - full.real()) < 1e-8);
            double weil = divisor_count(c) * std::sqrt(static_cast<double>(c)) *
                          std::sqrt(static_cast<double>(std::gcd(std::gcd(m, 1L), c)));
            CHECK(std::abs(kloosterman(m, 1, c)) <= weil + 1e-8);
        }
    }
}

TEST_CASE("kloosterman_table matches pointwise sums") {
    for (i64 c : {1, 2, 12, 35, 97}) {
        auto tab = kloosterman_table(c);
        REQUIRE(tab.size() == static_cast<size_t>(c));
        for (i64 r = 0; r < c; ++r)
            CHECK(tab[static_cast<size_t>(r)] == doctest::Approx(kloosterman(r, 1, c)).epsilon(1e-12));
    }
}

TEST_CASE("salie values and bound") {
    CHECK(salie(1, 1, 1).real() == doctest::Approx(1.0));
    // S_chi(1,1;3) = e(2/3) - e(1/3) = -i sqrt(3)
    cplx s3 = salie(1, 1, 3);
    CHECK(std::abs(s3.real()) < 1e-12);
    CHECK(s3.imag() == doctest::Approx(-std::sqrt(3.0)));
    // S_chi(0,1;5) reduces to the quadratic Gauss sum: eps_5 sqrt(5) = sqrt(5)
    cplx s5 = salie(0, 1, 5);
    cplx g5 = quadratic_gauss(5, 1);
    CHECK(std::abs(s5 - g5) < 1e-12);
    CHECK(s5.real() == doctest::Approx(std::sqrt(5.0)));

    CHECK_THROWS_AS(salie(1, 1, 4), std::domain_error);

    for (i64 l = 1; l <= 301; l += 2) {
        for (i64 n : {1L, 2L, 25L, 50L}) {
            cplx s = salie(n, n, l);
            CHECK(std::abs(s - oracle::salie(n, n, l)) < 1e-9);
            double bound = divisor_count(l) * std::sqrt(static_cast<double>(l)) *
                           std::sqrt(static_cast<double>(std::gcd(n, l)));
            CHECK(std::abs(s) <= bound + 1e-9);
        }
    }
    for (i64 l : {401, 499}) {
        for (i64 n : {1L, 50L}) {
            double bound = divisor_count(l) * std::sqrt(static_cast<double>(l)) *
                           std::sqrt(static_cast<double>(std::gcd(n, l)));
            CHECK(std::abs(salie(n, n, l)) <= bound + 1e-9);
        }
    }
}

TEST_CASE("quadratic gauss sums") {
    cplx g3 = quadratic_gauss(3, 1);
    CHECK(std::abs(g3 - cplx{0.0, std::sqrt(3.0)}) < 1e-12);
    CHECK(std::abs(quadratic_gauss(5, 1) - cplx{std::sqrt(5.0), 0.0}) < 1e-12);
    CHECK(std::abs(quadratic_gauss(3, 3)) < 1e-12);

    // |g|^2 = p for (m,p) = 1, and closed form eps_p (m|p) sqrt(p)
    for (i64 p = 3; p <= 199; p += 2) {
        if (!is_prime(p)) continue;
        for (i64 m : {1L, 2L, 6L}) {
            cplx g = quadratic_gauss(p, m);
            if (m % p == 0) {
                CHECK(std::abs(g) < 1e-10);
                continue;
            }
            CHECK(std::norm(g) == doctest::Approx(static_cast<double>(p)).epsilon(1e-10));
            cplx closed = gauss_sum_unit(p) * static_cast<double>(kronecker(m, p)) *
                          std::sqrt(static_cast<double>(p));
            CHECK(std::abs(g - closed) < 1e-9);
        }
    }
}

TEST_CASE("gauss sum unit") {
    CHECK(gauss_sum_unit(5) == cplx{1.0, 0.0});
    CHECK(gauss_sum_unit(7) == cplx{0.0, 1.0});
    for (i64 p : {3, 5, 13, 23}) {
        cplx e = gauss_sum_unit(p);
        cplx e4 = e * e * e * e;
        CHECK(std::abs(e4 - cplx{1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("e_of and e_frac") {
    CHECK(std::abs(e_of(0.25) - cplx{0.0, 1.0}) < 1e-15);
    for (double x : {0.0, 0.1, 0.77, 3.2, -1.3}) {
        CHECK(std::abs(e_of(x)) == doctest::Approx(1.0));
        CHECK(std::abs(e_of(x + 1.0) - e_of(x)) < 1e-12);
    }
    CHECK(std::abs(e_frac(1, 3) - e_of(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(e_frac(-2, 6) - e_frac(2, 3)) < 1e-15);
}

TEST_CASE("fundamental discriminant recognition") {
    for (i64 d : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -31, -47}) CHECK(is_fundamental_discriminant(d));
    for (i64 d : {-1, -5, -9, -12, -16, -18, -25, -27, -28}) CHECK_FALSE(is_fundamental_discriminant(d));
}
