#include "hlab/quadform.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hlab {

std::string QuadForm::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

QuadForm apply(const QuadForm& f, const Mat2& g) {
    // f(g00 x + g01 y, g10 x + g11 y)
    i64 p = g.a, q = g.b, r = g.c, s = g.d;
    QuadForm out;
    out.a = f.eval(p, r);
    out.c = f.eval(q, s);
    out.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    return out;
}

QuadForm reduce(const QuadForm& f, Mat2* transform) {
    if (f.disc() >= 0) throw std::domain_error("reduce: form must have negative discriminant");
    if (f.a <= 0) throw std::domain_error("reduce: leading coefficient must be positive");
    QuadForm g = f;
    Mat2 M;
    for (int guard = 0; guard < 20000; ++guard) {
        // b-normalization: b into (-a, a]
        if (g.b > g.a || g.b <= -g.a) {
            i64 twoa = 2 * g.a;
            i64 k = -static_cast<i64>(std::floor((static_cast<double>(g.b) + g.a) / static_cast<double>(twoa)));
            // exact fix-up of the floating rounding
            while (g.b + twoa * k > g.a) --k;
            while (g.b + twoa * k <= -g.a) ++k;
            Mat2 T{1, k, 0, 1};
            g = apply(g, T);
            M = M * T;
        }
        if (g.a > g.c) {
            Mat2 S{0, -1, 1, 0};
            g = apply(g, S);
            M = M * S;
            continue;
        }
        break;
    }
    if ((g.b < 0) && (-g.b == g.a || g.a == g.c)) {
        if (-g.b == g.a) {
            Mat2 T{1, 1, 0, 1};
            g = apply(g, T);
            M = M * T;
        } else {
            Mat2 S{0, -1, 1, 0};
            g = apply(g, S);
            M = M * S;
        }
    }
    if (!g.is_reduced()) throw std::logic_error("reduce: failed to reach a reduced form");
    if (transform) *transform = M;
    return g;
}

QuadForm principal_form(i64 D) {
    if (mod_norm(-D, 4) == 1) return {1, 1, (D + 1) / 4};
    if (mod_norm(-D, 4) == 0) return {1, 0, D / 4};
    throw std::domain_error("principal_form: -D is not a discriminant");
}

QuadForm inverse_form(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

QuadForm coprime_rep(const QuadForm& f, i64 m) {
    if (m < 1) throw std::domain_error("coprime_rep: modulus must be positive");
    for (i64 radius = 1; radius <= 64; ++radius) {
        for (i64 x = -radius; x <= radius; ++x) {
            for (i64 y = -radius; y <= radius; ++y) {
                if (std::max(std::abs(x), std::abs(y)) != radius) continue;
                if (std::gcd(x, y) != 1) continue;
                i64 val = f.eval(x, y);
                if (val <= 0 || std::gcd(val, m) != 1) continue;
                // complete (x,y)^T to an SL2(Z) matrix as first column
                i64 r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    i64 q = r0 / r1;
                    i64 r2 = r0 - q * r1; r0 = r1; r1 = r2;
                    i64 s2 = s0 - q * s1; s0 = s1; s1 = s2;
                    i64 t2 = t0 - q * t1; t0 = t1; t1 = t2;
                }
                i64 s = s0, t = t0;
                if (r0 == -1) { s = -s0; t = -t0; }
                Mat2 M{x, -t, y, s};
                if (M.det() != 1) continue;
                return apply(f, M);
            }
        }
    }
    throw std::logic_error("coprime_rep: no representation found (form not primitive?)");
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    i64 disc = f1.disc();
    if (disc != f2.disc()) throw std::domain_error("compose: discriminant mismatch");
    if (disc >= 0) throw std::domain_error("compose: discriminant must be negative");
    QuadForm g2 = coprime_rep(f2, f1.a);
    i64 a1 = f1.a, a2 = g2.a;
    // united middle coefficient: B = b1 mod 2a1, B = b2 mod 2a2
    i64 t = mod_norm(mod_norm((g2.b - f1.b) / 2, a2), a2);
    t = static_cast<i64>(static_cast<i128>(t) * mod_inverse(mod_norm(a1, a2), a2) % a2);
    i64 A = a1 * a2;
    i64 B = mod_norm(f1.b + 2 * a1 * t, 2 * A);
    if (B > A) B -= 2 * A;
    i128 num = static_cast<i128>(B) * B - disc;
    i64 C = static_cast<i64>(num / (4 * static_cast<i128>(A)));
    return reduce({A, B, C});
}

i64 representation_count(const QuadForm& f, i64 n) {
    if (n < 1) throw std::domain_error("representation_count: n must be positive");
    i64 D = -f.disc();
    i64 count = 0;
    double ymax = std::sqrt(4.0 * f.a * n / static_cast<double>(D)) + 1.0;
    for (i64 y = -static_cast<i64>(ymax); y <= static_cast<i64>(ymax); ++y) {
        i64 dx = 4 * f.a * n - D * y * y;
        if (dx < 0) continue;
        i64 rt = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(dx))));
        while (rt > 0 && rt * rt > dx) --rt;
        while ((rt + 1) * (rt + 1) <= dx) ++rt;
        if (rt * rt != dx) continue;
        for (i64 sign : {1, -1}) {
            i64 numer = -f.b * y + sign * rt;
            if (mod_norm(numer, 2 * f.a) == 0) ++count;
            if (rt == 0) break;
        }
    }
    return count;
}

}  // namespace hlab
