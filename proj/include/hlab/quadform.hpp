#pragma once

// Positive definite integral binary quadratic forms a x^2 + b xy + c y^2
// of negative discriminant: reduction with SL2(Z) transformation tracking,
// Gauss composition, and representation counts.

#include <array>
#include <cstdint>
#include <string>

#include "hlab/arith.hpp"

namespace hlab {

// column-action convention: (f.M)(x,y) = f(m00 x + m01 y, m10 x + m11 y),
// so tau_{f.M} = M^{-1} tau_f as points of the upper half plane.
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;  // rows (a b; c d)
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 inverse() const { return {d, -b, -c, a}; }  // valid for det = 1
    i64 det() const { return a * d - b * c; }
};

struct QuadForm {
    i64 a = 1, b = 0, c = 0;

    i64 disc() const { return b * b - 4 * a * c; }
    i64 eval(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    bool is_reduced() const {
        if (!(std::abs(b) <= a && a <= c)) return false;
        if ((std::abs(b) == a || a == c) && b < 0) return false;
        return true;
    }
    bool operator==(const QuadForm& o) const = default;
    // lexicographic, for canonical ordering of reduced representatives
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    std::string str() const;
};

// f composed with gamma (right action, see Mat2 note above)
QuadForm apply(const QuadForm& f, const Mat2& g);

// Unique reduced representative.  If transform is non-null, receives M with
// reduce(f) = f.M (det M = 1).  Throws on disc >= 0 or a <= 0.
QuadForm reduce(const QuadForm& f, Mat2* transform = nullptr);

// Dirichlet composition of classes: returns the reduced representative.
// Throws on discriminant mismatch.
QuadForm compose(const QuadForm& f1, const QuadForm& f2);

QuadForm principal_form(i64 D);  // discriminant -D
QuadForm inverse_form(const QuadForm& f);

// equivalent form whose leading coefficient is coprime to m (m >= 1)
QuadForm coprime_rep(const QuadForm& f, i64 m);

// #{(x,y) : f(x,y) = n}, exhausting the finitely many candidates
i64 representation_count(const QuadForm& f, i64 n);

}  // namespace hlab
