#pragma once

// Heegner points of level q and discriminant -D: the two Galois orbits,
// the class-group action, the Fricke involution, coset labels in
// P^1(F_q) = Gamma_0(q) \ Gamma_0(1), and the equidistribution statistic.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hlab/classgroup.hpp"

namespace hlab {

struct CosetLabel {
    // normalized projective point: (0:1) or (1:d), 0 <= d < q
    i64 c = 0, d = 1;
    bool operator==(const CosetLabel&) const = default;
    bool operator<(const CosetLabel& o) const { return std::pair(c, d) < std::pair(o.c, o.d); }
};

struct HeegnerPoint {
    QuadForm form;   // q | a and b == r (mod 2q)
    i64 q = 1;
    i64 D = 0;       // discriminant is -D
    i64 r = 0;       // root, normalized to [0, 2q)
    int class_index = -1;

    cplx tau() const {
        return {-static_cast<double>(form.b) / (2.0 * form.a),
                std::sqrt(static_cast<double>(D)) / (2.0 * form.a)};
    }
    // identity on Gamma_0(q)-classes is (class, root)
    bool same_point(const HeegnerPoint& o) const {
        return D == o.D && q == o.q && r == o.r && class_index == o.class_index;
    }
};

struct EquidistReport {
    i64 D = 0, q = 0, h = 0, r = 0;
    std::map<CosetLabel, i64> counts;  // every label of P^1(F_q) is present
    double discrepancy = 0.0;
};

// the two square roots of -D mod 4q as residues mod 2q; smallest positive first.
// Throws when q is inert or ramified, or -D is not an odd fundamental
// discriminant below -4.
std::array<i64, 2> heegner_roots(i64 D, i64 q);

// the Gamma_0(q)-canonical representative of (class, root)
HeegnerPoint heegner_point(const ClassGroup& G, int class_index, i64 q, i64 r);

// both orbits, h points each, indexed by class like G.forms()
std::pair<std::vector<HeegnerPoint>, std::vector<HeegnerPoint>> heegner_points(const ClassGroup& G, i64 q);

HeegnerPoint galois_act(const ClassGroup& G, int g_index, const HeegnerPoint& P);

HeegnerPoint fricke(const ClassGroup& G, const HeegnerPoint& P);

// reduction to the standard fundamental domain, integer arithmetic on the
// form; returns the label and, optionally, the reduced form (whose tau is the
// reduced point)
CosetLabel coset_label_form(const QuadForm& f, i64 q, QuadForm* reduced = nullptr);

inline CosetLabel coset_label(const HeegnerPoint& P, QuadForm* reduced = nullptr) {
    return coset_label_form(P.form, P.q, reduced);
}

// floating-point T/S reduction of an arbitrary point; independent of the
// integer route.  Throws std::runtime_error past the step bound.
CosetLabel coset_label_float(cplx tau, i64 q, cplx* reduced = nullptr);

std::vector<CosetLabel> all_labels(i64 q);

EquidistReport equidist_counts(const ClassGroup& G, i64 q, bool fricke_orbit = false);

// sum over one orbit of u evaluated at the F-reduced representative when the
// coset label matches
double smooth_weyl_sum(const ClassGroup& G, i64 q, const std::function<double(cplx)>& u,
                       const CosetLabel& label, bool fricke_orbit = false);

}  // namespace hlab
