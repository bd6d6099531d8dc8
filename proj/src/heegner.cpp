#include "hlab/heegner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hlab {

std::array<i64, 2> heegner_roots(i64 D, i64 q) {
    if (D <= 4 || D % 2 == 0 || !is_fundamental_discriminant(-D))
        throw std::domain_error("heegner_roots: need an odd fundamental discriminant below -4");
    if (!is_prime(q)) throw std::domain_error("heegner_roots: q must be prime");
    if (kronecker(-D, q) != 1)
        throw std::domain_error("heegner_roots: q must split in Q(sqrt(-D))");
    std::vector<i64> roots;
    for (i64 r = 1; r < 2 * q; r += 2)
        if (mod_norm(r * r + D, 4 * q) == 0) roots.push_back(r);
    if (roots.size() != 2) throw std::logic_error("heegner_roots: expected exactly two roots");
    return {roots[0], roots[1]};
}

namespace {

// complete the primitive column (x, y)^T to det-1 matrix (x u; y v)
Mat2 complete_column(i64 x, i64 y) {
    i64 r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 qq = r0 / r1;
        i64 r2 = r0 - qq * r1; r0 = r1; r1 = r2;
        i64 s2 = s0 - qq * s1; s0 = s1; s1 = s2;
        i64 t2 = t0 - qq * t1; t0 = t1; t1 = t2;
    }
    if (r0 == -1) { s0 = -s0; t0 = -t0; r0 = 1; }
    if (r0 != 1) throw std::domain_error("complete_column: column not primitive");
    // x*s0 + y*t0 = 1  ->  second column (-t0, s0)
    Mat2 M{x, -t0, y, s0};
    if (M.det() != 1) throw std::logic_error("complete_column: determinant is not 1");
    return M;
}

// minimize the value of f over primitive columns (x, q y)
QuadForm minimize_level_a(const QuadForm& f, i64 q) {
    // f(v) >= lam_min |v|^2 with lam_min >= det / trace
    double lam_min = static_cast<double>(-f.disc()) / (4.0 * static_cast<double>(f.a + f.c));
    i64 best_val = f.a;  // (1, 0) is always available
    i64 bx = 1, by = 0;
    double box = std::sqrt(static_cast<double>(best_val) / lam_min) + 1.0;
    i64 xmax = static_cast<i64>(box);
    i64 ymax = static_cast<i64>(box / static_cast<double>(q)) + 1;
    for (i64 y = -ymax; y <= ymax; ++y) {
        for (i64 x = -xmax; x <= xmax; ++x) {
            if (x == 0 && y == 0) continue;
            if (std::gcd(x, q * y) != 1) continue;
            i64 val = f.eval(x, q * y);
            if (val < best_val || (val == best_val && std::pair(std::abs(x), std::abs(y)) <
                                                          std::pair(std::abs(bx), std::abs(by)))) {
                best_val = val;
                bx = x;
                by = y;
            }
        }
    }
    Mat2 M = complete_column(bx, q * by);
    QuadForm g = apply(f, M);
    // T-normalization inside Gamma_0(q): b into (-a, a]
    i64 twoa = 2 * g.a;
    i64 shift = 0;
    while (g.b + twoa * shift > g.a) --shift;
    while (g.b + twoa * shift <= -g.a) ++shift;
    return apply(g, Mat2{1, shift, 0, 1});
}

}  // namespace

HeegnerPoint heegner_point(const ClassGroup& G, int class_index, i64 q, i64 r) {
    i64 D = G.D();
    r = mod_norm(r, 2 * q);
    const QuadForm& f = G.form(class_index);
    QuadForm g = coprime_rep(f, q);
    // slide b to -r mod 2q, then swap so the level divides the leading slot
    i64 delta = mod_norm((-r - g.b) / 2, q);
    i64 k = static_cast<i64>(static_cast<i128>(delta) * mod_inverse(mod_norm(g.a, q), q) % q);
    QuadForm shifted = apply(g, Mat2{1, k, 0, 1});
    QuadForm with_level{shifted.c, -shifted.b, shifted.a};
    if (mod_norm(with_level.a, q) != 0) throw std::logic_error("heegner_point: level slot not divisible by q");
    QuadForm minimized = minimize_level_a(with_level, q);
    if (mod_norm(minimized.b - r, 2 * q) != 0) throw std::logic_error("heegner_point: root drifted");
    HeegnerPoint P;
    P.form = minimized;
    P.q = q;
    P.D = D;
    P.r = r;
    P.class_index = class_index;
    return P;
}

std::pair<std::vector<HeegnerPoint>, std::vector<HeegnerPoint>> heegner_points(const ClassGroup& G, i64 q) {
    auto roots = heegner_roots(G.D(), q);
    std::pair<std::vector<HeegnerPoint>, std::vector<HeegnerPoint>> out;
    for (int idx = 0; idx < G.h(); ++idx) {
        out.first.push_back(heegner_point(G, idx, q, roots[0]));
        out.second.push_back(heegner_point(G, idx, q, roots[1]));
    }
    return out;
}

HeegnerPoint galois_act(const ClassGroup& G, int g_index, const HeegnerPoint& P) {
    if (P.D != G.D()) throw std::domain_error("galois_act: discriminant mismatch");
    int target = G.mul(g_index, P.class_index);
    return heegner_point(G, target, P.q, P.r);
}

HeegnerPoint fricke(const ClassGroup& G, const HeegnerPoint& P) {
    QuadForm w{P.form.c * P.q, -P.form.b, P.form.a / P.q};
    HeegnerPoint out;
    out.form = w;
    out.q = P.q;
    out.D = P.D;
    out.r = mod_norm(-P.r, 2 * P.q);
    out.class_index = G.index_of(w);
    return out;
}

CosetLabel normalize_label(i64 c, i64 d, i64 q) {
    c = mod_norm(c, q);
    d = mod_norm(d, q);
    if (c == 0 && d == 0) throw std::domain_error("normalize_label: zero vector");
    if (c == 0) return {0, 1};
    return {1, static_cast<i64>(static_cast<i128>(d) * mod_inverse(c, q) % q)};
}

CosetLabel coset_label_form(const QuadForm& f, i64 q, QuadForm* reduced) {
    Mat2 M;
    QuadForm red = reduce(f, &M);
    if (reduced) *reduced = red;
    // reducing matrix gamma = M^{-1} carries tau_f into F; bottom row (-M.c, M.a)
    return normalize_label(-M.c, M.a, q);
}

CosetLabel coset_label_float(cplx tau, i64 q, cplx* reduced) {
    if (tau.imag() <= 0.0) throw std::domain_error("coset_label_float: point must be in the upper half plane");
    Mat2 g;
    cplx z = tau;
    for (int step = 0; step < 100000; ++step) {
        double k = std::nearbyint(z.real());
        if (std::abs(k) > 0.0) {
            z -= k;
            i64 ki = static_cast<i64>(k);
            g = Mat2{1, -ki, 0, 1} * g;
        }
        if (std::norm(z) < 1.0 - 1e-14) {
            z = -1.0 / z;
            g = Mat2{0, -1, 1, 0} * g;
            continue;
        }
        // boundary conventions matching the integer route: Re in [-1/2, 1/2)
        // and Re <= 0 on the unit arc
        if (std::abs(z.real() - 0.5) < 1e-13) {
            z -= 1.0;
            g = Mat2{1, -1, 0, 1} * g;
        }
        if (std::abs(std::norm(z) - 1.0) < 1e-13 && z.real() > 1e-13) {
            z = -1.0 / z;
            g = Mat2{0, -1, 1, 0} * g;
        }
        if (reduced) *reduced = z;
        return normalize_label(g.c, g.d, q);
    }
    throw std::runtime_error("coset_label_float: reduction did not settle (ill-conditioned input)");
}

std::vector<CosetLabel> all_labels(i64 q) {
    std::vector<CosetLabel> out{{0, 1}};
    for (i64 d = 0; d < q; ++d) out.push_back({1, d});
    return out;
}

EquidistReport equidist_counts(const ClassGroup& G, i64 q, bool fricke_orbit) {
    auto roots = heegner_roots(G.D(), q);
    i64 r = fricke_orbit ? roots[1] : roots[0];
    EquidistReport rep;
    rep.D = G.D();
    rep.q = q;
    rep.h = G.h();
    rep.r = r;
    for (const auto& lab : all_labels(q)) rep.counts[lab] = 0;
    for (int idx = 0; idx < G.h(); ++idx) {
        HeegnerPoint P = heegner_point(G, idx, q, r);
        rep.counts[coset_label(P)] += 1;
    }
    double target = 1.0 / static_cast<double>(q + 1);
    for (const auto& [lab, n] : rep.counts) {
        double dev = std::abs(static_cast<double>(n) / static_cast<double>(rep.h) - target);
        rep.discrepancy = std::max(rep.discrepancy, dev);
    }
    return rep;
}

double smooth_weyl_sum(const ClassGroup& G, i64 q, const std::function<double(cplx)>& u,
                       const CosetLabel& label, bool fricke_orbit) {
    auto roots = heegner_roots(G.D(), q);
    i64 r = fricke_orbit ? roots[1] : roots[0];
    double acc = 0.0;
    for (int idx = 0; idx < G.h(); ++idx) {
        HeegnerPoint P = heegner_point(G, idx, q, r);
        QuadForm red;
        CosetLabel lab = coset_label(P, &red);
        if (!(lab == label)) continue;
        cplx tau_red{-static_cast<double>(red.b) / (2.0 * red.a),
                     std::sqrt(static_cast<double>(P.D)) / (2.0 * red.a)};
        acc += u(tau_red);
    }
    return acc;
}

}  // namespace hlab
