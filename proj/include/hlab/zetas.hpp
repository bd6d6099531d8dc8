#pragma once

// Euler-Maclaurin evaluation of zeta, Hurwitz zeta and Dirichlet L-functions:
// the independent oracles against which the smoothed machinery is checked.

#include <complex>

#include "hlab/arith.hpp"

namespace hlab {

// Euler-Maclaurin with 8 correction terms; good through the strip
// -2 < Re s, |Im s| <= ~400 at 1e-10 accuracy (s != 1)
cplx zeta(cplx s);

inline cplx zeta_critical(double t) { return zeta(cplx(0.5, t)); }

// Hurwitz zeta, alpha in (0, 1]
cplx hurwitz_zeta(cplx s, double alpha);

// L(s, chi_d) for a fundamental discriminant d via the Hurwitz decomposition
cplx dirichlet_L(cplx s, i64 d);

// L(1, chi_d) for d < 0 fundamental by direct character series with a
// certified Polya-Vinogradov tail below eps
double dirichlet_L1_series(i64 d, double eps);

// h(-D) = w sqrt(D) L(1, chi_{-D}) / (2 pi), evaluated from the series oracle
double class_number_formula(i64 D, double eps_h);

// completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s)
cplx xi_completed(cplx s);

// Riemann-Siegel theta and Hardy Z, for locating zeros on the line
double riemann_siegel_theta(double t);
double hardy_z(double t);

}  // namespace hlab
