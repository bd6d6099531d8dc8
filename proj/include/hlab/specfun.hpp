#pragma once

// Complex log-gamma, K-Bessel of complex (in particular imaginary) order,
// and J-Bessel of complex order by three cross-checkable routes:
// ascending series, the sin^{2nu} integral representation, and ODE
// continuation in the argument.

#include <complex>

#include "hlab/quadrature.hpp"

namespace hlab {

// principal branch; throws std::domain_error at the poles
cplx log_gamma(cplx s);
cplx gamma_c(cplx s);

// K_nu(y) = int_0^inf exp(-y cosh u) cosh(nu u) du, y > 0.
// Underflow for large y is reported through *underflowed when given.
cplx bessel_K(cplx nu, double y, bool* underflowed = nullptr);

// K_{it}(y), real for real t
double bessel_K_it(double t, double y, bool* underflowed = nullptr);

// J_nu(y), Re(nu) > -1/2 for the quadrature route; series route needs no
// order restriction and takes over for small y.
cplx bessel_J(cplx nu, double y);

// ascending series (all orders except negative integers; moderate y)
cplx bessel_J_series(cplx nu, double y);

// the sin^{2nu} integral representation, Re(nu) > -1/2
cplx bessel_J_integral(cplx nu, double y);

// J_{i mu}(y) for real mu via series + ODE continuation; usable out to
// y of a few hundred
cplx bessel_J_imag_order(double mu, double y);

}  // namespace hlab
