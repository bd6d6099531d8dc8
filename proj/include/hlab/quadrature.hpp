#pragma once

// Adaptive Gauss-Legendre panels plus a double-exponential-style trapezoid
// for rapidly decaying integrands.  Failure is a reported state, never silent.

#include <complex>
#include <functional>

#include "hlab/arith.hpp"

namespace hlab {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 48;
    int panel_points = 16;  // per half of the error pair (16 vs 32)
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
    long evaluations = 0;

    // value if converged, throws std::runtime_error otherwise
    cplx checked(const char* what) const;
    double real_checked(const char* what) const;
};

using Integrand = std::function<cplx(double)>;

// adaptive bisection with a GL16/GL32 error pair on [a, b]
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// trapezoid with step halving on [a, b]; spectrally accurate for smooth
// integrands that decay at both ends (double-exponential use case)
QuadResult integrate_trapezoid(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// semi-infinite [0, inf) via x = t/(1-t) remap of the adaptive rule
QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec = {});

}  // namespace hlab
