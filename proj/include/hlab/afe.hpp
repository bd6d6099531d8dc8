#pragma once

// One-piece approximate functional equation: the universal kernel
//   V(x) = (1/2 pi i) int Gamma(2d(s+A+1))/Gamma(2d(A+1)) x^{-s} ds/s
// and the smoothed central-value sum built on it.

#include <vector>

#include "hlab/spline.hpp"
#include "hlab/quadrature.hpp"

namespace hlab {

// single evaluation by contour quadrature (left of 0 for x < 1, right for x >= 1)
double afe_kernel(double x, int d, int A);

// kernel with a spline table over log x, for bulk sums
class AfeKernelTable {
  public:
    AfeKernelTable(int d, int A);
    double operator()(double x) const;
    // smallest x with |V| below tol for all larger arguments (from the table)
    double cutoff(double tol) const;
    int d() const { return d_; }
    int A() const { return A_; }

  private:
    int d_, A_;
    CubicSpline spline_;  // in t = ln x
    double x_lo_, x_hi_;
};

// L(f, 1/2) ~= sum_n lambda(n) n^{-1/2} V(n/X); lambda is 1-indexed via
// lambda[n-1].  Throws std::length_error when the list is too short for the
// kernel tail to drop below `tail_tol`.
cplx afe_value(const std::vector<cplx>& lambda, int d, double Q, double X, int A = 8,
               double tail_tol = 1e-10);

cplx afe_value(const std::vector<double>& lambda, int d, double Q, double X, int A = 8,
               double tail_tol = 1e-10);

}  // namespace hlab
