#pragma once

// Natural cubic spline on a strictly increasing grid.

#include <stdexcept>
#include <vector>

namespace hlab {

class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> xs, std::vector<double> ys) { build(std::move(xs), std::move(ys)); }

    void build(std::vector<double> xs, std::vector<double> ys) {
        if (xs.size() != ys.size() || xs.size() < 3) throw std::domain_error("CubicSpline: bad grid");
        x_ = std::move(xs);
        y_ = std::move(ys);
        size_t n = x_.size();
        std::vector<double> h(n - 1), alpha(n, 0.0), l(n), mu(n), z(n);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            if (h[i] <= 0.0) throw std::domain_error("CubicSpline: grid not increasing");
        }
        for (size_t i = 1; i + 1 < n; ++i)
            alpha[i] = 3.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
        l[0] = 1.0;
        mu[0] = z[0] = 0.0;
        for (size_t i = 1; i + 1 < n; ++i) {
            l[i] = 2.0 * (x_[i + 1] - x_[i - 1]) - h[i - 1] * mu[i - 1];
            mu[i] = h[i] / l[i];
            z[i] = (alpha[i] - h[i - 1] * z[i - 1]) / l[i];
        }
        c_.assign(n, 0.0);
        b_.assign(n - 1, 0.0);
        d_.assign(n - 1, 0.0);
        for (size_t j = n - 1; j-- > 0;) {
            c_[j] = z[j] - mu[j] * c_[j + 1];
            b_[j] = (y_[j + 1] - y_[j]) / h[j] - h[j] * (c_[j + 1] + 2.0 * c_[j]) / 3.0;
            d_[j] = (c_[j + 1] - c_[j]) / (3.0 * h[j]);
        }
    }

    bool ready() const { return !x_.empty(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

    double operator()(double x) const {
        if (x < x_.front() - 1e-12 || x > x_.back() + 1e-12)
            throw std::domain_error("CubicSpline: out of range");
        size_t lo = 0, hi = x_.size() - 1;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            if (x_[mid] <= x)
                lo = mid;
            else
                hi = mid;
        }
        double dx = x - x_[lo];
        return y_[lo] + dx * (b_[lo] + dx * (c_[lo] + dx * d_[lo]));
    }

  private:
    std::vector<double> x_, y_, b_, c_, d_;
};

}  // namespace hlab
