#include "hlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hlab {

cplx QuadResult::checked(const char* what) const {
    if (!converged) throw std::runtime_error(std::string("quadrature failed: ") + what);
    return value;
}

double QuadResult::real_checked(const char* what) const { return checked(what).real(); }

namespace {

struct GLRule {
    std::vector<double> x;  // positive nodes on (0,1)
    std::vector<double> w;
};

// Newton on Legendre P_n for the positive nodes
GLRule make_gl(int n) {
    GLRule r;
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x.push_back(x);
        r.w.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    return r;
}

const GLRule& gl16() {
    static const GLRule r = make_gl(16);
    return r;
}
const GLRule& gl32() {
    static const GLRule r = make_gl(32);
    return r;
}

cplx gl_panel(const Integrand& f, double a, double b, const GLRule& rule, long& evals) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
        acc += rule.w[i] * (f(mid + half * rule.x[i]) + f(mid - half * rule.x[i]));
        evals += 2;
    }
    return acc * half;
}

struct Panel {
    double a, b;
    cplx coarse;
    int depth;
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::vector<Panel> stack;
    cplx first = gl_panel(f, a, b, gl16(), out.evaluations);
    stack.push_back({a, b, first, 0});
    cplx total = 0.0;
    double err_total = 0.0;
    bool fail = false;
    double scale = std::abs(first);
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        cplx fine = gl_panel(f, p.a, p.b, gl32(), out.evaluations);
        double err = std::abs(fine - p.coarse);
        double local_tol = std::max(spec.abs_tol * (p.b - p.a) / (b - a),
                                    spec.rel_tol * std::max(scale, 1e-300) * (p.b - p.a) / (b - a));
        if (err <= local_tol || p.depth >= spec.max_depth) {
            if (err > local_tol) fail = true;
            total += fine;
            err_total += err;
            scale = std::max(scale, std::abs(total));
        } else {
            double mid = 0.5 * (p.a + p.b);
            cplx cl = gl_panel(f, p.a, mid, gl16(), out.evaluations);
            cplx cr = gl_panel(f, mid, p.b, gl16(), out.evaluations);
            stack.push_back({p.a, mid, cl, p.depth + 1});
            stack.push_back({mid, p.b, cr, p.depth + 1});
        }
    }
    out.value = total;
    out.error = err_total;
    out.converged =
        !fail && err_total <= 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) + 1e-300;
    return out;
}

QuadResult integrate_trapezoid(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    int n = 16;
    double h = (b - a) / n;
    cplx sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) sum += f(a + i * h);
    out.evaluations += n + 1;
    cplx prev = sum * h;
    for (int level = 0; level < 22; ++level) {
        cplx add = 0.0;
        for (int i = 0; i < n; ++i) add += f(a + (i + 0.5) * h);
        out.evaluations += n;
        sum += add;
        n *= 2;
        h *= 0.5;
        cplx cur = sum * h;
        double err = std::abs(cur - prev);
        if (level >= 2 && err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) {
            out.value = cur;
            out.error = err;
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    out.value = prev;
    out.error = std::abs(prev) * 1e-3;
    out.converged = false;
    return out;
}

QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec) {
    auto remapped = [&f](double t) {
        double om = 1.0 - t;
        double x = t / om;
        return f(x) / (om * om);
    };
    return integrate(remapped, 0.0, 1.0 - 1e-12, spec);
}

}  // namespace hlab
