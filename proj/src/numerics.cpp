#include "glnmom/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#if defined(__SIZEOF_FLOAT128__) && !defined(GLNMOM_NO_FLOAT128)
#include <quadmath.h>
#endif

namespace glnmom {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

#if defined(__SIZEOF_FLOAT128__) && !defined(GLNMOM_NO_FLOAT128)
inline osc_real o_sin(osc_real x) { return sinq(x); }
inline osc_real o_fabs(osc_real x) { return fabsq(x); }
const osc_real kOscPi = M_PIq;
constexpr double kOscEps = 1.93e-34;
#else
inline osc_real o_sin(osc_real x) { return sinl(x); }
inline osc_real o_fabs(osc_real x) { return fabsl(x); }
const osc_real kOscPi = 3.141592653589793238462643383279502884L;
constexpr double kOscEps = 1.1e-19;
#endif

// gamma(s,x)/Gamma(s) by the power series; valid for x < s+1.
double gamma_p_series(double s, double x) {
    double ap = s;
    double sum = 1.0 / s;
    double del = sum;
    for (int n = 0; n < 100000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Lentz continued fraction for the upper tail; returns h such that
// Gamma(s,x) = exp(-x + s*ln x) * h. Valid for x >= s+1.
double gamma_q_cf(double s, double x) {
    const double fpmin = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return h;
}

void check_gamma_args(double s, double x) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("incomplete gamma: s must be positive and finite");
    }
    if (std::isnan(x) || x < 0.0) {
        throw std::domain_error("incomplete gamma: x must be >= 0");
    }
}

struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

struct OscKahanSum {
    osc_real s = 0;
    osc_real c = 0;
    void add(osc_real v) {
        osc_real y = v - c;
        osc_real t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Shared level-doubling trapezoid driver for the tanh-sinh / exp-sinh
// transforms. node(t, x_out, w_out) fills the abscissa and weight.
template <class NodeFn>
QuadratureResult de_levels(const std::function<double(double)>& f,
                           const NodeFn& node, double t_max, double tol) {
    constexpr int kMaxLevel = 12;
    QuadratureResult res;
    KahanSum acc;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double h = 1.0;

    auto sample = [&](double t) {
        double xs[2];
        double ws[2];
        int m = node(t, xs, ws);
        for (int i = 0; i < m; ++i) {
            ++res.evaluations;
            double fx = f(xs[i]);
            double contrib = ws[i] * fx;
            if (std::isfinite(contrib)) acc.add(contrib);
        }
    };

    for (int level = 0; level <= kMaxLevel; ++level) {
        if (level == 0) {
            for (double t = 0.0; t <= t_max; t += h) sample(t);
        } else {
            h *= 0.5;
            for (double t = h; t <= t_max; t += 2.0 * h) sample(t);
        }
        double cur = h * acc.s;
        if (level >= 2) {
            double err = std::fabs(cur - prev);
            res.value = cur;
            res.abs_error_estimate = err;
            if (err <= tol) {
                res.converged = true;
                return res;
            }
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

// 32-point Gauss-Legendre nodes/weights on [-1,1] in osc_real, built once
// by Newton iteration on the Legendre recurrence.
struct GaussLegendre32 {
    std::array<osc_real, 32> x{};
    std::array<osc_real, 32> w{};
    GaussLegendre32() {
        const int n = 32;
        for (int i = 0; i < n; ++i) {
            osc_real z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            osc_real pp = 0;
            for (int it = 0; it < 60; ++it) {
                osc_real p1 = 1, p2 = 0;
                for (int j = 0; j < n; ++j) {
                    osc_real p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
                }
                pp = n * (z * p1 - p2) / (z * z - 1);
                osc_real dz = p1 / pp;
                z -= dz;
                if (o_fabs(dz) < 1e-35) break;
            }
            x[i] = z;
            w[i] = 2 / ((1 - z * z) * pp * pp);
        }
    }
};

const GaussLegendre32& gl32() {
    static const GaussLegendre32 table;
    return table;
}

osc_real gl32_segment(const std::function<osc_real(osc_real)>& envelope,
                      osc_real a, osc_real b, long* evals) {
    const auto& g = gl32();
    osc_real mid = (a + b) / 2;
    osc_real half = (b - a) / 2;
    OscKahanSum s;
    for (int i = 0; i < 32; ++i) {
        osc_real t = mid + half * g.x[i];
        s.add(g.w[i] * envelope(t) * o_sin(t));
    }
    *evals += 32;
    return half * s.s;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("log_gamma: x must be positive and finite");
    }
    return std::lgamma(x);
}

double reg_inc_gamma_lower(double s, double x) {
    check_gamma_args(s, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < s + 1.0) return gamma_p_series(s, x);
    double q = std::exp(-x + s * std::log(x) - std::lgamma(s)) * gamma_q_cf(s, x);
    return 1.0 - q;
}

double reg_inc_gamma_upper(double s, double x) {
    check_gamma_args(s, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return std::exp(-x + s * std::log(x) - std::lgamma(s)) * gamma_q_cf(s, x);
}

double upper_inc_gamma(double s, double x) {
    check_gamma_args(s, x);
    if (x == 0.0) return std::tgamma(s);
    if (x < s + 1.0) {
        return std::exp(std::lgamma(s)) * (1.0 - gamma_p_series(s, x));
    }
    return std::exp(-x + s * std::log(x)) * gamma_q_cf(s, x);
}

double inv_reg_inc_gamma_lower(double s, double q) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("inv_reg_inc_gamma_lower: s must be positive");
    }
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("inv_reg_inc_gamma_lower: q must lie in (0,1)");
    }
    double lo = 0.0;
    double hi = s + 1.0;
    while (reg_inc_gamma_lower(s, hi) < q) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) break;
    }
    for (int it = 0; it < 2000; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (reg_inc_gamma_lower(s, mid) < q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_adaptive: tol must be > 0");
    if (std::isnan(a) || std::isnan(b) || std::isinf(a)) {
        throw std::domain_error("integrate_adaptive: bad interval");
    }
    if (a == b) return {0.0, 0.0, 1, true};

    if (std::isinf(b)) {
        // exp-sinh: x = a + exp((pi/2) sinh t)
        auto node = [a](double t, double* xs, double* ws) {
            double w = (M_PI / 2.0) * std::sinh(t);
            double g = std::exp(w);
            double dw = (M_PI / 2.0) * std::cosh(t);
            xs[0] = a + g;
            ws[0] = dw * g;
            if (t == 0.0) return 1;
            double gm = 1.0 / g;  // exp(-w)
            xs[1] = a + gm;
            ws[1] = dw * gm;
            return 2;
        };
        return de_levels(f, node, 4.8, tol);
    }

    // tanh-sinh on [a, b]
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    auto node = [a, b, c, d](double t, double* xs, double* ws) {
        double w = (M_PI / 2.0) * std::sinh(t);
        double ch = std::cosh(w);
        double dudt = (M_PI / 2.0) * std::cosh(t) / (ch * ch);
        if (t == 0.0) {
            xs[0] = c;
            ws[0] = dudt;
            return 1;
        }
        // 1 - tanh(w) evaluated without cancellation
        double om = 2.0 / (std::exp(2.0 * w) + 1.0);
        xs[0] = b - d * om;
        ws[0] = dudt;
        xs[1] = a + d * om;
        ws[1] = dudt;
        return 2;
    };
    QuadratureResult res = de_levels(f, node, 3.8, tol);
    res.value *= d;
    res.abs_error_estimate *= d;
    return res;
}

QuadratureResult integrate_oscillatory(
    const std::function<osc_real(osc_real)>& envelope, long n_max,
    double tol) {
    if (!(tol > 0.0)) throw std::domain_error("integrate_oscillatory: tol must be > 0");
    if (n_max < 4) n_max = 4;

    QuadratureResult res;
    std::vector<osc_real> terms;
    terms.reserve(64);
    double quad_err = 0.0;
    osc_real max_abs = 0;
    osc_real prev_abs = 0;
    int decreasing_run = 0;
    int zero_run = 0;
    bool tail_reached = false;

    for (long n = 0; n < n_max; ++n) {
        osc_real t0 = n * kOscPi;
        osc_real t1 = (n + 1) * kOscPi;
        osc_real tm = (t0 + t1) / 2;
        osc_real whole = gl32_segment(envelope, t0, t1, &res.evaluations);
        osc_real halves = gl32_segment(envelope, t0, tm, &res.evaluations) +
                          gl32_segment(envelope, tm, t1, &res.evaluations);
        quad_err += static_cast<double>(o_fabs(whole - halves));
        terms.push_back(halves);

        osc_real a = o_fabs(halves);
        if (a > max_abs) max_abs = a;
        if (n > 0) decreasing_run = (a < prev_abs) ? decreasing_run + 1 : 0;
        zero_run = (a == 0) ? zero_run + 1 : 0;
        prev_abs = a;

        if ((decreasing_run >= 3 &&
             static_cast<double>(a) <=
                 std::max(static_cast<double>(max_abs) * 1e-36, 1e-320)) ||
            (zero_run >= 3 && n >= 4)) {
            tail_reached = true;
            break;
        }
    }

    // The alternating interval sums decay at ratio ~e^{-pi} once past the
    // envelope peak and are collected until they underflow relative to that
    // peak, so a compensated direct sum is exact to working precision.
    // (Series-acceleration transforms were tried here and actually limit
    // the accuracy: their fixed-ratio remainder shrinks slower than the
    // raw interval sums do.)
    OscKahanSum acc;
    for (osc_real v : terms) acc.add(v);
    osc_real total = acc.s;
    res.value = static_cast<double>(total);
    res.abs_error_estimate =
        quad_err + static_cast<double>(max_abs) * kOscEps *
                       static_cast<double>(terms.size() + 1);
    res.converged = tail_reached && res.abs_error_estimate <= tol;
    if (res.evaluations == 0) res.evaluations = 1;
    return res;
}

}  // namespace glnmom
