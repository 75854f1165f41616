#include "glnmom/stieltjes.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "glnmom/moments.hpp"
#include "glnmom/numerics.hpp"
#include "glnmom/osc_math.hpp"
#include "json.hpp"

namespace glnmom {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_r_gt_1(const GlnParams& p, const char* who) {
    if (!(p.r > 1.0)) {
        throw std::domain_error(std::string(who) + ": requires r > 1");
    }
}

// Envelope exponent in t-space (x = t^4 + 1):
//   g(t) = |ln(t^4+1) - mu|^r / (r sigma^r) + ln(t^4+1) - t
double envelope_exponent(const GlnParams& p, double t) {
    double lx = std::log1p(t * t * t * t);
    double dev = std::fabs(lx - p.mu);
    double powterm =
        dev == 0.0 ? 0.0 : std::exp(p.r * std::log(dev / p.sigma)) / p.r;
    return powterm + lx - t;
}

// ln|h| in t-space
double log_abs_h_t(const GlnParams& p, double t) {
    double s = std::fabs(std::sin(t));
    if (s == 0.0) return kNegInf;
    return std::log(s) + envelope_exponent(p, t);
}

// golden-section maximization of f on [a, b]
double golden_max(const std::function<double(double)>& f, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, b); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

double binom(int n, int k) {
    return std::exp(log_gamma(n + 1.0) - log_gamma(k + 1.0) -
                    log_gamma(n - k + 1.0));
}

}  // namespace

LogSigned h_log(const GlnParams& p, double x) {
    require_r_gt_1(p, "h_log");
    if (!std::isfinite(x)) throw std::domain_error("h_log: x must be finite");
    if (x <= 1.0) return {kNegInf, 0};
    double t = std::pow(x - 1.0, 0.25);
    double s = std::sin(t);
    if (s == 0.0) return {kNegInf, 0};
    double lx = std::log(x);
    double dev = std::fabs(lx - p.mu);
    double powterm =
        dev == 0.0 ? 0.0 : std::exp(p.r * std::log(dev / p.sigma)) / p.r;
    return {std::log(std::fabs(s)) + powterm + lx - t, s > 0.0 ? 1 : -1};
}

double h_value(const GlnParams& p, double x) {
    LogSigned ls = h_log(p, x);
    if (ls.sign == 0) return 0.0;
    return ls.sign * std::exp(ls.log_abs);
}

Perturbation sup_abs_h(const GlnParams& p) {
    require_r_gt_1(p, "sup_abs_h");
    auto fobj = [&](double t) { return log_abs_h_t(p, t); };

    constexpr long kMaxIntervals = 500000;
    constexpr int kCoarse = 32;
    double best_log = kNegInf;
    double best_t = 0.0;
    double prev_mid_g = kNegInf;
    int dec_run = 0;
    double scan_t_end = 0.0;
    bool done = false;

    for (long n = 0; n < kMaxIntervals; ++n) {
        double t0 = n * M_PI;
        double t1 = (n + 1) * M_PI;
        double step = (t1 - t0) / (kCoarse + 1);

        int jbest = 1;
        double fbest = kNegInf;
        for (int j = 1; j <= kCoarse; ++j) {
            double f = fobj(t0 + j * step);
            if (f > fbest) {
                fbest = f;
                jbest = j;
            }
        }
        double lo = t0 + (jbest - 1) * step;
        double hi = t0 + (jbest + 1) * step;
        double tm = golden_max(fobj, lo, hi);
        double fm = fobj(tm);
        if (fm > best_log) {
            best_log = fm;
            best_t = tm;
        }

        double mid_g = envelope_exponent(p, 0.5 * (t0 + t1));
        dec_run = (mid_g < prev_mid_g) ? dec_run + 1 : 0;
        prev_mid_g = mid_g;
        // the envelope has turned over and sits far below the running max;
        // everything beyond contributes |h| < e^{-50} H
        if (dec_run >= 5 && envelope_exponent(p, t1) < best_log - 55.0) {
            scan_t_end = t1;
            done = true;
            break;
        }
    }
    if (!done) {
        throw std::runtime_error(
            "sup_abs_h: envelope decay point not found within scan budget");
    }

    double t4 = best_t * best_t * best_t * best_t;
    return {p, best_log, t4 + 1.0, scan_t_end};
}

double perturbation_value(const Perturbation& pert, double x) {
    LogSigned ls = h_log(pert.params, x);
    if (ls.sign == 0) return 0.0;
    return ls.sign * std::exp(ls.log_abs - pert.log_sup);
}

StieltjesMember::StieltjesMember(Perturbation pert_, double eps_)
    : pert(std::move(pert_)), eps(eps_) {
    if (!(std::fabs(eps) <= 1.0)) {
        throw std::domain_error("StieltjesMember: |eps| must be <= 1");
    }
}

double member_pdf(const StieltjesMember& m, double x) {
    double base = gln_pdf(m.pert.params, x);
    if (x <= 1.0 || base == 0.0) return base;
    return base * (1.0 + m.eps * perturbation_value(m.pert, x));
}

double kernel_moment_integral(int n) {
    if (n < 0) throw std::domain_error("kernel_moment_integral: n must be >= 0");
    // Gamma(n+1) sin((n+1) pi/4) / 2^{(n+1)/2}. With m = n+1, the sine is
    // 0, +-1 or +-sqrt(2)/2 depending on m mod 8; in the sqrt(2)/2 cases m
    // is odd and the half-integer power of two contributes the matching
    // sqrt(2), so the ratio is always +-2^{-e} with integer e and the
    // whole value is an exact dyadic multiple of n! where that fits.
    int m = n + 1;
    static const int kSign[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    int sign = kSign[m % 8];
    if (sign == 0) return 0.0;
    int e = (m % 2 == 1) ? (m + 1) / 2 : m / 2;
    if (m <= 170) {
        double fact = 1.0;  // (m-1)!, exact in double through m = 19
        for (int i = 2; i < m; ++i) fact *= i;
        return sign * std::ldexp(fact, -e);
    }
    return sign * std::exp(log_gamma(static_cast<double>(m)) -
                           e * std::log(2.0));
}

EquivalenceReport verify_moment_equivalence(const GlnParams& p, double eps,
                                            int k_max, double tol) {
    require_r_gt_1(p, "verify_moment_equivalence");
    if (!(std::fabs(eps) <= 1.0)) {
        throw std::domain_error("verify_moment_equivalence: |eps| must be <= 1");
    }
    if (k_max < 0) {
        throw std::domain_error("verify_moment_equivalence: k_max must be >= 0");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("verify_moment_equivalence: tol must be > 0");
    }

    Perturbation pert = sup_abs_h(p);
    // E_{f_eps}[X^k] - E_f[X^k] = eps * 4 C_r / H * int (t^4+1)^k t^3 sin t e^{-t} dt
    const double scale_log =
        std::log(4.0) + p.log_norm_const() - pert.log_sup;

    EquivalenceReport rep;
    rep.mu = p.mu;
    rep.sigma = p.sigma;
    rep.r = p.r;
    rep.eps = eps;
    rep.tol = tol;
    rep.log_sup = pert.log_sup;
    rep.all_pass = true;

    for (int k = 0; k <= k_max; ++k) {
        MomentCertificate cert;
        cert.k = k;

        // analytic route: every binomial term hits an exponent 3 (mod 4)
        cert.analytic_zero = true;
        for (int j = 0; j <= k; ++j) {
            double term = binom(k, j) * 4.0 * kernel_moment_integral(4 * (k - j) + 3);
            if (term != 0.0) cert.analytic_zero = false;
        }

        cert.moment = moment_quadrature(p, static_cast<double>(k));

        // numeric route on the same integrand
        osc_real sl = scale_log;
        osc_real kk = k;
        auto env = [sl, kk](osc_real t) {
            osc_real t4 = t * t * t * t;
            return osc_exp(kk * osc_log1p(t4) + 3 * osc_log(t) - t + sl);
        };
        double osc_tol = std::max(1e-300, 0.1 * tol * cert.moment);
        QuadratureResult q = integrate_oscillatory(env, 4000, osc_tol);
        cert.numeric_residual = std::fabs(q.value);
        cert.numeric_converged = q.converged;
        cert.rel_residual = cert.numeric_residual * std::fabs(eps) / cert.moment;
        cert.pass =
            cert.analytic_zero && cert.numeric_converged && cert.rel_residual <= tol;
        rep.all_pass = rep.all_pass && cert.pass;
        rep.per_k.push_back(cert);
    }
    return rep;
}

std::string report_to_json(const EquivalenceReport& rep, int indent) {
    nlohmann::json j;
    j["params"] = {{"mu", rep.mu}, {"sigma", rep.sigma}, {"r", rep.r}};
    j["eps"] = rep.eps;
    j["tol"] = rep.tol;
    j["log_sup"] = rep.log_sup;
    j["all_pass"] = rep.all_pass;
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : rep.per_k) {
        j["certificates"].push_back({{"k", c.k},
                                     {"analytic_zero", c.analytic_zero},
                                     {"numeric_residual", c.numeric_residual},
                                     {"numeric_converged", c.numeric_converged},
                                     {"moment", c.moment},
                                     {"rel_residual", c.rel_residual},
                                     {"pass", c.pass}});
    }
    return j.dump(indent);
}

}  // namespace glnmom
