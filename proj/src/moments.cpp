#include "glnmom/moments.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "glnmom/numerics.hpp"

namespace glnmom {

namespace {

// |z|^r / (r sigma^r)
double phi(double z, double sigma, double r) {
    double a = std::fabs(z);
    if (a == 0.0) return 0.0;
    return std::exp(r * std::log(a / sigma)) / r;
}

QuadratureResult piece_or_throw(const std::function<double(double)>& f,
                                double a, double b) {
    QuadratureResult q = integrate_adaptive(f, a, b, 1e-12);
    if (!q.converged && q.abs_error_estimate > 1e-9 * std::max(1.0, std::fabs(q.value))) {
        throw std::runtime_error("moment_quadrature: quadrature did not converge");
    }
    return q;
}

}  // namespace

ExistenceVerdict moment_exists(const GlnParams& p, double k) {
    if (!std::isfinite(k)) throw std::domain_error("moment_exists: k must be finite");
    if (k == 0.0) return {true, ExistenceReason::finite};
    if (p.r < 1.0) return {false, ExistenceReason::r_below_one};
    if (p.r == 1.0) {
        if (std::fabs(k) < 1.0 / p.sigma) return {true, ExistenceReason::finite};
        return {false, ExistenceReason::r_equal_one_order_out_of_range};
    }
    return {true, ExistenceReason::finite};
}

SeriesResult moment_series(const GlnParams& p, int k) {
    if (!(p.r > 1.0)) {
        throw std::domain_error("moment_series: requires r > 1");
    }
    if (k < 0) throw std::domain_error("moment_series: requires k >= 0");
    if (k == 0) return {1.0, true, 1};

    const double lks = std::log(static_cast<double>(k) * p.sigma);
    const double lr = std::log(p.r);
    const double lg_inv_r = log_gamma(1.0 / p.r);
    const int budget = 200000;

    double sum = 0.0;
    int small_run = 0;
    int i = 0;
    for (; i < budget; ++i) {
        double two_i = 2.0 * i;
        double lt = two_i * lks - log_gamma(two_i + 1.0) + (two_i / p.r) * lr +
                    log_gamma((two_i + 1.0) / p.r) - lg_inv_r;
        double term = std::exp(lt);
        sum += term;
        // the series has only even-order terms; require three consecutive
        // negligible terms before declaring convergence
        small_run = (term < 1e-15 * sum) ? small_run + 1 : 0;
        if (small_run >= 3) {
            return {std::exp(k * p.mu) * sum, true, i + 1};
        }
    }
    return {std::exp(k * p.mu) * sum, false, i};
}

double moment_quadrature(const GlnParams& p, double k) {
    ExistenceVerdict v = moment_exists(p, k);
    if (!v.exists) {
        throw std::domain_error("moment_quadrature: moment does not exist for these parameters");
    }
    const double sigma = p.sigma;
    const double r = p.r;
    const double ka = std::fabs(k);
    const double ln_c = p.log_norm_const();

    if (ka == 0.0) {
        auto f = [&](double z) { return std::exp(-phi(z, sigma, r)); };
        QuadratureResult q = piece_or_throw(f, 0.0,
                                            std::numeric_limits<double>::infinity());
        return std::exp(ln_c + k * p.mu) * 2.0 * q.value;
    }

    // negative half-line, substituted to [0, inf): exp(-|k| u - phi(u))
    auto fneg = [&](double u) { return std::exp(-ka * u - phi(u, sigma, r)); };
    QuadratureResult qn =
        piece_or_throw(fneg, 0.0, std::numeric_limits<double>::infinity());

    double pos;
    double peak_log = 0.0;
    if (r > 1.0) {
        // positive-side mode of k z - phi(z); the peak value is factored
        // out so the quadrature works on an O(1) integrand
        double zstar = std::exp((std::log(ka) + r * std::log(sigma)) / (r - 1.0));
        peak_log = ka * zstar - phi(zstar, sigma, r);
        auto fpos = [&](double z) {
            return std::exp(ka * z - phi(z, sigma, r) - peak_log);
        };
        QuadratureResult q1 = piece_or_throw(fpos, 0.0, zstar);
        QuadratureResult q2 =
            piece_or_throw(fpos, zstar, std::numeric_limits<double>::infinity());
        pos = q1.value + q2.value;
    } else {
        // r == 1 with |k| < 1/sigma: plain decaying exponential
        auto fpos = [&](double z) { return std::exp((ka - 1.0 / sigma) * z); };
        QuadratureResult q =
            piece_or_throw(fpos, 0.0, std::numeric_limits<double>::infinity());
        pos = q.value;
    }

    double base = ln_c + k * p.mu;
    return qn.value * std::exp(base) + pos * std::exp(base + peak_log);
}

double z_moment(double r, double k) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("z_moment: r must be positive");
    }
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw std::domain_error("z_moment: k must be a nonnegative real");
    }
    return std::exp((k / r) * std::log(r) + log_gamma(1.0 + (k + 1.0) / r) -
                    log_gamma(1.0 + 1.0 / r));
}

}  // namespace glnmom
