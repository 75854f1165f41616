#include "glnmom/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "glnmom/numerics.hpp"

namespace glnmom {

namespace {

void check_shape(double mu, double sigma, double r, const char* who) {
    if (!std::isfinite(mu) || !(sigma > 0.0) || !std::isfinite(sigma) ||
        !(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error(std::string(who) +
                                    ": need finite mu, sigma > 0, r > 0");
    }
}

double log_norm_const_impl(double sigma, double r) {
    return -(std::log(2.0) + std::log(r) / r + std::log(sigma) +
             log_gamma(1.0 + 1.0 / r));
}

// |y - mu|^r / (r sigma^r), in a form that only overflows when the
// density is truly zero in double precision.
double shape_exponent(double dev, double sigma, double r) {
    if (dev == 0.0) return 0.0;
    return std::exp(r * std::log(dev / sigma)) / r;
}

}  // namespace

GlnParams::GlnParams(double mu_, double sigma_, double r_)
    : mu(mu_), sigma(sigma_), r(r_) {
    check_shape(mu, sigma, r, "GlnParams");
}

double GlnParams::log_norm_const() const { return log_norm_const_impl(sigma, r); }

GedParams::GedParams(double mu_, double sigma_, double r_)
    : mu(mu_), sigma(sigma_), r(r_) {
    check_shape(mu, sigma, r, "GedParams");
}

double GedParams::log_norm_const() const { return log_norm_const_impl(sigma, r); }

PrizeCompetitionParams::PrizeCompetitionParams(double mu_, double sigma_)
    : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu) || !(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("PrizeCompetitionParams: need finite mu, sigma > 0");
    }
}

double PrizeCompetitionParams::lower_support() const { return std::exp(mu - sigma); }
double PrizeCompetitionParams::upper_support() const { return std::exp(mu + sigma); }

double ged_log_pdf(const GedParams& p, double y) {
    if (!std::isfinite(y)) throw std::domain_error("ged_log_pdf: y must be finite");
    return p.log_norm_const() - shape_exponent(std::fabs(y - p.mu), p.sigma, p.r);
}

double ged_pdf(const GedParams& p, double y) { return std::exp(ged_log_pdf(p, y)); }

double ged_cdf(const GedParams& p, double y) {
    if (!std::isfinite(y)) throw std::domain_error("ged_cdf: y must be finite");
    double dev = y - p.mu;
    if (dev == 0.0) return 0.5;
    double w = shape_exponent(std::fabs(dev), p.sigma, p.r);
    double half = std::isinf(w) ? 0.5 : 0.5 * reg_inc_gamma_lower(1.0 / p.r, w);
    return dev > 0.0 ? 0.5 + half : 0.5 - half;
}

double ged_quantile(const GedParams& p, double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("ged_quantile: q must lie in (0,1)");
    }
    double d = 2.0 * q - 1.0;
    if (d == 0.0) return p.mu;
    double w = inv_reg_inc_gamma_lower(1.0 / p.r, std::fabs(d));
    // |y - mu| = sigma (r w)^{1/r}, computed in the log domain
    double dev = p.sigma * std::exp((std::log(p.r) + std::log(w)) / p.r);
    return d > 0.0 ? p.mu + dev : p.mu - dev;
}

double gln_log_pdf(const GlnParams& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("gln_log_pdf: x must be positive and finite");
    }
    double lx = std::log(x);
    return p.log_norm_const() - shape_exponent(std::fabs(lx - p.mu), p.sigma, p.r) - lx;
}

double gln_pdf(const GlnParams& p, double x) { return std::exp(gln_log_pdf(p, x)); }

double gln_cdf(const GlnParams& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("gln_cdf: x must be positive and finite");
    }
    return ged_cdf({p.mu, p.sigma, p.r}, std::log(x));
}

double gln_quantile(const GlnParams& p, double q) {
    return std::exp(ged_quantile({p.mu, p.sigma, p.r}, q));
}

double prize_pdf(const PrizeCompetitionParams& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("prize_pdf: x must be positive and finite");
    }
    if (x < p.lower_support() || x > p.upper_support()) return 0.0;
    return 1.0 / (2.0 * p.sigma * x);
}

double prize_moment(const PrizeCompetitionParams& p, double k) {
    if (!std::isfinite(k)) throw std::domain_error("prize_moment: k must be finite");
    if (k == 0.0) return 1.0;
    return std::exp(k * p.mu) * std::sinh(k * p.sigma) / (k * p.sigma);
}

GlnParams power_transform(const GlnParams& p, double power) {
    if (!(power > 0.0) || !std::isfinite(power)) {
        throw std::domain_error("power_transform: power must be positive");
    }
    return {power * p.mu, power * p.sigma, p.r};
}

TailOrder tail_compare(const GlnParams& p1, const GlnParams& p2) {
    if (p1.r < p2.r) return TailOrder::heavier;
    if (p1.r > p2.r) return TailOrder::lighter;
    return TailOrder::same_order;
}

}  // namespace glnmom
