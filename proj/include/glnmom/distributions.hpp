#ifndef GLNMOM_DISTRIBUTIONS_HPP
#define GLNMOM_DISTRIBUTIONS_HPP

namespace glnmom {

// Parameterization used throughout (documented in the CLI help as well):
// the generalized error density is
//   f(y) = 1 / (2 r^{1/r} sigma Gamma(1+1/r)) * exp(-|y-mu|^r / (r sigma^r))
// and the generalized lognormal is the law of exp(Y) for Y with that
// density. r=2 is the normal / classical lognormal pair, r=1 the Laplace
// / log-Laplace pair. e^mu is a scale parameter of the lognormal form.

struct GlnParams {
    double mu;
    double sigma;
    double r;
    GlnParams(double mu_, double sigma_, double r_);
    /// ln of the normalizing constant 1/(2 r^{1/r} sigma Gamma(1+1/r)).
    double log_norm_const() const;
};

struct GedParams {
    double mu;
    double sigma;
    double r;
    GedParams(double mu_, double sigma_, double r_);
    double log_norm_const() const;
    GlnParams as_gln() const { return {mu, sigma, r}; }
};

/// Compact-support limit law: density 1/(2 sigma x) on [e^{mu-sigma}, e^{mu+sigma}].
struct PrizeCompetitionParams {
    double mu;
    double sigma;
    PrizeCompetitionParams(double mu_ = 0.0, double sigma_ = 1.0);
    double lower_support() const;
    double upper_support() const;
};

double ged_log_pdf(const GedParams& p, double y);
double ged_pdf(const GedParams& p, double y);
double ged_cdf(const GedParams& p, double y);
double ged_quantile(const GedParams& p, double q);

double gln_log_pdf(const GlnParams& p, double x);
double gln_pdf(const GlnParams& p, double x);
double gln_cdf(const GlnParams& p, double x);
double gln_quantile(const GlnParams& p, double q);

double prize_pdf(const PrizeCompetitionParams& p, double x);
double prize_moment(const PrizeCompetitionParams& p, double k);

/// X^power for X ~ GLN(mu, sigma, r) is GLN(power*mu, power*sigma, r).
GlnParams power_transform(const GlnParams& p, double power);

enum class TailOrder { heavier, lighter, same_order };

/// Tail ordering of p1 relative to p2: f1/f2 -> inf iff r1 < r2.
/// Equal r reports same_order; no refinement in sigma is attempted.
TailOrder tail_compare(const GlnParams& p1, const GlnParams& p2);

}  // namespace glnmom

#endif
