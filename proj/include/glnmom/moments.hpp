#ifndef GLNMOM_MOMENTS_HPP
#define GLNMOM_MOMENTS_HPP

#include "glnmom/distributions.hpp"

namespace glnmom {

enum class ExistenceReason { r_below_one, r_equal_one_order_out_of_range, finite };

struct ExistenceVerdict {
    bool exists;
    ExistenceReason reason;
};

/// E[X^k] exists iff: r < 1 -> only k = 0; r = 1 -> |k| < 1/sigma;
/// r > 1 -> every k. Fractional and negative k allowed.
ExistenceVerdict moment_exists(const GlnParams& p, double k);

struct SeriesResult {
    double value = 0.0;
    bool converged = false;
    int terms = 0;
};

/// E[X^k] = e^{k mu}/Gamma(1/r) * sum_i (k sigma)^{2i}/(2i)! r^{2i/r} Gamma((2i+1)/r),
/// valid for r > 1, integer k >= 0. Terms are assembled in the log domain.
/// Non-convergence within the term budget is reported, never hidden.
SeriesResult moment_series(const GlnParams& p, int k);

/// E[X^k] = C * e^{k mu} * integral of exp(k z - |z|^r/(r sigma^r)) dz,
/// split at the positive-side mode. Throws std::domain_error for
/// nonexistent moments and std::runtime_error on quadrature failure.
double moment_quadrature(const GlnParams& p, double k);

/// Moments of the mixture factor Z ~ GG(r, r^{1/r}, 1+1/r):
/// E[Z^k] = (r^{1/r})^k Gamma(1+(k+1)/r) / Gamma(1+1/r).
double z_moment(double r, double k);

}  // namespace glnmom

#endif
