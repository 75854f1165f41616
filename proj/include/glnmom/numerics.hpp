#ifndef GLNMOM_NUMERICS_HPP
#define GLNMOM_NUMERICS_HPP

#include <functional>

namespace glnmom {

// Working type for the oscillatory integration path. Interval sums there
// cancel almost perfectly, so the accumulation (and the envelope itself)
// must carry more than double precision.
#if defined(__SIZEOF_FLOAT128__) && !defined(GLNMOM_NO_FLOAT128)
using osc_real = __float128;
#else
using osc_real = long double;
#endif

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Regularized lower incomplete gamma P(s, x) = gamma(s,x)/Gamma(s).
/// Series for x < s+1, continued fraction otherwise.
double reg_inc_gamma_lower(double s, double x);

/// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x),
/// computed directly so it stays accurate in the far tail.
double reg_inc_gamma_upper(double s, double x);

/// Unregularized upper incomplete gamma Gamma(s, x).
double upper_inc_gamma(double s, double x);

/// x such that reg_inc_gamma_lower(s, x) == q, for q in (0, 1).
double inv_reg_inc_gamma_lower(double s, double q);

/// Tanh-sinh quadrature of f over [a, b]; b may be +infinity, in which
/// case an exp-sinh variable change is used. tol is an absolute target;
/// converged is set iff the internal error estimate reaches it.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol);

/// Integrates envelope(t) * sin(t) over [0, inf) interval-wise between
/// consecutive sine zeros n*pi, then sums the alternating interval
/// integrals, collected until they underflow relative to the peak. All
/// accumulation is compensated and carried out in osc_real.
/// Flags non-convergence if the interval magnitudes have not started
/// decreasing within n_max intervals.
QuadratureResult integrate_oscillatory(
    const std::function<osc_real(osc_real)>& envelope, long n_max,
    double tol);

}  // namespace glnmom

#endif
