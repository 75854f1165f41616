#ifndef GLNMOM_STIELTJES_HPP
#define GLNMOM_STIELTJES_HPP

#include <string>
#include <vector>

#include "glnmom/distributions.hpp"

namespace glnmom {

/// Sign plus log-magnitude; sign == 0 means an exact zero.
struct LogSigned {
    double log_abs;
    int sign;
};

/// The perturbation kernel
///   h(x) = sin((x-1)^{1/4}) * exp(|ln x - mu|^r/(r sigma^r) + ln x - (x-1)^{1/4})
/// for x > 1, and exactly 0 for x <= 1. Requires r > 1. The exponent
/// reaches thousands for moderate parameters, hence the log-domain form.
LogSigned h_log(const GlnParams& p, double x);

/// exp of h_log; overflows to +-inf where the magnitude exceeds double range.
double h_value(const GlnParams& p, double x);

struct Perturbation {
    GlnParams params;
    double log_sup;    // ln H, H = sup_x |h(x)|
    double argmax_x;   // where |h| attains its numerical sup
    double scan_t_end; // t = (x-1)^{1/4} beyond which |h| < e^{-50} H
};

/// Global sup of |h| by half-period scan in t-space (t = (x-1)^{1/4},
/// where the sine zeros are uniformly spaced) with golden-section
/// refinement of each bracketed interior maximum. The scan stops only
/// after the envelope exponent has decayed 50 log-units below the
/// running maximum, so the sup is global, not local.
Perturbation sup_abs_h(const GlnParams& p);

/// p(x) = h(x)/H, in [-1, 1] by construction (no post-hoc clamping).
double perturbation_value(const Perturbation& pert, double x);

struct StieltjesMember {
    Perturbation pert;
    double eps;
    StieltjesMember(Perturbation pert_, double eps_);  // requires |eps| <= 1
};

/// f_eps(x) = f(x) * (1 + eps * p(x)); equals the base density for x <= 1.
double member_pdf(const StieltjesMember& m, double x);

/// Closed form of int_0^inf t^n e^{-t} sin t dt
///   = Gamma(n+1) sin((n+1) pi/4) / 2^{(n+1)/2},
/// with the zeros at n = 3 (mod 4) exact by construction.
double kernel_moment_integral(int n);

struct MomentCertificate {
    int k;
    bool analytic_zero;        // every binomial term is exactly 0
    double numeric_residual;   // |moment perturbation per unit eps| (numeric route)
    bool numeric_converged;
    double moment;             // E[X^k] of the base density
    double rel_residual;       // numeric_residual * |eps| / moment
    bool pass;
};

struct EquivalenceReport {
    double mu, sigma, r;
    double eps;
    double tol;
    double log_sup;
    std::vector<MomentCertificate> per_k;
    bool all_pass;
};

/// Certifies E_{f_eps}[X^k] = E_f[X^k] for k = 0..k_max by two routes:
/// (i) binomial expansion into kernel_moment_integral terms, each an exact
/// zero; (ii) oscillatory quadrature of the actual moment perturbation
/// 4 C_r/H * int (t^4+1)^k t^3 sin t e^{-t} dt, required to be below
/// tol relative to the moment itself.
EquivalenceReport verify_moment_equivalence(const GlnParams& p, double eps,
                                            int k_max, double tol);

std::string report_to_json(const EquivalenceReport& rep, int indent = 2);

}  // namespace glnmom

#endif
