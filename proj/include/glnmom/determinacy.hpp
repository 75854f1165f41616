#ifndef GLNMOM_DETERMINACY_HPP
#define GLNMOM_DETERMINACY_HPP

#include <optional>
#include <string>
#include <utility>

#include "glnmom/distributions.hpp"
#include "glnmom/numerics.hpp"

namespace glnmom {

struct KreinResult {
    double value = 0.0;
    double lower_cutoff = 1.0;
    double upper_cutoff = 0.0;  // in x-space
    double tail_bound = 0.0;    // certified bound on mass beyond upper_cutoff
    bool converged = false;
    long evaluations = 0;
};

enum class KreinMethod {
    log_substitution,  // u = ln x, finite interval up to the certified cutoff
    direct             // x-space quadrature over [a, inf)
};

/// Krein integral of the GLN density: int_a^inf -ln f(x^2) / (1+x^2) dx.
/// The tail beyond the reported cutoff is bounded in closed form via
/// incomplete-gamma identities, so finiteness is certified, not eyeballed.
/// upper_cutoff_override (x-space, > a) forces a specific cutoff.
KreinResult krein_integral(const GlnParams& p, double a, double tol,
                           KreinMethod method = KreinMethod::log_substitution,
                           double upper_cutoff_override = 0.0);

enum class DeterminacyKind {
    no_moments,
    partial_moments,
    indeterminate_all_moments_finite,
    determinate_compact_support
};

struct DeterminacyVerdict {
    DeterminacyKind kind;
    // set only at r == 1: the open interval of existing moment orders
    std::optional<std::pair<double, double>> moment_range;
    bool mgf_exists = false;  // false for every finite r
    std::optional<KreinResult> krein;
    /// true when the analytic verdict carries a converged numeric witness
    bool witnessed() const { return krein && krein->converged; }
};

const char* to_string(DeterminacyKind kind);

/// Analytic classification per the shape parameter; for 1 < r < infinity a
/// Krein result is attached as computational witness. A failed witness
/// never flips the verdict.
DeterminacyVerdict classify(const GlnParams& p);

/// The r -> infinity limit law has compact support, hence determinate.
DeterminacyVerdict classify_limit(const PrizeCompetitionParams& p);

/// Stable JSON shape: kind, mgf_exists, moment_range, krein block.
std::string verdict_to_json(const DeterminacyVerdict& v, int indent = 2);

}  // namespace glnmom

#endif
