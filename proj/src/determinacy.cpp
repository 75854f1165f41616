#include "glnmom/determinacy.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace glnmom {

namespace {

struct KreinIntegrand {
    double neg_ln_c;  // -ln C_r
    double mu;
    double inv_rsr;   // 1 / (r sigma^r)
    double r;

    // -ln f(x^2) as a function of u = ln x
    double log_term(double u) const {
        double dev = std::fabs(2.0 * u - mu);
        double powterm = dev == 0.0 ? 0.0 : std::exp(r * std::log(dev)) * inv_rsr;
        return neg_ln_c + 2.0 * u + powterm;
    }
};

// Closed-form bound on the integral of the integrand beyond x = e^U:
// for u >= U the numerator is <= c0 + 2u + c2 u^r and 1/(2 cosh u) <= e^{-u},
// so the tail is bounded by incomplete-gamma integrals of u^p e^{-u}.
double krein_tail_bound(const KreinIntegrand& g, double u_cut) {
    double c0, c2;
    double amu = std::fabs(g.mu);
    double mu_pow = amu == 0.0 ? 0.0 : std::exp(g.r * std::log(amu));
    if (g.r >= 1.0) {
        double split = std::exp((g.r - 1.0) * std::log(2.0));  // 2^{r-1}
        c0 = std::fabs(g.neg_ln_c) + split * mu_pow * g.inv_rsr;
        c2 = split * std::exp(g.r * std::log(2.0)) * g.inv_rsr;
    } else {
        c0 = std::fabs(g.neg_ln_c) + mu_pow * g.inv_rsr;
        c2 = std::exp(g.r * std::log(2.0)) * g.inv_rsr;
    }
    double e = std::exp(-u_cut);
    return c0 * e + 2.0 * (u_cut + 1.0) * e +
           c2 * upper_inc_gamma(g.r + 1.0, u_cut);
}

}  // namespace

KreinResult krein_integral(const GlnParams& p, double a, double tol,
                           KreinMethod method, double upper_cutoff_override) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("krein_integral: cutoff a must be > 0");
    }
    if (!(tol > 0.0)) throw std::domain_error("krein_integral: tol must be > 0");

    KreinIntegrand g{-p.log_norm_const(), p.mu, 1.0 / (p.r * std::pow(p.sigma, p.r)),
                     p.r};

    KreinResult res;
    res.lower_cutoff = a;

    // pick the u-space cutoff so the certified tail bound meets tol
    double u_lo = std::log(a);
    double u_cut;
    bool tail_ok = false;
    if (upper_cutoff_override > 0.0) {
        if (!(upper_cutoff_override > a)) {
            throw std::domain_error("krein_integral: override cutoff must exceed a");
        }
        u_cut = std::log(upper_cutoff_override);
        tail_ok = krein_tail_bound(g, u_cut) <= tol;
    } else {
        u_cut = std::max({u_lo + 1.0, std::fabs(p.mu) / 2.0 + 2.0, 8.0});
        for (int it = 0; it < 64; ++it) {
            if (krein_tail_bound(g, u_cut) <= 0.5 * tol) {
                tail_ok = true;
                break;
            }
            u_cut *= 1.5;
            if (u_cut > 1e7) break;
        }
    }
    res.upper_cutoff = std::exp(u_cut);
    res.tail_bound = krein_tail_bound(g, u_cut);

    QuadratureResult q;
    if (method == KreinMethod::log_substitution) {
        auto fu = [&](double u) { return g.log_term(u) / (2.0 * std::cosh(u)); };
        q = integrate_adaptive(fu, u_lo, u_cut, 1e-9);
        if (!q.converged) {
            q = integrate_adaptive(fu, u_lo, u_cut,
                                   std::max(1e-9, 1e-11 * std::fabs(q.value)));
        }
    } else {
        auto fx = [&](double x) { return g.log_term(std::log(x)) / (1.0 + x * x); };
        q = integrate_adaptive(fx, a, std::numeric_limits<double>::infinity(), 1e-9);
        if (!q.converged) {
            q = integrate_adaptive(fx, a, std::numeric_limits<double>::infinity(),
                                   std::max(1e-9, 1e-11 * std::fabs(q.value)));
        }
    }
    res.value = q.value;
    res.evaluations = q.evaluations;
    res.converged = q.converged && tail_ok;
    return res;
}

const char* to_string(DeterminacyKind kind) {
    switch (kind) {
        case DeterminacyKind::no_moments: return "no-moments";
        case DeterminacyKind::partial_moments: return "partial-moments";
        case DeterminacyKind::indeterminate_all_moments_finite:
            return "indeterminate-all-moments-finite";
        case DeterminacyKind::determinate_compact_support:
            return "determinate-compact-support";
    }
    return "?";
}

DeterminacyVerdict classify(const GlnParams& p) {
    DeterminacyVerdict v;
    v.mgf_exists = false;
    if (p.r < 1.0) {
        v.kind = DeterminacyKind::no_moments;
        return v;
    }
    if (p.r == 1.0) {
        v.kind = DeterminacyKind::partial_moments;
        v.moment_range = std::make_pair(-1.0 / p.sigma, 1.0 / p.sigma);
        return v;
    }
    v.kind = DeterminacyKind::indeterminate_all_moments_finite;
    // the theorem decides; the Krein value is attached as a witness and a
    // quadrature failure leaves the verdict intact but unwitnessed
    try {
        v.krein = krein_integral(p, 1.0, 1e-8);
    } catch (const std::exception&) {
        v.krein.reset();
    }
    return v;
}

DeterminacyVerdict classify_limit(const PrizeCompetitionParams&) {
    DeterminacyVerdict v;
    v.kind = DeterminacyKind::determinate_compact_support;
    v.mgf_exists = true;  // bounded support
    return v;
}

std::string verdict_to_json(const DeterminacyVerdict& v, int indent) {
    nlohmann::json j;
    j["kind"] = to_string(v.kind);
    j["mgf_exists"] = v.mgf_exists;
    if (v.moment_range) {
        j["moment_range"] = {{"lower", v.moment_range->first},
                             {"upper", v.moment_range->second}};
    } else {
        j["moment_range"] = nullptr;
    }
    if (v.krein) {
        j["krein"] = {{"value", v.krein->value},
                      {"lower_cutoff", v.krein->lower_cutoff},
                      {"upper_cutoff", v.krein->upper_cutoff},
                      {"tail_bound", v.krein->tail_bound},
                      {"converged", v.krein->converged}};
    } else {
        j["krein"] = nullptr;
    }
    j["witnessed"] = v.witnessed();
    return j.dump(indent);
}

}  // namespace glnmom
