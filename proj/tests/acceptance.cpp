// Acceptance suite: one deterministic pass/fail line per criterion.
// Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "glnmom/determinacy.hpp"
#include "glnmom/distributions.hpp"
#include "glnmom/moments.hpp"
#include "glnmom/numerics.hpp"
#include "glnmom/osc_math.hpp"
#include "glnmom/sampling.hpp"
#include "glnmom/stieltjes.hpp"
#include "stats_helpers.hpp"

using namespace glnmom;
using testutil::ks_critical_1pct;
using testutil::ks_statistic;
using testutil::ks_two_sample;
using testutil::ks_two_sample_critical_1pct;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %2d (%s): %s%s%s\n", idx, name,
                pass ? "PASS" : "FAIL", detail.empty() ? "" : " — ",
                detail.c_str());
    if (!pass) ++g_failures;
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

// 1. r=2 density matches the closed-form lognormal at 500 log-spaced points.
void criterion1() {
    GlnParams p{0.0, 1.0, 2.0};
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        double lx = -5.0 + 10.0 * i / 499.0;
        double x = std::exp(lx);
        double closed = std::exp(-lx * lx / 2.0) / (x * std::sqrt(2.0 * M_PI));
        worst = std::max(worst, std::fabs(gln_pdf(p, x) - closed) / closed);
    }
    std::ostringstream d;
    d << "max rel err " << worst;
    report(1, "lognormal reduction", worst <= 1e-12, d.str());
}

// 2. Series and quadrature moments: closed form at r=2, dual-route elsewhere.
void criterion2() {
    bool pass = true;
    std::ostringstream d;
    GlnParams classic{0.0, 1.0, 2.0};
    for (int k = 1; k <= 5; ++k) {
        double truth = std::exp(0.5 * k * k);
        SeriesResult s = moment_series(classic, k);
        double q = moment_quadrature(classic, k);
        if (!s.converged || !close_rel(s.value, truth, 1e-9) ||
            !close_rel(q, truth, 1e-9)) {
            pass = false;
            d << "r=2 k=" << k << " off; ";
        }
    }
    for (double r : {1.5, 3.0, 15.0}) {
        GlnParams p{0.0, 1.0, r};
        for (int k = 1; k <= 5; ++k) {
            SeriesResult s = moment_series(p, k);
            double q = moment_quadrature(p, k);
            if (!s.converged || !close_rel(s.value, q, 1e-8)) {
                pass = false;
                d << "r=" << r << " k=" << k << " disagree; ";
            }
        }
    }
    report(2, "moment oracle, series vs quadrature", pass, d.str());
}

// 3. Log-Laplace closed-form moments and the existence boundary.
void criterion3() {
    GlnParams p{0.0, 0.5, 1.0};
    bool pass = !moment_exists(p, 2.0).exists;
    std::ostringstream d;
    for (double k : {0.5, 1.0, 1.5, 1.9}) {
        double closed = 1.0 / (1.0 - k * k / 4.0);
        double v = moment_quadrature(p, k);
        if (!close_rel(v, closed, 1e-8)) {
            pass = false;
            d << "k=" << k << ": " << v << " vs " << closed << "; ";
        }
    }
    report(3, "log-Laplace partial moments", pass, d.str());
}

// 4. Dual-method logarithmic tail integral with certified tail bounds.
void criterion4() {
    bool pass = true;
    std::ostringstream d;
    for (double r : {1.1, 1.5, 2.0, 15.0}) {
        GlnParams p{0.0, 1.0, r};
        KreinResult a = krein_integral(p, 1.0, 1e-8,
                                       KreinMethod::log_substitution);
        KreinResult b = krein_integral(p, 1.0, 1e-8, KreinMethod::direct);
        bool ok = a.converged && b.converged &&
                  close_rel(a.value, b.value, 1e-6) &&
                  a.tail_bound < 1e-6 && b.tail_bound < 1e-6;
        if (!ok) {
            pass = false;
            d << "r=" << r << ": " << a.value << " vs " << b.value
              << " (tails " << a.tail_bound << ", " << b.tail_bound << "); ";
        }
    }
    report(4, "tail-integral finiteness witness", pass, d.str());
}

// 5. Classifier truth table over the named cases.
void criterion5() {
    bool pass = true;
    std::ostringstream d;
    auto expect = [&](DeterminacyKind got, DeterminacyKind want,
                      const char* name) {
        if (got != want) {
            pass = false;
            d << name << " misclassified; ";
        }
    };
    expect(classify(GlnParams{0.0, 1.0, 0.5}).kind,
           DeterminacyKind::no_moments, "r=0.5");
    DeterminacyVerdict v = classify(GlnParams{0.0, 0.5, 1.0});
    expect(v.kind, DeterminacyKind::partial_moments, "r=1");
    if (!v.moment_range || std::fabs(v.moment_range->first + 2.0) > 1e-12 ||
        std::fabs(v.moment_range->second - 2.0) > 1e-12) {
        pass = false;
        d << "r=1 range wrong; ";
    }
    for (double r : {1.45, 1.56, 15.0}) {
        expect(classify(GlnParams{0.0, 1.0, r}).kind,
               DeterminacyKind::indeterminate_all_moments_finite, "mid-r");
    }
    expect(classify_limit(PrizeCompetitionParams{}).kind,
           DeterminacyKind::determinate_compact_support, "limit law");
    report(5, "determinacy truth table", pass, d.str());
}

// 6. Equal-moment families: analytic zeros, numeric residuals, normalization.
void criterion6() {
    bool pass = true;
    std::ostringstream d;
    double inf = std::numeric_limits<double>::infinity();
    for (double r : {1.5, 2.0, 3.0}) {
        GlnParams p{0.0, 1.0, r};
        Perturbation pert = sup_abs_h(p);
        for (double eps : {-1.0, 1.0}) {
            EquivalenceReport rep = verify_moment_equivalence(p, eps, 4, 1e-6);
            if (!rep.all_pass) {
                pass = false;
                d << "r=" << r << " eps=" << eps << " certificates; ";
            }
            StieltjesMember m(pert, eps);
            auto f = [&](double x) { return member_pdf(m, x); };
            double mass = integrate_adaptive(f, 0.0, 1.0, 1e-11).value +
                          integrate_adaptive(f, 1.0, inf, 1e-11).value;
            if (std::fabs(mass - 1.0) > 1e-7) {
                pass = false;
                d << "r=" << r << " eps=" << eps << " mass " << mass << "; ";
            }
        }
    }
    report(6, "equal-moment family certification", pass, d.str());
}

// 7. Closed-form sine-kernel moments vs oscillatory quadrature, n = 0..15.
void criterion7() {
    bool pass = true;
    std::ostringstream d;
    for (int n = 0; n <= 15; ++n) {
        auto env = [n](osc_real t) {
            if (n == 0) return osc_exp(-t);
            return osc_exp(osc_real(n) * osc_log(t) - t);
        };
        QuadratureResult q = integrate_oscillatory(env, 4000, 1e-10);
        double truth = kernel_moment_integral(n);
        double err = std::fabs(q.value - truth);
        if (!q.converged || err > 1e-8) {
            pass = false;
            d << "n=" << n << " err " << err << "; ";
        }
    }
    report(7, "sine-kernel moment identity", pass, d.str());
}

// 8. Mixture sampler against the CDF, and against the inverse sampler.
void criterion8() {
    bool pass = true;
    std::ostringstream d;
    const std::size_t n = 100000;
    for (double r : {1.2, 2.0, 15.0}) {
        GlnParams p{0.0, 1.0, r};
        RngStream rng(1001 + static_cast<std::uint64_t>(10 * r));
        std::vector<double> draws = sample_gln(p, rng, n);
        double ks = ks_statistic(std::move(draws),
                                 [&](double x) { return gln_cdf(p, x); });
        if (ks >= ks_critical_1pct(n)) {
            pass = false;
            d << "r=" << r << " KS " << ks << "; ";
        }
    }
    GlnParams p2{0.0, 1.0, 2.0};
    const std::size_t m = 50000;
    RngStream ra(2001), rb(2002);
    std::vector<double> mix = sample_gln(p2, ra, m);
    std::vector<double> inv = sample_gln_inverse(p2, rb, m);
    double ks2 = ks_two_sample(std::move(mix), std::move(inv));
    if (ks2 >= ks_two_sample_critical_1pct(m, m)) {
        pass = false;
        d << "two-sample KS " << ks2 << "; ";
    }
    report(8, "sampler fidelity", pass, d.str());
}

// 9. The large-r limit: unit mixture moments, compact-support moments,
//    and the uniformization of ln X.
void criterion9() {
    bool pass = true;
    std::ostringstream d;
    for (double k : {1.0, 2.0, 3.0, 4.0}) {
        if (std::fabs(z_moment(1e6, k) - 1.0) > 1e-4) {
            pass = false;
            d << "mixture moment k=" << k << "; ";
        }
    }
    PrizeCompetitionParams pc;
    for (double k : {1.0, 2.0, 3.0}) {
        if (!close_rel(prize_moment(pc, k), std::sinh(k) / k, 1e-10)) {
            pass = false;
            d << "support moment k=" << k << "; ";
        }
    }
    GlnParams steep{0.0, 1.0, 200.0};
    RngStream rng(3003);
    const std::size_t n = 500;
    std::vector<double> draws = sample_gln(steep, rng, n);
    double s2 = 0.0, s4 = 0.0;
    for (double x : draws) {
        double z = std::log(x);
        s2 += z * z;
        s4 += z * z * z * z;
    }
    double m2 = s2 / n;
    double se = std::sqrt((s4 / n - m2 * m2) / n);
    if (std::fabs(m2 - 1.0 / 3.0) > 4.0 * se) {
        pass = false;
        d << "ln-X second moment " << m2 << " (se " << se << "); ";
    }
    report(9, "limit law", pass, d.str());
}

// 10. Power-transform closure at density and sample level.
void criterion10() {
    bool pass = true;
    std::ostringstream d;
    GlnParams p{0.3, 0.8, 2.4};
    for (double a : {0.5, 2.0, 3.0}) {
        GlnParams t = power_transform(p, a);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            double y = std::exp(-3.0 + 6.0 * i / 199.0);
            double lhs = gln_pdf(t, y);
            double rhs = gln_pdf(p, std::pow(y, 1.0 / a)) *
                         std::pow(y, 1.0 / a - 1.0) / a;
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
        if (worst > 1e-12) {
            pass = false;
            d << "power=" << a << " max abs diff " << worst << "; ";
        }
    }
    const std::size_t n = 50000;
    GlnParams t = power_transform(p, 2.0);
    RngStream r1(4001), r2(4002);
    std::vector<double> raised = sample_gln(p, r1, n);
    for (double& x : raised) x = x * x;
    std::vector<double> direct = sample_gln(t, r2, n);
    double ks = ks_two_sample(std::move(raised), std::move(direct));
    if (ks >= ks_two_sample_critical_1pct(n, n)) {
        pass = false;
        d << "two-sample KS " << ks << "; ";
    }
    report(10, "power closure", pass, d.str());
}

// 11. The emitted density table: tail ordering and normalization; uses the
//     real command-line binary.
void criterion11() {
    std::string cmd = std::string(GLNMOM_CLI_PATH) +
                      " figure1 --precision 17 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        report(11, "density table replication", false, "could not launch CLI");
        return;
    }
    std::string out;
    std::array<char, 8192> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    bool pass = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    std::ostringstream d;
    if (!pass) d << "CLI exit; ";

    std::vector<double> xs;
    std::vector<std::array<double, 3>> cols;
    std::stringstream ss(out);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::array<double, 4> vals{};
        for (int i = 0; i < 4 && std::getline(ls, cell, ','); ++i) {
            vals[i] = std::stod(cell);
        }
        xs.push_back(vals[0]);
        cols.push_back({vals[1], vals[2], vals[3]});
    }
    if (xs.size() != 600) {
        pass = false;
        d << "row count " << xs.size() << "; ";
    } else {
        // Tail ordering. The r=1.5 and r=2 densities cross near x = 5.2
        // (they are within 1% of each other around x = 5), so the strict
        // ordering is asserted at the far end of the grid and the
        // crossover itself must happen inside the emitted range.
        std::size_t last = xs.size() - 1;
        double v15 = cols[last][0], v_ln = cols[last][2], v150 = cols[last][1];
        if (!(v15 > v_ln && v_ln > v150)) {
            pass = false;
            d << "tail ordering at x=" << xs[last] << "; ";
        }
        bool crossed = false;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] >= 5.0 && xs[i] <= 6.0 && cols[i][0] > cols[i][2]) {
                crossed = true;
                break;
            }
        }
        if (!crossed) {
            pass = false;
            d << "no heavier-tail crossover in [5, 6]; ";
        }
        // trapezoid mass plus analytic remainders outside the grid
        GlnParams ps[3] = {{0.0, 1.0, 1.5}, {0.0, 1.0, 15.0}, {0.0, 1.0, 2.0}};
        for (int c = 0; c < 3; ++c) {
            double trapz = 0.0;
            for (std::size_t i = 1; i < xs.size(); ++i) {
                trapz += 0.5 * (cols[i][c] + cols[i - 1][c]) *
                         (xs[i] - xs[i - 1]);
            }
            double remainder =
                gln_cdf(ps[c], xs.front()) + 1.0 - gln_cdf(ps[c], xs.back());
            if (std::fabs(trapz + remainder - 1.0) > 1e-3) {
                pass = false;
                d << "column " << c << " mass " << trapz + remainder << "; ";
            }
        }
    }
    report(11, "density table replication", pass, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
