// glnmom — command-line surface of the generalized lognormal toolkit.
//
// Parameterization: GLN(mu, sigma, r) is the law of exp(Y) where Y has
// density 1/(2 r^{1/r} sigma Gamma(1+1/r)) exp(-|y-mu|^r/(r sigma^r)).
// r=2 is the classical lognormal, r=1 the log-Laplace.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glnmom/determinacy.hpp"
#include "glnmom/distributions.hpp"
#include "glnmom/moments.hpp"
#include "glnmom/sampling.hpp"
#include "glnmom/stieltjes.hpp"

namespace {

using glnmom::GlnParams;

struct OutputSpec {
    std::string format = "csv";
    int precision = 12;
    std::string out;  // empty = stdout
};

struct ParamOpts {
    double mu = 0.0;
    double sigma = 1.0;
    double r = 2.0;
    std::string preset;

    GlnParams resolve() const {
        double m = mu, s = sigma, rr = r;
        if (!preset.empty()) {
            m = 0.0;
            s = 1.0;
            if (preset == "lognormal") rr = 2.0;
            else if (preset == "figure1-a") rr = 1.5;
            else if (preset == "figure1-b") rr = 15.0;
            else if (preset == "nelson-egarch") rr = 1.56;
            else if (preset == "brunazzo") rr = 1.45;
            else throw CLI::ValidationError("--preset", "unknown preset " + preset);
        }
        return {m, s, rr};
    }
};

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    long count = 0;
    bool log_spaced = false;

    std::vector<double> points() const {
        std::vector<double> v;
        v.reserve(count);
        if (count == 1) {
            v.push_back(min);
            return v;
        }
        if (log_spaced) {
            double l0 = std::log(min), l1 = std::log(max);
            for (long i = 0; i < count; ++i) {
                v.push_back(std::exp(l0 + (l1 - l0) * i / (count - 1)));
            }
        } else {
            for (long i = 0; i < count; ++i) {
                v.push_back(min + (max - min) * i / (count - 1));
            }
        }
        return v;
    }
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    std::stringstream ss(s);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() < 3 || parts.size() > 4) {
        throw CLI::ValidationError("--grid", "expected min:max:count[:log]");
    }
    try {
        g.min = std::stod(parts[0]);
        g.max = std::stod(parts[1]);
        g.count = std::stol(parts[2]);
    } catch (...) {
        throw CLI::ValidationError("--grid", "could not parse " + s);
    }
    if (parts.size() == 4) {
        if (parts[3] != "log") throw CLI::ValidationError("--grid", "fourth field must be 'log'");
        g.log_spaced = true;
    }
    if (g.count < 1 || !(g.min <= g.max) || (g.log_spaced && !(g.min > 0))) {
        throw CLI::ValidationError("--grid", "bad grid bounds");
    }
    return g;
}

std::string fmt_num(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

class Sink {
  public:
    explicit Sink(const OutputSpec& spec) : spec_(spec) {
        if (!spec.out.empty()) {
            file_.open(spec.out);
            if (!file_) throw CLI::ValidationError("--out", "cannot open " + spec.out);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

  private:
    const OutputSpec& spec_;
    std::ofstream file_;
};

void emit_table(const OutputSpec& spec, Sink& sink,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    std::ostream& os = sink.stream();
    if (spec.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json o;
            for (size_t i = 0; i < header.size(); ++i) o[header[i]] = row[i];
            j.push_back(o);
        }
        os << j.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < header.size(); ++i) {
        os << header[i] << (i + 1 < header.size() ? "," : "");
    }
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << row[i] << (i + 1 < row.size() ? "," : "");
        }
        os << "\n";
    }
}

int run_eval(const std::string& what, const std::string& dist,
             const ParamOpts& po, const GridSpec& grid, const OutputSpec& spec) {
    GlnParams p = po.resolve();
    glnmom::GedParams gp{p.mu, p.sigma, p.r};
    std::vector<std::string> header = {what == "quantile" ? "q" : "x", "value"};
    std::vector<std::vector<std::string>> rows;
    for (double x : grid.points()) {
        double v;
        if (dist == "ged") {
            v = what == "pdf" ? glnmom::ged_pdf(gp, x)
                : what == "cdf" ? glnmom::ged_cdf(gp, x)
                                : glnmom::ged_quantile(gp, x);
        } else {
            v = what == "pdf" ? glnmom::gln_pdf(p, x)
                : what == "cdf" ? glnmom::gln_cdf(p, x)
                                : glnmom::gln_quantile(p, x);
        }
        rows.push_back({fmt_num(x, spec.precision), fmt_num(v, spec.precision)});
    }
    Sink sink(spec);
    emit_table(spec, sink, header, rows);
    return 0;
}

int run_figure1(const OutputSpec& spec) {
    GridSpec grid{0.01, 6.0, 600, false};
    GlnParams a{0.0, 1.0, 1.5}, b{0.0, 1.0, 15.0}, c{0.0, 1.0, 2.0};
    std::vector<std::string> header = {"x", "gln_r1.5", "gln_r15", "lognormal_r2"};
    std::vector<std::vector<std::string>> rows;
    for (double x : grid.points()) {
        rows.push_back({fmt_num(x, spec.precision),
                        fmt_num(glnmom::gln_pdf(a, x), spec.precision),
                        fmt_num(glnmom::gln_pdf(b, x), spec.precision),
                        fmt_num(glnmom::gln_pdf(c, x), spec.precision)});
    }
    Sink sink(spec);
    emit_table(spec, sink, header, rows);
    return 0;
}

int run_sample(const ParamOpts& po, long n, std::uint64_t seed,
               const std::string& sampler, const OutputSpec& spec) {
    GlnParams p = po.resolve();
    glnmom::RngStream rng(seed);
    std::vector<double> draws;
    if (n > 0) {
        draws = sampler == "inverse" ? glnmom::sample_gln_inverse(p, rng, n)
                                     : glnmom::sample_gln(p, rng, n);
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(draws.size());
    for (double v : draws) rows.push_back({fmt_num(v, spec.precision)});
    Sink sink(spec);
    emit_table(spec, sink, {"value"}, rows);
    return 0;
}

int run_moments(const ParamOpts& po, const std::string& klist,
                const std::string& method, const OutputSpec& spec) {
    GlnParams p = po.resolve();
    std::vector<double> ks;
    std::stringstream ss(klist);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            ks.push_back(std::stod(tok));
        } catch (...) {
            throw CLI::ValidationError("--k", "could not parse order " + tok);
        }
    }
    std::vector<std::string> header = {"k", "exists", "value", "method"};
    std::vector<std::vector<std::string>> rows;
    for (double k : ks) {
        auto verdict = glnmom::moment_exists(p, k);
        if (!verdict.exists) {
            rows.push_back({fmt_num(k, spec.precision), "false", "does-not-exist", "-"});
            continue;
        }
        bool integral_k = k == std::floor(k) && k >= 0.0;
        std::string used;
        double value;
        if (method == "series" || (method == "auto" && integral_k && p.r > 1.05)) {
            if (!(p.r > 1.0) || !integral_k) {
                throw std::domain_error("series method needs r > 1 and integer k >= 0");
            }
            auto sr = glnmom::moment_series(p, static_cast<int>(k));
            if (sr.converged) {
                value = sr.value;
                used = "series";
            } else if (method == "series") {
                throw std::runtime_error("moment series did not converge within budget");
            } else {
                value = glnmom::moment_quadrature(p, k);
                used = "quadrature";
            }
        } else {
            value = glnmom::moment_quadrature(p, k);
            used = "quadrature";
        }
        rows.push_back({fmt_num(k, spec.precision), "true",
                        fmt_num(value, spec.precision), used});
    }
    Sink sink(spec);
    emit_table(spec, sink, header, rows);
    return 0;
}

int run_classify(const ParamOpts& po, bool limit_law, const OutputSpec& spec) {
    glnmom::DeterminacyVerdict v =
        limit_law ? glnmom::classify_limit(glnmom::PrizeCompetitionParams{})
                  : glnmom::classify(po.resolve());
    Sink sink(spec);
    if (spec.format == "csv") {
        std::vector<std::string> header = {"kind", "mgf_exists", "range_lower",
                                           "range_upper", "krein_value",
                                           "krein_tail_bound", "witnessed"};
        std::vector<std::string> row = {
            glnmom::to_string(v.kind),
            v.mgf_exists ? "true" : "false",
            v.moment_range ? fmt_num(v.moment_range->first, spec.precision) : "",
            v.moment_range ? fmt_num(v.moment_range->second, spec.precision) : "",
            v.krein ? fmt_num(v.krein->value, spec.precision) : "",
            v.krein ? fmt_num(v.krein->tail_bound, spec.precision) : "",
            v.witnessed() ? "true" : "false"};
        emit_table(spec, sink, header, {row});
    } else {
        sink.stream() << glnmom::verdict_to_json(v) << "\n";
    }
    return 0;
}

int run_stieltjes(const ParamOpts& po, double eps, int kmax,
                  const GridSpec& grid, const OutputSpec& spec) {
    GlnParams p = po.resolve();
    if (!(p.r > 1.0)) {
        throw std::domain_error(
            "no Stieltjes class constructed for r <= 1; "
            "moments do not all exist there");
    }
    glnmom::StieltjesMember member(glnmom::sup_abs_h(p), eps);
    auto rep = glnmom::verify_moment_equivalence(p, eps, kmax, 1e-6);

    std::vector<std::string> header = {"x", "pdf", "member_pdf"};
    std::vector<std::vector<std::string>> rows;
    for (double x : grid.points()) {
        rows.push_back({fmt_num(x, spec.precision),
                        fmt_num(glnmom::gln_pdf(p, x), spec.precision),
                        fmt_num(glnmom::member_pdf(member, x), spec.precision)});
    }

    Sink sink(spec);
    if (spec.format == "json") {
        nlohmann::json j;
        j["report"] = nlohmann::json::parse(glnmom::report_to_json(rep));
        j["grid"] = nlohmann::json::array();
        for (const auto& row : rows) {
            j["grid"].push_back({{"x", row[0]}, {"pdf", row[1]}, {"member_pdf", row[2]}});
        }
        sink.stream() << j.dump(2) << "\n";
    } else {
        emit_table(spec, sink, header, rows);
        // report goes to stdout; keeps the CSV table clean when --out is used
        std::ostream& ros = sink.to_file() ? std::cout : sink.stream();
        if (!sink.to_file()) ros << "\n";
        ros << glnmom::report_to_json(rep) << "\n";
    }
    return rep.all_pass ? 0 : 3;
}

void report_error(const OutputSpec& spec, const std::string& msg) {
    if (spec.format == "json") {
        nlohmann::json j;
        j["error"] = msg;
        std::cerr << j.dump() << "\n";
    } else {
        std::cerr << "glnmom: error: " << msg << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "glnmom — generalized lognormal distributions: evaluation, sampling,\n"
        "moments, moment-determinacy classification and Stieltjes classes.\n"
        "Density parameterization: f(y) = exp(-|y-mu|^r/(r sigma^r)) /\n"
        "(2 r^{1/r} sigma Gamma(1+1/r)); GLN is the law of exp(Y).\n"
        "Output is plain CSV/JSON; NO_COLOR is honored trivially."};
    app.require_subcommand(1);

    ParamOpts po;
    OutputSpec spec;
    std::string grid_str;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--mu", po.mu, "location of ln X (e^mu scales X)");
        cmd->add_option("--sigma", po.sigma, "scale of ln X (> 0)");
        cmd->add_option("--r", po.r, "tail-thickness order (> 0)");
        cmd->add_option("--preset", po.preset,
                        "named case: lognormal, figure1-a, figure1-b, "
                        "nelson-egarch, brunazzo");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", spec.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--precision", spec.precision, "significant digits")
            ->check(CLI::Range(1, 17));
        cmd->add_option("--out", spec.out, "output path (default stdout)");
    };

    // eval
    auto* eval = app.add_subcommand("eval", "pointwise pdf/cdf/quantile tables");
    std::string eval_what = "pdf";
    std::string eval_dist = "gln";
    eval->add_option("what", eval_what, "pdf, cdf or quantile")
        ->check(CLI::IsMember({"pdf", "cdf", "quantile"}));
    eval->add_option("--dist", eval_dist, "gln or ged")
        ->check(CLI::IsMember({"gln", "ged"}));
    eval->add_option("--grid", grid_str, "min:max:count[:log]");
    add_params(eval);
    add_output(eval);

    // figure1
    auto* fig = app.add_subcommand(
        "figure1", "density columns for r=1.5, r=15 and the r=2 lognormal");
    add_output(fig);

    // sample
    auto* smp = app.add_subcommand("sample", "random variates, one per row");
    long smp_n = 0;
    std::uint64_t smp_seed = 1;
    std::string smp_sampler = "mixture";
    smp->add_option("--n", smp_n, "number of draws")->required()
        ->check(CLI::NonNegativeNumber);
    smp->add_option("--seed", smp_seed, "RNG seed (fixed seed => identical output)");
    smp->add_option("--sampler", smp_sampler, "mixture or inverse")
        ->check(CLI::IsMember({"mixture", "inverse"}));
    add_params(smp);
    add_output(smp);

    // moments
    auto* mom = app.add_subcommand("moments", "moment existence and values");
    std::string mom_k = "1,2,3,4";
    std::string mom_method = "auto";
    mom->add_option("--k", mom_k, "comma-separated orders (fractional allowed)");
    mom->add_option("--method", mom_method, "series, quadrature or auto")
        ->check(CLI::IsMember({"series", "quadrature", "auto"}));
    add_params(mom);
    add_output(mom);

    // classify
    auto* cls = app.add_subcommand("classify", "moment-determinacy verdict");
    bool cls_limit = false;
    cls->add_flag("--limit-law", cls_limit,
                  "classify the compact-support r->infinity limit instead");
    add_params(cls);
    add_output(cls);

    // stieltjes
    auto* stj = app.add_subcommand(
        "stieltjes", "Stieltjes-class member density and moment certificates");
    double stj_eps = 0.5;
    int stj_kmax = 4;
    stj->add_option("--eps", stj_eps, "member parameter in [-1, 1]");
    stj->add_option("--kmax", stj_kmax, "highest certified moment order");
    stj->add_option("--grid", grid_str, "member table grid, min:max:count[:log]");
    add_params(stj);
    add_output(stj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error(spec, e.what());
        return 2;
    }

    try {
        if (eval->parsed()) {
            GridSpec g = grid_str.empty()
                             ? (eval_what == "quantile" ? GridSpec{0.05, 0.95, 19, false}
                                                        : GridSpec{0.1, 5.0, 50, false})
                             : parse_grid(grid_str);
            return run_eval(eval_what, eval_dist, po, g, spec);
        }
        if (fig->parsed()) return run_figure1(spec);
        if (smp->parsed()) return run_sample(po, smp_n, smp_seed, smp_sampler, spec);
        if (mom->parsed()) return run_moments(po, mom_k, mom_method, spec);
        if (cls->parsed()) return run_classify(po, cls_limit, spec);
        if (stj->parsed()) {
            GridSpec g = grid_str.empty() ? GridSpec{0.05, 50.0, 200, true}
                                          : parse_grid(grid_str);
            return run_stieltjes(po, stj_eps, stj_kmax, g, spec);
        }
    } catch (const CLI::Error& e) {
        report_error(spec, e.what());
        return 2;
    } catch (const std::domain_error& e) {
        report_error(spec, e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        report_error(spec, e.what());
        return 2;
    } catch (const std::exception& e) {
        report_error(spec, e.what());
        return 3;
    }
    return 0;
}
