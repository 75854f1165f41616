#include "glnmom/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace glnmom {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t RngStream::next_u64() {
    ++pos_;
    return mix64(seed_ + pos_ * kGolden);
}

double RngStream::next_uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_uniform_sym() {
    return 2.0 * next_uniform01() - 1.0;
}

double RngStream::next_normal() {
    // Box-Muller; the sine partner is discarded so one call consumes a
    // fixed number of stream positions.
    double u1 = next_uniform01();
    double u2 = next_uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

RngStream RngStream::split(std::uint64_t stream_id) const {
    return RngStream(mix64(seed_ ^ mix64(stream_id + 0x632BE59BD9B4E019ULL)));
}

double sample_gamma(double shape, RngStream& rng) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw std::domain_error("sample_gamma: shape must be positive");
    }
    if (shape < 1.0) {
        // boost: draw Gamma(shape+1) and scale by U^{1/shape}
        double g = sample_gamma(shape + 1.0, rng);
        double u = rng.next_uniform01();
        return g * std::exp(std::log(u) / shape);
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = rng.next_normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.next_uniform01();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> sample_ged(const GedParams& p, RngStream& rng, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    const double inv_r = 1.0 / p.r;
    const double ln_r = std::log(p.r);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.next_uniform_sym();
        double w = sample_gamma(1.0 + inv_r, rng);
        // (r W)^{1/r} without overflow for extreme r
        double z = std::exp((ln_r + std::log(w)) * inv_r);
        out.push_back(p.mu + p.sigma * u * z);
    }
    return out;
}

std::vector<double> sample_gln(const GlnParams& p, RngStream& rng, std::size_t n) {
    std::vector<double> out = sample_ged({p.mu, p.sigma, p.r}, rng, n);
    for (auto& v : out) v = std::exp(v);
    return out;
}

std::vector<double> sample_gln_inverse(const GlnParams& p, RngStream& rng,
                                       std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(gln_quantile(p, rng.next_uniform01()));
    }
    return out;
}

}  // namespace glnmom
