#ifndef GLNMOM_SAMPLING_HPP
#define GLNMOM_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "glnmom/distributions.hpp"

namespace glnmom {

// Counter-based stream: output i is a pure function of (seed, i), so the
// sequence is bit-reproducible and streams split deterministically.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    /// uniform on the open interval (0, 1)
    double next_uniform01();
    /// uniform on [-1, 1]
    double next_uniform_sym();
    double next_normal();

    /// Independent child stream; deterministic in (seed, stream_id).
    RngStream split(std::uint64_t stream_id) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return pos_; }

  private:
    std::uint64_t seed_;
    std::uint64_t pos_ = 0;
};

/// Gamma(shape, 1) draw; rejection method valid for every shape > 0.
double sample_gamma(double shape, RngStream& rng);

/// Mixture form: Y = mu + sigma * U * (r W)^{1/r}, U uniform on [-1,1],
/// W ~ Gamma(1 + 1/r, 1).
std::vector<double> sample_ged(const GedParams& p, RngStream& rng, std::size_t n);

std::vector<double> sample_gln(const GlnParams& p, RngStream& rng, std::size_t n);

/// Inverse-CDF sampler, kept as an independent cross-check of the mixture.
std::vector<double> sample_gln_inverse(const GlnParams& p, RngStream& rng,
                                       std::size_t n);

}  // namespace glnmom

#endif
