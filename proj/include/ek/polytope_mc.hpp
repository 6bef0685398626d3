#ifndef EK_POLYTOPE_MC_HPP
#define EK_POLYTOPE_MC_HPP

#include <cstdint>
#include <span>

namespace ek {

struct McConfig {
    unsigned dimension = 2;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Samples per work unit. Chunk c always draws from the same substream
    /// and covers the same sample indices, whichever worker runs it.
    std::uint64_t chunk_size = 1 << 16;

    /// Throws std::invalid_argument unless dimension >= 2, samples >= 1 and
    /// chunk_size >= 1.
    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Samples whose integrand was non-finite and clamped to zero.
    std::uint64_t guard_hits = 0;

    double ci95_low() const { return mean - 1.96 * std_error; }
    double ci95_high() const { return mean + 1.96 * std_error; }
    /// (mean - reference) / std_error; 0 when both agree and std_error is 0.
    double z_score(double reference) const;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Membership in the open cyclic polytope: u_i > 0 and u_i + u_{i+1} < 1 for
/// all i, indices mod n. Boundary points are outside. Throws
/// std::invalid_argument when point.size() != n.
bool in_delta(std::span<const double> point, unsigned n);

/// Hit-or-miss estimate of the polytope volume in dimension cfg.dimension.
/// workers = 0 uses the hardware concurrency. The result is bit-identical for
/// any worker count.
McEstimate mc_volume(const McConfig& cfg, unsigned workers = 0);

/// zeta(2n+1) = -(2^{2n+1} / (2^{2n+1} - 1)) (pi/2)^{2n} E[ln tan(pi u_1 / 2) 1_Delta]
/// over the uniform cube in dimension 2n. cfg.dimension must equal 2n.
McEstimate mc_zeta_odd(unsigned n, const McConfig& cfg, unsigned workers = 0);

}  // namespace ek

#endif  // EK_POLYTOPE_MC_HPP
