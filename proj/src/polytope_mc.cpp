#include "ek/polytope_mc.hpp"

#include "ek/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ek {

void McConfig::validate() const {
    if (dimension < 2) {
        throw std::invalid_argument("McConfig: dimension must be >= 2");
    }
    if (samples < 1) {
        throw std::invalid_argument("McConfig: samples must be >= 1");
    }
    if (chunk_size < 1) {
        throw std::invalid_argument("McConfig: chunk_size must be >= 1");
    }
}

double McEstimate::z_score(double reference) const {
    const double diff = mean - reference;
    if (std_error == 0.0) {
        return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
    }
    return diff / std_error;
}

bool in_delta(std::span<const double> point, unsigned n) {
    if (point.size() != n) {
        throw std::invalid_argument("in_delta: expected " + std::to_string(n) + " coordinates, got " +
                                    std::to_string(point.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double next = point[(i + 1) % n];
        if (!(point[i] > 0.0) || !(point[i] + next < 1.0)) {
            return false;
        }
    }
    return true;
}

namespace {

/// Running moments of one chunk (Welford), merged across chunks with Chan's
/// pairwise update in chunk-index order.
struct Moments {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t guard_hits = 0;

    void push(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0) {
            return;
        }
        const auto na = static_cast<double>(count);
        const auto nb = static_cast<double>(o.count);
        const double n = na + nb;
        const double d = o.mean - mean;
        mean += d * nb / n;
        m2 += o.m2 + d * d * na * nb / n;
        count += o.count;
        guard_hits += o.guard_hits;
    }
};

/// Runs sample_chunk(rng, count) for every chunk, on up to
/// `workers` threads, and returns the per-chunk results in index order.
template <typename Result, typename ChunkFn>
std::vector<Result> run_chunks(const McConfig& cfg, unsigned workers, ChunkFn sample_chunk) {
    const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<Result> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            const std::uint64_t begin = c * cfg.chunk_size;
            const std::uint64_t count = std::min(cfg.chunk_size, cfg.samples - begin);
            auto rng = Xoshiro256StarStar::for_chunk(cfg.seed, c);
            results[c] = sample_chunk(rng, count);
        }
    };
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    pool.clear();  // joins
    return results;
}

}  // namespace

McEstimate mc_volume(const McConfig& cfg, unsigned workers) {
    cfg.validate();
    const unsigned n = cfg.dimension;
    const auto hits_per_chunk = run_chunks<std::uint64_t>(cfg, workers, [n](Xoshiro256StarStar& rng, std::uint64_t count) {
        std::vector<double> point(n);
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            for (auto& x : point) {
                x = rng.uniform();
            }
            hits += in_delta(point, n) ? 1 : 0;
        }
        return hits;
    });
    std::uint64_t hits = 0;
    for (const auto h : hits_per_chunk) {
        hits += h;
    }
    const auto total = static_cast<double>(cfg.samples);
    const double p = static_cast<double>(hits) / total;
    return {p, std::sqrt(p * (1.0 - p) / total), cfg.samples, cfg.seed, 0};
}

McEstimate mc_zeta_odd(unsigned n, const McConfig& cfg, unsigned workers) {
    cfg.validate();
    if (n < 1 || cfg.dimension != 2 * n) {
        throw std::invalid_argument("mc_zeta_odd: dimension must equal 2n with n >= 1 (n=" + std::to_string(n) +
                                    ", dimension=" + std::to_string(cfg.dimension) + ")");
    }
    const unsigned dim = cfg.dimension;
    const auto per_chunk = run_chunks<Moments>(cfg, workers, [dim](Xoshiro256StarStar& rng, std::uint64_t count) {
        std::vector<double> point(dim);
        Moments m;
        for (std::uint64_t s = 0; s < count; ++s) {
            for (auto& x : point) {
                x = rng.uniform();
            }
            double value = 0.0;
            if (in_delta(point, dim)) {
                // Inside the polytope 0 < u_1 < 1 strictly, so tan is finite
                // barring float pathologies, which are clamped and counted.
                value = std::log(std::tan(0.5 * std::numbers::pi * point[0]));
                if (!std::isfinite(value)) {
                    value = 0.0;
                    ++m.guard_hits;
                }
            }
            m.push(value);
        }
        return m;
    });
    Moments total;
    for (const auto& m : per_chunk) {
        total.merge(m);
    }
    const double two_pow = std::ldexp(1.0, static_cast<int>(2 * n + 1));
    const double scale = -(two_pow / (two_pow - 1.0)) * std::pow(0.5 * std::numbers::pi, 2.0 * n);
    const auto samples = static_cast<double>(total.count);
    const double variance = total.count > 1 ? total.m2 / (samples - 1.0) : 0.0;
    return {scale * total.mean, std::abs(scale) * std::sqrt(variance / samples), cfg.samples, cfg.seed,
            total.guard_hits};
}

}  // namespace ek
