#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace trendtrace {

/// SplitMix64 (Steele, Lea & Flood; Vigna's reference implementation).
/// Chosen because it is tiny, splittable, and has published reference
/// outputs, so traces are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// New generator seeded from this one's stream.
    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Poisson draw via Knuth's product method. Large means are split into
/// chunks of mean <= 30 so exp(-mean) stays representable; the sum of
/// independent Poisson draws is itself Poisson with the summed mean.
inline std::size_t sample_poisson(SplitMix64& rng, double mean) {
    std::size_t total = 0;
    int chunks = static_cast<int>(std::ceil(mean / 30.0));
    if (chunks < 1) chunks = 1;
    const double per_chunk = mean / chunks;
    const double limit = std::exp(-per_chunk);
    for (int c = 0; c < chunks; ++c) {
        double p = 1.0;
        std::size_t k = 0;
        do {
            ++k;
            p *= rng.next_double();
        } while (p > limit);
        total += k - 1;
    }
    return total;
}

/// Zipf sampler over ranks 0..n-1: P(rank r) proportional to 1/(r+1)^s.
/// Sampling is by binary search on the precomputed CDF.
class ZipfSampler {
public:
    ZipfSampler(std::size_t n, double exponent) : cdf_(n) {
        double cum = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            cum += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
            cdf_[r] = cum;
        }
        for (double& v : cdf_) v /= cum;
    }

    std::size_t sample(SplitMix64& rng) const {
        const double u = rng.next_double();
        std::size_t lo = 0;
        std::size_t hi = cdf_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cdf_[mid] <= u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

private:
    std::vector<double> cdf_;
};

} // namespace trendtrace
