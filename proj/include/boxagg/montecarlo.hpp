#pragma once

#include <cstdint>
#include <map>

#include "boxagg/geometry.hpp"
#include "boxagg/partitions.hpp"
#include "boxagg/rational.hpp"

namespace boxagg::montecarlo {

/// xoshiro256** seeded through splitmix64, so a single 64-bit seed fully
/// determines the stream. Both algorithms are fixed here (constants and all)
/// to keep sequences reproducible across platforms and reimplementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// Unbiased uniform draw from [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_[4];
};

struct SampleConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

template <typename Key>
struct Empirical {
    std::map<Key, std::uint64_t, DescLex> counts;
    std::uint64_t total = 0;
};

using EmpiricalBoxDistribution = Empirical<Box>;
using EmpiricalPartitionDistribution = Empirical<Partition>;

/// Uniform attachment parameter for (x, y): rejection from the full integer
/// grid of R_{x+y}, accepting boundary points.
geometry::AttachmentParam sample_parameter(const Box& x, const Box& y, Rng& rng);

/// Result box of a uniformly sampled attachment.
Box sample_attachment(const Box& x, const Box& y, Rng& rng);

EmpiricalBoxDistribution estimate_box_distribution(const Box& x, const Box& y,
                                                   const SampleConfig& cfg);

/// Partition mode: draws the rotation y in [mu] proportionally to its
/// attachment count against the fixed representative lam, then samples
/// uniformly within that rotation's parameter set.
EmpiricalPartitionDistribution estimate_partition_distribution(const Partition& lam,
                                                               const Partition& mu,
                                                               const SampleConfig& cfg);

/// Total-variation distance between an empirical histogram and an exact map
/// of probabilities over the same key type.
template <typename Key, typename Cmp>
double total_variation(const Empirical<Key>& emp,
                       const std::map<Key, Rational, Cmp>& exact) {
    Rational tv = 0;
    Rational n = BigInt(emp.total);
    for (const auto& [key, p] : exact) {
        auto it = emp.counts.find(key);
        Rational freq = it == emp.counts.end() ? Rational(0) : Rational(BigInt(it->second)) / n;
        tv += abs(freq - p);
    }
    for (const auto& [key, c] : emp.counts) {
        if (!exact.contains(key)) tv += Rational(BigInt(c)) / n;
    }
    return static_cast<double>(tv) / 2.0;
}

}  // namespace boxagg::montecarlo
