#include "boxagg/montecarlo.hpp"

#include <stdexcept>

namespace boxagg::montecarlo {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next() {
    // xoshiro256**
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return draw % bound;
}

geometry::AttachmentParam sample_parameter(const Box& x, const Box& y, Rng& rng) {
    geometry::check_same_length(x, y);
    const std::size_t l = x.size();
    geometry::AttachmentParam s(l);
    while (true) {
        bool boundary = false;
        for (std::size_t i = 0; i < l; ++i) {
            const std::int64_t m = x[i] + y[i];
            s[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m) + 1));
            if (s[i] == 0 || s[i] == m) boundary = true;
        }
        if (boundary) return s;
    }
}

Box sample_attachment(const Box& x, const Box& y, Rng& rng) {
    return geometry::aggregate_at(x, y, sample_parameter(x, y, rng));
}

EmpiricalBoxDistribution estimate_box_distribution(const Box& x, const Box& y,
                                                   const SampleConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    Rng rng(cfg.seed);
    EmpiricalBoxDistribution emp;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        ++emp.counts[sample_attachment(x, y, rng)];
    }
    emp.total = cfg.trials;
    return emp;
}

EmpiricalPartitionDistribution estimate_partition_distribution(const Partition& lam,
                                                               const Partition& mu,
                                                               const SampleConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    partitions::check_partition(lam);
    partitions::check_partition(mu);

    // rotation picked proportionally to its attachment count, then a uniform
    // boundary point inside that rotation's parameter set; this matches the
    // exact definition's uniform law on the union of parameter sets
    const auto rots = partitions::rotations(mu);
    std::vector<BigInt> cumulative;
    BigInt total = 0;
    for (const Box& y : rots) {
        total += geometry::attachment_count(lam, y);
        cumulative.push_back(total);
    }
    const auto total64 = static_cast<std::uint64_t>(total);

    Rng rng(cfg.seed);
    EmpiricalPartitionDistribution emp;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const BigInt pick = rng.below(total64);
        std::size_t r = 0;
        while (cumulative[r] <= pick) ++r;
        ++emp.counts[partitions::to_partition(sample_attachment(lam, rots[r], rng))];
    }
    emp.total = cfg.trials;
    return emp;
}

}  // namespace boxagg::montecarlo
