#include "boxagg/partitions.hpp"

#include "boxagg/geometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace boxagg::partitions {

Rational PartitionDistribution::prob(const Partition& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational PartitionDistribution::total_mass() const {
    Rational sum = 0;
    for (const auto& [nu, p] : entries) sum += p;
    return sum;
}

void check_partition(const Partition& lam) {
    geometry::check_box(lam);
    for (std::size_t i = 1; i < lam.size(); ++i) {
        if (lam[i] > lam[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
}

Partition to_partition(const Box& box) {
    Partition p = box;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

std::vector<Box> rotations(const Partition& lam) {
    check_partition(lam);
    Box arrangement = lam;
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<Box> out;
    do {
        out.push_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

std::vector<Overlap> overlaps(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("overlap parts must be positive");
    const std::int64_t lo = std::max(a, b);
    const std::int64_t hi = a + b;
    std::vector<Overlap> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t c = lo; c <= hi; ++c) {
        // absorption covers the whole slide range of the shorter strip inside
        // the longer one; every other length arises from two parameter values
        const std::int64_t w = (c == lo) ? std::abs(a - b) + 1 : 2;
        out.push_back({c, w});
    }
    return out;
}

PartitionDistribution partition_distribution(const Partition& lam, const Partition& mu) {
    check_partition(lam);
    check_partition(mu);
    if (lam.size() != mu.size()) throw std::invalid_argument("partition length mismatch");

    const Box& x = lam;  // fixed representative
    std::map<Partition, BigInt, DescLex> counts;
    BigInt total = 0;
    for (const Box& y : rotations(mu)) {
        total += geometry::attachment_count(x, y);
        geometry::for_each_parameter(x, y, [&](const geometry::AttachmentParam& s) {
            ++counts[to_partition(geometry::aggregate_at(x, y, s))];
        });
    }

    PartitionDistribution dist;
    dist.total_attachments = total;
    for (const auto& [nu, c] : counts) {
        dist.entries.emplace(nu, Rational(c, total));
    }
    return dist;
}

PartitionDistribution partition_distribution_combinatorial(const Partition& lam,
                                                           const Partition& mu) {
    check_partition(lam);
    check_partition(mu);
    if (lam.size() != mu.size()) throw std::invalid_argument("partition length mismatch");
    const std::size_t l = lam.size();

    std::map<Partition, BigInt, DescLex> counts;
    BigInt total = 0;

    Box sigma = mu;
    std::sort(sigma.begin(), sigma.end());
    do {
        // choose one overlap per coordinate; at least one must be the
        // maximal-length overlap (an attachment)
        Partition nu(l);
        std::function<void(std::size_t, BigInt, bool)> choose =
            [&](std::size_t j, BigInt weight, bool has_attachment) {
                if (j == l) {
                    if (!has_attachment) return;
                    total += weight;
                    counts[to_partition(nu)] += weight;
                    return;
                }
                for (const Overlap& o : overlaps(lam[j], sigma[j])) {
                    nu[j] = o.length;
                    choose(j + 1, weight * o.multiplicity,
                           has_attachment || o.length == lam[j] + sigma[j]);
                }
            };
        choose(0, 1, false);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    PartitionDistribution dist;
    dist.total_attachments = total;
    for (const auto& [nu, c] : counts) {
        dist.entries.emplace(nu, Rational(c, total));
    }
    return dist;
}

}  // namespace boxagg::partitions
