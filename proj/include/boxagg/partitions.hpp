#pragma once

#include <map>
#include <vector>

#include "boxagg/rational.hpp"

namespace boxagg::partitions {

/// Exact distribution over result partitions, keys in descending
/// lexicographic order.
struct PartitionDistribution {
    std::map<Partition, Rational, DescLex> entries;
    BigInt total_attachments;

    Rational prob(const Partition& nu) const;
    Rational total_mass() const;
};

/// One admissible combined length of two overlapping integer strips.
struct Overlap {
    std::int64_t length;
    std::int64_t multiplicity;
};

void check_partition(const Partition& lam);

/// Sorts box sides into a partition (non-increasing).
Partition to_partition(const Box& box);

/// All distinct axis permutations of the parts: the rotation class [lambda].
std::vector<Box> rotations(const Partition& lam);

/// Overlaps of strips of lengths a and b: lengths max(a,b)..a+b, where the
/// minimal length (absorption) has multiplicity |a-b|+1 and every other
/// length, including the maximal one (attachment), has multiplicity 2.
/// Multiplicities sum to a+b+1.
std::vector<Overlap> overlaps(std::int64_t a, std::int64_t b);

/// Geometric definition: fix x = lam, aggregate with every y in [mu],
/// project results to partitions, normalize by the summed attachment counts.
PartitionDistribution partition_distribution(const Partition& lam, const Partition& mu);

/// Combinatorial definition: for every distinct permutation of mu's parts and
/// every per-coordinate choice of overlaps containing at least one
/// attachment, accumulate the sorted result weighted by the product of
/// overlap multiplicities. Agrees exactly with partition_distribution.
PartitionDistribution partition_distribution_combinatorial(const Partition& lam,
                                                           const Partition& mu);

}  // namespace boxagg::partitions
