#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "boxagg/rational.hpp"

namespace boxagg::distributions {

/// Exact distribution over result boxes. Keys are kept in descending
/// lexicographic order so iteration (and serialization) is canonical.
struct BoxDistribution {
    std::map<Box, Rational, DescLex> entries;
    BigInt total_attachments;

    Rational prob(const Box& z) const;
    Rational total_mass() const;
};

/// P(X = k) for the growth-direction variable X, k = 0..l. probs[0] == 0.
struct GrowthPmf {
    std::vector<Rational> probs;
};

/// Swaps x_i and y_i wherever y_i > x_i. The aggregation distribution is
/// invariant under this, and it establishes the x_i >= y_i orientation the
/// growth-direction formulas require.
std::pair<Box, Box> swap_normalize(const Box& x, const Box& y);

/// Exact histogram of aggregate_at over the full parameter set.
BoxDistribution box_distribution(const Box& x, const Box& y);

/// Closed-form 2-D distribution (corner, slide, flush attachment rows),
/// merging rows that land on the same result box. Requires l == 2.
BoxDistribution box_distribution_2d(const Box& x, const Box& y);

/// Probability that the result grows from x exactly in the coordinates in
/// dirs (zero-based, nonempty). Requires x_i >= y_i for all i.
Rational growth_direction_prob(const Box& x, const Box& y,
                               const std::set<std::size_t>& dirs);

/// Distribution of the number of grown directions. Requires x_i >= y_i.
GrowthPmf growth_count_pmf(const Box& x, const Box& y);

/// p-th moment of X, computed exactly as ((u d/du)^p M)(2) / M(2).
/// Requires x_i >= y_i.
Rational moment(const Box& x, const Box& y, unsigned p);

/// Closed-form distribution of x + (1,...,1) -> z:
///   P(z = x + e_{i_1} + ... + e_{i_k}) = 2^k x_1...x_l / (x_{i_1}...x_{i_k} |T|)
/// with |T| = prod(x_i + 2) - prod(x_i).
BoxDistribution unit_box_distribution(const Box& x);

/// Mean number of growth directions under unit-box aggregation:
///   M = (sum 2/(x_i+2)) / (1 - prod x_i/(x_i+2)).
Rational unit_mean_directions(const Box& x);

}  // namespace boxagg::distributions
