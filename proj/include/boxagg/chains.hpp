#pragma once

#include <map>
#include <optional>
#include <vector>

#include "boxagg/partitions.hpp"
#include "boxagg/rational.hpp"

namespace boxagg::chains {

/// Sparse exact distribution over chain states.
using StateDistribution = std::map<Box, Rational, DescLex>;

/// One step of the unit-box aggregation chain: pushes every state's mass
/// through unit_box_distribution. Mass is conserved exactly.
StateDistribution unit_box_step(const StateDistribution& d);

/// Memoized evaluator of the n-step transition probabilities p^(n)_{x,z} of
/// the unit-box chain via the backward recurrence over predecessors
/// z - e_{i_1} - ... - e_{i_k} (a multidimensional Delannoy-type recurrence
/// with non-constant weights).
class UnitBoxChain {
public:
    explicit UnitBoxChain(Box start);

    /// p^(n)_{x,z}; zero when any z_i < x_i, delta at n = 0.
    Rational n_step_probability(const Box& z, int n);

    const Box& start() const { return start_; }

private:
    Box start_;
    std::map<std::pair<Box, int>, Rational> memo_;
};

Rational n_step_probability(const Box& x, const Box& z, int n);

/// partition_distribution(lam, lam).
partitions::PartitionDistribution self_agg_distribution(const Partition& lam);

/// One level of a highest-probability-weight trace. At level 0 the single
/// start state has probability 1. At level N+1, states is the union of the
/// exact argmax sets of the level-N states' self-aggregation distributions
/// and probability is the largest of those maxima. When the argmax set is
/// larger than the expand limit, tie_count records its exact size, states is
/// left empty and expanded is false (the branch is not grown further).
struct TraceLevel {
    std::vector<Partition> states;
    Rational probability;
    std::size_t tie_count = 0;
    bool expanded = true;
};

struct TraceTree {
    std::vector<TraceLevel> levels;
};

TraceTree most_frequent_trace(const Partition& lam0, int steps, std::size_t expand_limit = 8);

/// One row of the 2-D golden-rectangle report. The probability is the
/// transition probability into this state, absent for the starting row
/// (the start has no predecessor).
struct RatioEntry {
    int step;
    Partition state;
    Rational ratio;
    std::optional<Rational> probability;
};

/// Iterates the unique most frequent 2-D self-aggregation transition
/// (a, b) -> (a+b, a), reporting side ratios and transition probabilities.
/// Requires l == 2 and lam0[0] > lam0[1] + 3.
std::vector<RatioEntry> fibonacci_limit_report(const Partition& lam0, int steps);

}  // namespace boxagg::chains
