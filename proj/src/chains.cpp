#include "boxagg/chains.hpp"

#include "boxagg/distributions.hpp"
#include "boxagg/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace boxagg::chains {

StateDistribution unit_box_step(const StateDistribution& d) {
    StateDistribution next;
    std::size_t l = 0;
    for (const auto& [state, mass] : d) {
        if (l == 0) l = state.size();
        if (state.size() != l) throw std::invalid_argument("chain states have mixed dimensions");
        if (mass == 0) continue;
        for (const auto& [z, p] : distributions::unit_box_distribution(state).entries) {
            next[z] += mass * p;
        }
    }
    return next;
}

UnitBoxChain::UnitBoxChain(Box start) : start_(std::move(start)) {
    geometry::check_box(start_);
}

Rational UnitBoxChain::n_step_probability(const Box& z, int n) {
    if (n < 0) throw std::invalid_argument("n_step_probability: n must be >= 0");
    if (z.size() != start_.size()) {
        throw std::invalid_argument("n_step_probability: dimension mismatch");
    }
    const std::size_t l = z.size();
    for (std::size_t i = 0; i < l; ++i) {
        if (z[i] < start_[i]) return 0;
    }
    if (n == 0) return z == start_ ? Rational(1) : Rational(0);

    const auto key = std::make_pair(z, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // backward recurrence over predecessors z - sum_{j in dirs} e_j, with the
    // one-step probability from that predecessor into z
    Rational acc = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
        Box pred = z;
        bool valid = true;
        for (std::size_t i = 0; i < l && valid; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                if (--pred[i] < 1) valid = false;
            }
        }
        if (!valid) continue;

        BigInt numer = 1;     // 2^k * prod_{j not in dirs} z_j
        BigInt outer = 1, inner = 1;  // |T(pred)| pieces
        int k = 0;
        for (std::size_t i = 0; i < l; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                ++k;
                outer *= z[i] + 1;
                inner *= z[i] - 1;
            } else {
                numer *= z[i];
                outer *= z[i] + 2;
                inner *= z[i];
            }
        }
        numer <<= k;
        acc += Rational(numer, outer - inner) * n_step_probability(pred, n - 1);
    }
    memo_.emplace(key, acc);
    return acc;
}

Rational n_step_probability(const Box& x, const Box& z, int n) {
    UnitBoxChain chain(x);
    return chain.n_step_probability(z, n);
}

partitions::PartitionDistribution self_agg_distribution(const Partition& lam) {
    return partitions::partition_distribution(lam, lam);
}

namespace {

struct Argmax {
    std::vector<Partition> states;
    Rational probability;
};

Argmax argmax_states(const partitions::PartitionDistribution& dist) {
    Argmax out;
    out.probability = 0;
    for (const auto& [nu, p] : dist.entries) {
        if (p > out.probability) {
            out.probability = p;
            out.states.clear();
        }
        if (p == out.probability) out.states.push_back(nu);
    }
    return out;
}

}  // namespace

TraceTree most_frequent_trace(const Partition& lam0, int steps, std::size_t expand_limit) {
    partitions::check_partition(lam0);
    if (steps < 1) throw std::invalid_argument("most_frequent_trace: steps must be >= 1");

    TraceTree tree;
    tree.levels.push_back({{lam0}, Rational(1), 1, true});

    for (int step = 0; step < steps; ++step) {
        const TraceLevel& frontier = tree.levels.back();
        if (!frontier.expanded) break;

        std::set<Partition, DescLex> next;
        Rational best = 0;
        for (const Partition& state : frontier.states) {
            Argmax top = argmax_states(self_agg_distribution(state));
            if (top.probability > best) {
                best = top.probability;
                next.clear();
            }
            if (top.probability == best) {
                next.insert(top.states.begin(), top.states.end());
            }
        }

        TraceLevel level;
        level.probability = best;
        level.tie_count = next.size();
        if (next.size() > expand_limit) {
            level.expanded = false;  // branch recorded but not grown further
        } else {
            level.states.assign(next.begin(), next.end());
        }
        tree.levels.push_back(std::move(level));
    }
    return tree;
}

std::vector<RatioEntry> fibonacci_limit_report(const Partition& lam0, int steps) {
    partitions::check_partition(lam0);
    if (lam0.size() != 2) throw std::invalid_argument("fibonacci_limit_report requires l = 2");
    if (lam0[0] <= lam0[1] + 3) {
        throw std::invalid_argument(
            "fibonacci_limit_report requires lambda_1 > lambda_2 + 3");
    }
    if (steps < 1) throw std::invalid_argument("fibonacci_limit_report: steps must be >= 1");

    std::vector<RatioEntry> report;
    Partition lam = lam0;
    // The starting row has no predecessor, so no transition probability is
    // reported for it.
    report.push_back({1, lam, Rational(lam[0], lam[1]), std::nullopt});

    for (int n = 2; n <= steps; ++n) {
        Argmax top = argmax_states(self_agg_distribution(lam));
        if (top.states.size() != 1) {
            throw std::logic_error("most frequent 2-D self-aggregation transition is not unique");
        }
        lam = top.states.front();
        report.push_back({n, lam, Rational(lam[0], lam[1]), top.probability});
    }
    return report;
}

}  // namespace boxagg::chains
