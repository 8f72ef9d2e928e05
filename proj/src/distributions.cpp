#include "boxagg/distributions.hpp"

#include "boxagg/geometry.hpp"
#include "boxagg/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxagg::distributions {

Rational BoxDistribution::prob(const Box& z) const {
    auto it = entries.find(z);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational BoxDistribution::total_mass() const {
    Rational sum = 0;
    for (const auto& [z, p] : entries) sum += p;
    return sum;
}

std::pair<Box, Box> swap_normalize(const Box& x, const Box& y) {
    geometry::check_same_length(x, y);
    Box nx = x, ny = y;
    for (std::size_t i = 0; i < nx.size(); ++i) {
        if (ny[i] > nx[i]) std::swap(nx[i], ny[i]);
    }
    return {nx, ny};
}

BoxDistribution box_distribution(const Box& x, const Box& y) {
    BoxDistribution dist;
    dist.total_attachments = geometry::attachment_count(x, y);
    std::map<Box, BigInt, DescLex> counts;
    geometry::for_each_parameter(x, y, [&](const geometry::AttachmentParam& s) {
        ++counts[geometry::aggregate_at(x, y, s)];
    });
    for (const auto& [z, c] : counts) {
        dist.entries.emplace(z, Rational(c, dist.total_attachments));
    }
    return dist;
}

BoxDistribution box_distribution_2d(const Box& x, const Box& y) {
    geometry::check_same_length(x, y);
    if (x.size() != 2) throw std::invalid_argument("box_distribution_2d requires l = 2");

    const BigInt total = geometry::attachment_count(x, y);  // = 2(x1+x2+y1+y2)
    std::map<Box, BigInt, DescLex> counts;
    auto add = [&](std::int64_t z1, std::int64_t z2, const BigInt& count) {
        counts[{z1, z2}] += count;
    };

    // corner attachments
    add(x[0] + y[0], x[1] + y[1], 4);
    // side slides, strictly between corner and flush positions
    for (std::int64_t s = 1; s <= std::min(x[0], y[0]) - 1; ++s) {
        add(x[0] + y[0] - s, x[1] + y[1], 4);
    }
    for (std::int64_t s = 1; s <= std::min(x[1], y[1]) - 1; ++s) {
        add(x[0] + y[0], x[1] + y[1] - s, 4);
    }
    // flush (absorbing) positions
    add(x[0] + y[0], std::max(x[1], y[1]), 2 * std::abs(y[1] - x[1]) + 2);
    add(std::max(x[0], y[0]), x[1] + y[1], 2 * std::abs(y[0] - x[0]) + 2);

    BoxDistribution dist;
    dist.total_attachments = total;
    for (const auto& [z, c] : counts) {
        dist.entries.emplace(z, Rational(c, total));
    }
    return dist;
}

namespace {

void require_normalized(const Box& x, const Box& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) {
            throw std::invalid_argument(
                "growth-direction statistics require x_i >= y_i; "
                "apply swap_normalize to the pair first");
        }
    }
}

}  // namespace

Rational growth_direction_prob(const Box& x, const Box& y,
                               const std::set<std::size_t>& dirs) {
    geometry::check_same_length(x, y);
    require_normalized(x, y);
    if (dirs.empty()) throw std::invalid_argument("growth_direction_prob: dirs must be nonempty");
    for (auto i : dirs) {
        if (i >= x.size()) throw std::out_of_range("growth_direction_prob: index out of range");
    }

    BigInt grown = 1, stale = 1, rest = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (dirs.contains(j)) {
            grown *= y[j];
            stale *= y[j] - 1;
        } else {
            rest *= x[j] - y[j] + 1;
        }
    }
    const BigInt scale = BigInt(1) << dirs.size();
    return Rational(scale * (grown - stale) * rest, geometry::attachment_count(x, y));
}

GrowthPmf growth_count_pmf(const Box& x, const Box& y) {
    geometry::check_same_length(x, y);
    require_normalized(x, y);
    const std::size_t l = x.size();

    std::vector<Rational> a(l), b(l), b1(l);
    for (std::size_t i = 0; i < l; ++i) {
        a[i] = x[i] - y[i] + 1;
        b[i] = y[i];
        b1[i] = y[i] - 1;
    }
    const Rational total(geometry::attachment_count(x, y));

    GrowthPmf pmf;
    pmf.probs.assign(l + 1, Rational(0));
    for (std::size_t k = 1; k <= l; ++k) {
        const BigInt scale = BigInt(1) << k;
        pmf.probs[k] = scale * (symfunc::big_r(a, b, k) - symfunc::big_r(a, b1, k)) / total;
    }
    return pmf;
}

Rational moment(const Box& x, const Box& y, unsigned p) {
    auto m = symfunc::moment_polynomial(x, y);
    const Rational at2 = m.eval(2);
    auto scaled = m;
    for (unsigned i = 0; i < p; ++i) scaled = symfunc::u_ddu(scaled);
    return scaled.eval(2) / at2;
}

BoxDistribution unit_box_distribution(const Box& x) {
    geometry::check_box(x);
    const std::size_t l = x.size();
    BigInt outer = 1, inner = 1, volume = 1;
    for (auto d : x) {
        outer *= d + 2;
        inner *= d;
        volume *= d;
    }
    const BigInt total = outer - inner;

    BoxDistribution dist;
    dist.total_attachments = total;
    // every nonempty subset of grown coordinates
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
        Box z = x;
        BigInt grown_sides = 1;
        int k = 0;
        for (std::size_t i = 0; i < l; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                ++z[i];
                grown_sides *= x[i];
                ++k;
            }
        }
        dist.entries.emplace(std::move(z),
                             Rational((BigInt(1) << k) * volume, grown_sides * total));
    }
    return dist;
}

Rational unit_mean_directions(const Box& x) {
    geometry::check_box(x);
    Rational numer = 0;
    Rational shrink = 1;
    for (auto d : x) {
        numer += Rational(2, d + 2);
        shrink *= Rational(d, d + 2);
    }
    return numer / (1 - shrink);
}

}  // namespace boxagg::distributions
