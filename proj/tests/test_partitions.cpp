#include <doctest.h>

#include <set>

#include "boxagg/distributions.hpp"
#include "boxagg/geometry.hpp"
#include "boxagg/partitions.hpp"
#include "oracles.hpp"

using namespace boxagg;
using namespace boxagg::partitions;

TEST_CASE("rotations") {
    auto r = rotations({3, 1, 1});
    std::set<Box> got(r.begin(), r.end());
    CHECK(got == std::set<Box>{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}});

    CHECK(rotations({2, 2, 2}).size() == 1);
    CHECK(rotations({4, 2}).size() == 2);
    CHECK(rotations({3, 2, 1}).size() == 6);
}

TEST_CASE("overlaps") {
    auto unit = overlaps(1, 1);
    REQUIRE(unit.size() == 2);
    CHECK(unit[0].length == 1);
    CHECK(unit[0].multiplicity == 1);
    CHECK(unit[1].length == 2);
    CHECK(unit[1].multiplicity == 2);

    auto mixed = overlaps(3, 2);
    REQUIRE(mixed.size() == 3);
    CHECK(mixed[0].length == 3);
    CHECK(mixed[0].multiplicity == 2);
    CHECK(mixed[1].length == 4);
    CHECK(mixed[1].multiplicity == 2);
    CHECK(mixed[2].length == 5);
    CHECK(mixed[2].multiplicity == 2);

    // one per parameter value s in [0, a+b]
    for (std::int64_t a = 1; a <= 6; ++a) {
        for (std::int64_t b = 1; b <= 6; ++b) {
            std::int64_t sum = 0;
            for (const auto& o : overlaps(a, b)) sum += o.multiplicity;
            CHECK(sum == a + b + 1);
        }
    }
}

TEST_CASE("partition_distribution golden tables") {
    auto t4 = partition_distribution({3, 1}, {2, 1});
    CHECK(t4.entries.size() == 6);
    CHECK(t4.prob({5, 2}) == Rational(2, 14));
    CHECK(t4.prob({5, 1}) == Rational(1, 14));
    CHECK(t4.prob({4, 3}) == Rational(2, 14));
    CHECK(t4.prob({4, 2}) == Rational(4, 14));
    CHECK(t4.prob({3, 3}) == Rational(3, 14));
    CHECK(t4.prob({3, 2}) == Rational(2, 14));

    auto t5 = partition_distribution({4, 2}, {3, 1});
    CHECK(t5.entries.size() == 7);
    CHECK(t5.prob({7, 3}) == Rational(1, 10));
    CHECK(t5.prob({7, 2}) == Rational(1, 10));
    CHECK(t5.prob({6, 3}) == Rational(1, 10));
    CHECK(t5.prob({5, 5}) == Rational(1, 10));
    CHECK(t5.prob({5, 4}) == Rational(3, 10));
    CHECK(t5.prob({5, 3}) == Rational(2, 10));
    CHECK(t5.prob({4, 3}) == Rational(1, 10));

    auto t7 = partition_distribution({3, 1, 1}, {3, 1, 1});
    CHECK(t7.total_attachments == 190);
    CHECK(t7.entries.size() == 14);
    CHECK(t7.prob({6, 2, 2}) == Rational(8, 190));
    CHECK(t7.prob({6, 2, 1}) == Rational(8, 190));
    CHECK(t7.prob({6, 1, 1}) == Rational(2, 190));
    CHECK(t7.prob({5, 2, 2}) == Rational(8, 190));
    CHECK(t7.prob({5, 2, 1}) == Rational(8, 190));
    CHECK(t7.prob({4, 4, 2}) == Rational(16, 190));
    CHECK(t7.prob({4, 4, 1}) == Rational(8, 190));
    CHECK(t7.prob({4, 3, 2}) == Rational(48, 190));
    CHECK(t7.prob({4, 3, 1}) == Rational(24, 190));
    CHECK(t7.prob({4, 2, 2}) == Rational(8, 190));
    CHECK(t7.prob({4, 2, 1}) == Rational(8, 190));
    CHECK(t7.prob({3, 3, 2}) == Rational(36, 190));
    CHECK(t7.prob({3, 2, 2}) == Rational(4, 190));
    CHECK(t7.prob({3, 2, 1}) == Rational(4, 190));
}

TEST_CASE("combinatorial definition golden tables") {
    auto t4 = partition_distribution_combinatorial({3, 1}, {2, 1});
    CHECK(t4.prob({4, 2}) == Rational(4, 14));
    CHECK(t4.prob({3, 3}) == Rational(3, 14));

    auto t6 = partition_distribution_combinatorial({4, 2}, {4, 1});
    CHECK(t6.entries.size() == 10);
    CHECK(t6.prob({8, 3}) == Rational(2, 22));
    CHECK(t6.prob({8, 2}) == Rational(2, 22));
    CHECK(t6.prob({7, 3}) == Rational(2, 22));
    CHECK(t6.prob({6, 5}) == Rational(2, 22));
    CHECK(t6.prob({6, 4}) == Rational(4, 22));
    CHECK(t6.prob({6, 3}) == Rational(2, 22));
    CHECK(t6.prob({5, 5}) == Rational(2, 22));
    CHECK(t6.prob({5, 4}) == Rational(3, 22));
    CHECK(t6.prob({5, 3}) == Rational(2, 22));
    CHECK(t6.prob({4, 3}) == Rational(1, 22));
}

TEST_CASE("unit partition has one rotation: matches projected box distribution") {
    for (const auto& lam : oracles::all_partitions(3, 4)) {
        auto d = partition_distribution(lam, {1, 1, 1});
        auto box = distributions::unit_box_distribution(lam);
        std::map<Partition, Rational, DescLex> projected;
        for (const auto& [z, p] : box.entries) {
            projected[to_partition(z)] += p;
        }
        CHECK(d.total_attachments == box.total_attachments);
        REQUIRE(d.entries.size() == projected.size());
        for (const auto& [nu, p] : d.entries) {
            CHECK(p == projected.at(nu));
        }
    }
}

TEST_CASE("definitions agree and are symmetric, parts <= 3, l <= 3") {
    for (std::size_t l = 1; l <= 3; ++l) {
        const auto parts = oracles::all_partitions(l, 3);
        for (const auto& lam : parts) {
            for (const auto& mu : parts) {
                auto geometric = partition_distribution(lam, mu);
                CHECK(geometric.total_mass() == 1);
                CHECK(geometric.entries == partition_distribution(mu, lam).entries);
                auto combinatorial = partition_distribution_combinatorial(lam, mu);
                CHECK(geometric.entries == combinatorial.entries);
                CHECK(geometric.total_attachments == combinatorial.total_attachments);
                for (const auto& [nu, p] : geometric.entries) {
                    CHECK(nu[0] >= std::max(lam[0], mu[0]));
                    CHECK(nu[0] <= lam[0] + mu[0]);
                }
            }
        }
    }
}

TEST_CASE("distribution does not depend on the fixed representative") {
    // re-derive from an arbitrary rotation of lambda instead of the sorted one
    const Partition lam{3, 1, 1}, mu{2, 2, 1};
    auto reference = partition_distribution(lam, mu);
    for (const Box& x : rotations(lam)) {
        std::map<Partition, BigInt, DescLex> counts;
        BigInt total = 0;
        for (const Box& y : rotations(mu)) {
            total += geometry::attachment_count(x, y);
            geometry::for_each_parameter(x, y, [&](const geometry::AttachmentParam& s) {
                ++counts[to_partition(geometry::aggregate_at(x, y, s))];
            });
        }
        CHECK(total == reference.total_attachments);
        for (const auto& [nu, c] : counts) {
            CHECK(Rational(c, total) == reference.prob(nu));
        }
        CHECK(counts.size() == reference.entries.size());
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(partition_distribution({3, 1}, {2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(overlaps(0, 2), std::invalid_argument);
}
