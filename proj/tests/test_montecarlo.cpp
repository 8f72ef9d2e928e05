#include <doctest.h>

#include "boxagg/distributions.hpp"
#include "boxagg/montecarlo.hpp"
#include "boxagg/partitions.hpp"

using namespace boxagg;
using namespace boxagg::montecarlo;

TEST_CASE("rng determinism") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 1000; ++i) {
        const auto va = a.next();
        if (va != b.next()) all_equal = false;
        if (va != c.next()) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("bounded draws stay in range") {
    Rng rng(7);
    for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 17ULL, 1000ULL}) {
        for (int i = 0; i < 200; ++i) {
            CHECK(rng.below(bound) < bound);
        }
    }
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("1-D sampling always yields the attached segment") {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_attachment({5}, {3}, rng) == Box{8});
    }
}

TEST_CASE("identical config reproduces the histogram bit for bit") {
    const SampleConfig cfg{20000, 987654321};
    auto first = estimate_box_distribution({1, 3}, {1, 2}, cfg);
    auto second = estimate_box_distribution({1, 3}, {1, 2}, cfg);
    CHECK(first.counts == second.counts);
    CHECK(first.total == second.total);

    std::uint64_t total = 0;
    for (const auto& [z, c] : first.counts) total += c;
    CHECK(total == first.total);
}

TEST_CASE("single trial gives a single-count histogram") {
    auto emp = estimate_box_distribution({2, 2}, {1, 1}, {1, 5});
    CHECK(emp.total == 1);
    REQUIRE(emp.counts.size() == 1);
    CHECK(emp.counts.begin()->second == 1);
}

TEST_CASE("empirical frequencies converge to the exact distribution") {
    const Box x{1, 3}, y{1, 2};
    const auto exact = distributions::box_distribution(x, y);
    auto coarse = estimate_box_distribution(x, y, {10000, 2718});
    auto fine = estimate_box_distribution(x, y, {100000, 2718});
    const double tv_coarse = total_variation(coarse, exact.entries);
    const double tv_fine = total_variation(fine, exact.entries);
    CHECK(tv_coarse < 0.05);
    CHECK(tv_fine < 0.01);
}

TEST_CASE("unit square self-attachment frequencies") {
    auto emp = estimate_box_distribution({1, 1}, {1, 1}, {1000000, 31415});
    const double n = static_cast<double>(emp.total);
    CHECK(std::abs(emp.counts[{2, 2}] / n - 0.5) < 0.005);
    CHECK(std::abs(emp.counts[{2, 1}] / n - 0.25) < 0.005);
    CHECK(std::abs(emp.counts[{1, 2}] / n - 0.25) < 0.005);
}

TEST_CASE("partition mode matches the exact partition distribution") {
    const Partition lam{3, 1}, mu{2, 1};
    const auto exact = partitions::partition_distribution(lam, mu);
    auto emp = estimate_partition_distribution(lam, mu, {1000000, 1234});
    CHECK(total_variation(emp, exact.entries) < 0.005);
}

TEST_CASE("sampled parameter points are uniform on the boundary") {
    // chi-squared against the uniform law on T for (2,3)+(1,2);
    // 16 cells, 15 degrees of freedom, critical value 37.697 at 1e-3
    const Box x{2, 3}, y{1, 2};
    std::map<geometry::AttachmentParam, std::uint64_t> counts;
    Rng rng(99);
    const std::uint64_t trials = 1000000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++counts[sample_parameter(x, y, rng)];
    }
    const auto cells = geometry::parameter_set(x, y);
    REQUIRE(cells.size() == 16);
    const double expected = static_cast<double>(trials) / 16.0;
    double chi2 = 0;
    for (const auto& s : cells) {
        const double diff = static_cast<double>(counts[s]) - expected;
        chi2 += diff * diff / expected;
    }
    CHECK(chi2 < 37.697);
}
