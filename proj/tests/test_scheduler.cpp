#include <cmath>

#include "bellhda/errors.hpp"
#include "bellhda/scheduler.hpp"
#include "doctest.h"

using namespace bellhda;

TEST_CASE("telegraph with zero rate is constant at low") {
    const auto s = telegraph({0.0, 0.1, 0.7, 3, 50.0});
    CHECK(s.num_jumps() == 0);
    CHECK(s.value_at(-5.0) == 0.1);
    CHECK(s.value_at(49.0) == 0.1);
    CHECK(s.level_at(49.0) == 0);
}

TEST_CASE("telegraph jump count follows Poisson statistics") {
    // mu*tau = 1/4 over 2200 tau: mean 550, sd sqrt(550)
    const double mean = 0.25 * 2200.0;
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        const auto s = telegraph({0.25, 0.0, kPi / 4, seed, 2200.0});
        CHECK(std::abs(static_cast<double>(s.num_jumps()) - mean) < 5.0 * std::sqrt(mean));
    }
}

TEST_CASE("telegraph is deterministic, alternates, and rejects negative rates") {
    const TelegraphConfig c{0.5, 0.0, 1.0, 42, 300.0, -20.0};
    const auto s1 = telegraph(c);
    const auto s2 = telegraph(c);
    CHECK(s1.breakpoints() == s2.breakpoints());
    CHECK(s1.breakpoints().front() == -20.0);
    for (std::size_t k = 1; k < s1.num_segments(); ++k) {
        REQUIRE(s1.values()[k] != s1.values()[k - 1]);
        REQUIRE(s1.levels()[k] == 1 - s1.levels()[k - 1]);
    }
    CHECK_THROWS_AS(telegraph({-0.1, 0.0, 1.0, 1, 10.0}), InvalidArgument);
    CHECK_THROWS_AS(telegraph({0.1, 0.0, 1.0, 1, 0.0}), InvalidArgument);
}

TEST_CASE("telegraph dwell fraction tends to one half") {
    // For a symmetric telegraph the indicator has covariance e^{-2 mu |s|} / 4,
    // so the variance of its time average over T is 1 / (4 mu T).
    const double mu = 0.25, duration = 2000.0;
    const double sigma = std::sqrt(1.0 / (4.0 * mu * duration));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = telegraph({mu, 0.0, 1.0, seed, duration});
        double high = 0.0;
        const auto& bp = s.breakpoints();
        for (std::size_t k = 0; k < s.num_segments(); ++k) {
            const double end = k + 1 < bp.size() ? bp[k + 1] : duration;
            if (s.levels()[k] == 1) high += end - bp[k];
        }
        CHECK(std::abs(high / duration - 0.5) < 3.0 * sigma);
    }
}

TEST_CASE("block_schedule assigns one pair per quarter") {
    const auto [a, b] = block_schedule(chsh_pairs(ChshSettings{}), 4.0);
    CHECK(a.value_at(0.0) == 0.0);
    CHECK(a.value_at(1.99) == 0.0);
    CHECK(a.value_at(2.0) == doctest::Approx(kPi / 4));
    CHECK(a.value_at(4.0) == doctest::Approx(kPi / 4));
    CHECK(b.value_at(0.5) == doctest::Approx(kPi / 8));
    CHECK(b.value_at(1.5) == doctest::Approx(3 * kPi / 8));
    CHECK(b.value_at(2.5) == doctest::Approx(kPi / 8));
    CHECK(b.value_at(3.5) == doctest::Approx(3 * kPi / 8));
    // history before t = 0 is pair 0
    CHECK(a.value_at(-10.0) == 0.0);
    CHECK(b.value_at(-10.0) == doctest::Approx(kPi / 8));

    for (int q = 0; q < kNumPairs; ++q) {
        const double t = q + 0.5;
        CHECK(pair_index(a.level_at(t), b.level_at(t)) == q);
        const double begin = a.breakpoints()[q];
        const double end = q + 1 < kNumPairs ? a.breakpoints()[q + 1] : 4.0;
        CHECK(end - begin == 1.0);
    }
    CHECK_THROWS_AS(block_schedule(chsh_pairs(ChshSettings{}), 0.0), InvalidArgument);
}

TEST_CASE("quasi_periodic schedule") {
    const auto s = quasi_periodic({4.0, 0.0, 0.0, 1.0, 5, 40.0});
    CHECK(s.num_jumps() == 10);
    for (std::size_t k = 1; k < s.num_segments(); ++k) {
        CHECK(s.breakpoints()[k] == doctest::Approx(4.0 * k));
    }

    const QuasiPeriodicConfig jittered{4.0, 0.3, 0.0, 1.0, 11, 400.0};
    const auto j1 = quasi_periodic(jittered);
    CHECK(j1.breakpoints() == quasi_periodic(jittered).breakpoints());
    for (std::size_t k = 1; k < j1.num_segments(); ++k) {
        const double gap = j1.breakpoints()[k] - j1.breakpoints()[k - 1];
        CHECK(gap >= 4.0 * 0.7 - 1e-12);
        CHECK(gap <= 4.0 * 1.3 + 1e-12);
    }

    CHECK_THROWS_AS(quasi_periodic({4.0, 1.0, 0.0, 1.0, 1, 40.0}), InvalidArgument);
    CHECK_THROWS_AS(quasi_periodic({4.0, -0.1, 0.0, 1.0, 1, 40.0}), InvalidArgument);
    CHECK_THROWS_AS(quasi_periodic({0.0, 0.0, 0.0, 1.0, 1, 40.0}), InvalidArgument);
}

TEST_CASE("value_at is right-continuous and bounded by the domain") {
    const SettingSignal s({0.0, 5.0}, {0.0, kPi / 4}, {0, 1}, 10.0);
    CHECK(s.value_at(5.0) == doctest::Approx(kPi / 4));
    CHECK(s.value_at(std::nextafter(5.0, 0.0)) == 0.0);
    CHECK(s.value_at(10.0) == doctest::Approx(kPi / 4));
    CHECK_THROWS_AS(s.value_at(10.5), OutOfDomain);

    const auto c = SettingSignal::constant(0.3, 10.0);
    CHECK(c.value_at(-100.0) == 0.3);
    CHECK(c.value_at(7.0) == 0.3);

    CHECK_THROWS_AS(SettingSignal({0.0, 0.0}, {1.0, 2.0}, {0, 1}, 1.0), InvalidArgument);
}

TEST_CASE("SignalCursor agrees with binary-search lookup") {
    const auto s = telegraph({1.0, 0.0, 1.0, 8, 200.0});
    SignalCursor cursor(s);
    for (int k = 0; k <= 20000; ++k) {
        const double t = k * 0.01;
        REQUIRE(cursor.value_at(t) == s.value_at(t));
    }
    // backwards queries are still answered correctly
    CHECK(cursor.value_at(3.0) == s.value_at(3.0));
    CHECK_THROWS_AS(cursor.value_at(201.0), OutOfDomain);
}
