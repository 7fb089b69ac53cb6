#include <cstdlib>

#include "bellhda/config.hpp"
#include "bellhda/errors.hpp"
#include "doctest.h"

using namespace bellhda;

TEST_CASE("parse_config reads keys, comments and blank lines") {
    const auto c = parse_config(
        "# random switching run\n"
        "scenario = random_telegraph\n"
        "\n"
        "gamma = 0.1   # weak tracking\n"
        "mu_tau=0.25\n"
        "mode = sampled\n"
        "error_wrap = none\n"
        "seed = 18446744073709551615\n"
        "a1 = 0.5\n"
        "event_spacing = poisson\n");
    CHECK(c.scenario == Scenario::random_telegraph);
    CHECK(c.gamma == 0.1);
    CHECK(c.mu_tau == 0.25);
    CHECK(c.mode == Mode::sampled);
    CHECK(c.error_wrap == ErrorWrap::none);
    CHECK(c.seed == 18446744073709551615ULL);
    CHECK(c.settings.a1 == 0.5);
    CHECK(c.settings.b1 == doctest::Approx(3 * kPi / 8));
    CHECK(c.event_spacing == EventSpacing::poisson);
    CHECK(c.duration_tau == 2000.0);
}

TEST_CASE("parse_config rejects typos and bad values") {
    CHECK_THROWS_AS(parse_config("gama = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma = one\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma =\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("mode = approximate\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("step_per_tau = 4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("duration_tau = 100\ntransient_tau = 100\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("rate_per_tau = 0\n"), ConfigError);
    try {
        parse_config("gamma = 1\n\nbogus = 2\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("format_config round-trips") {
    RunConfig c;
    c.scenario = Scenario::quasi_periodic;
    c.gamma = 0.123456789012345;
    c.settings.b0 = 0.1;
    c.qp_jitter = 0.2;
    c.trace_decimation = 16;
    const RunConfig back = parse_config(format_config(c));
    CHECK(format_config(back) == format_config(c));
    CHECK(back.gamma == c.gamma);
}

TEST_CASE("BELLHDA_SEED overrides the configured seed") {
    RunConfig c;
    c.seed = 5;
    ::setenv("BELLHDA_SEED", "77", 1);
    apply_env_overrides(c);
    CHECK(c.seed == 77);
    ::setenv("BELLHDA_SEED", "7x", 1);
    CHECK_THROWS_AS(apply_env_overrides(c), ConfigError);
    ::unsetenv("BELLHDA_SEED");
    apply_env_overrides(c);
    CHECK(c.seed == 77);
}

TEST_CASE("load_config reports missing files as config errors") {
    CHECK_THROWS_AS(load_config("/nonexistent/bellhda.conf"), ConfigError);
}
