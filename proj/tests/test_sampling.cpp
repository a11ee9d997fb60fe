#include <doctest.h>

#include <cmath>
#include <sstream>

#include "chirogrid/sampling.hpp"

using namespace chirogrid;

TEST_CASE("identical seeds give identical configurations") {
    SamplerConfig cfg{Domain::Ball, 3, 50, 96, 0xfeedULL};
    PointConfig a = sample_config(cfg);
    PointConfig b = sample_config(cfg);
    CHECK(a.points == b.points);

    cfg.seed ^= 1;
    PointConfig c = sample_config(cfg);
    CHECK(a.points != c.points);
}

TEST_CASE("ball samples satisfy the norm constraint exactly") {
    SamplerConfig cfg{Domain::Ball, 4, 200, 96, 7};
    PointConfig s = sample_config(cfg);
    for (const auto& p : s.points) {
        Rat norm2 = 0;
        for (const auto& x : p) norm2 += x * x;
        CHECK(norm2 <= 1);
    }
}

TEST_CASE("ball sampling is refused for d >= 5") {
    SamplerConfig cfg{Domain::Ball, 5, 10, 96, 0};
    CHECK_THROWS_AS(sample_config(cfg), std::invalid_argument);
}

TEST_CASE("coordinates are dyadic with denominator dividing 2^B") {
    SamplerConfig cfg{Domain::Cube, 2, 100, 40, 3};
    Int pow = Int(1) << 40;
    for (const auto& p : sample_config(cfg).points)
        for (const auto& x : p) CHECK(pow % x.get_den() == 0);
}

TEST_CASE("cube coordinate means are near zero") {
    SamplerConfig cfg{Domain::Cube, 2, 10000, 64, 11};
    PointConfig s = sample_config(cfg);
    // var of uniform on [-1,1] is 1/3
    double sigma = 1.0 / std::sqrt(3.0 * 10000);
    for (int c = 0; c < 2; ++c) {
        double mean = 0;
        for (const auto& p : s.points) mean += p[c].get_d();
        mean /= 10000;
        CHECK(std::fabs(mean) < 3 * sigma);
    }
}

TEST_CASE("text format roundtrip and exact rational parsing") {
    SamplerConfig cfg{Domain::Ball, 2, 20, 96, 5};
    PointConfig s = sample_config(cfg);
    std::stringstream ss;
    save_config(ss, s);
    PointConfig back = load_config(ss);
    CHECK(back.d == s.d);
    CHECK(back.n == s.n);
    CHECK(back.points == s.points);

    std::stringstream frac("# comment\npointset 2 1\n1/3 -2/7\n");
    PointConfig f = load_config(frac);
    CHECK(f.points[0][0] == Rat(1, 3));
    CHECK(f.points[0][1] == Rat(-2, 7));
}

TEST_CASE("parse errors carry line numbers") {
    std::stringstream bad("pointset 2 1\n1/3\n");
    try {
        load_config(bad);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::stringstream garbage("pointset 2 1\n1/3 x\n");
    CHECK_THROWS_AS(load_config(garbage), std::runtime_error);

    std::stringstream missing("pointset 2 3\n0 0\n");
    CHECK_THROWS_AS(load_config(missing), std::runtime_error);

    std::stringstream noheader("0 0\n");
    CHECK_THROWS_AS(load_config(noheader), std::runtime_error);
}
