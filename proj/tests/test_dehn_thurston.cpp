#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "aic/dehn_thurston.hpp"
#include "support/oracles.hpp"

using namespace aic;

namespace {

DTMulticurve genus2(std::vector<std::int64_t> m, std::vector<std::int64_t> t) {
    return make_multicurve(make_surface(2, 0), std::move(m), std::move(t));
}

LatticeColoring two_color_sectors(const std::string& pp, const std::string& pm,
                                  const std::string& mp, const std::string& mm,
                                  std::map<std::vector<std::int64_t>, Color> exceptions = {}) {
    return make_lattice_coloring(
        2, {{"++", pp}, {"+-", pm}, {"-+", mp}, {"--", mm}}, std::move(exceptions));
}

} // namespace

TEST_CASE("surface validation") {
    CHECK(make_surface(1, 0).pants_curves() == 0);
    CHECK(make_surface(2, 0).pants_curves() == 3);
    CHECK(make_surface(2, 2).pants_curves() == 5);
    CHECK_THROWS_AS(make_surface(1, 1), InvalidSurfaceError);
    CHECK_THROWS_AS(make_surface(0, 3), InvalidSurfaceError);
    CHECK_THROWS_AS(make_multicurve(make_surface(2, 0), {1, 2}, {0, 0}), Error);
    CHECK_THROWS_AS(make_multicurve(make_surface(2, 0), {-1, 0, 0}, {0, 0, 0}), Error);
}

TEST_CASE("twist adds m to t on one coordinate") {
    const auto d = genus2({3, 0, 1}, {5, 0, 7});
    CHECK(twist(d, 1, 2) == genus2({3, 0, 1}, {11, 0, 7}));
    CHECK(twist(d, 2, 100) == d);
    CHECK(twist(twist(d, 1, 4), 3, -2) == twist(twist(d, 3, -2), 1, 4));
    CHECK_THROWS_AS(twist(d, 0, 1), IndexOutOfRangeError);
    CHECK_THROWS_AS(twist(d, 4, 1), IndexOutOfRangeError);
}

TEST_CASE("triviality of a twist is intersection zero") {
    const auto d = genus2({0, 1, 5}, {7, -2, 0});
    CHECK(acts_trivially(d, 1));
    CHECK(!acts_trivially(d, 2));
    CHECK(is_interesting(2, d));
    CHECK(!is_interesting(1, d));
    for (int k = 1; k <= 3; ++k)
        CHECK(acts_trivially(d, k) == (twist(d, k, 1) == d));
}

TEST_CASE("twist strings") {
    const auto d = genus2({2, 0, 0}, {0, 0, 0});
    const auto window = twist_string(d, 1, 0, 3);
    REQUIRE(window.size() == 4);
    for (std::size_t i = 0; i < window.size(); ++i)
        CHECK(window[i].t[0] == static_cast<std::int64_t>(2 * i));

    const auto fixed = twist_string(genus2({0, 1, 1}, {7, 0, 0}), 1, -5, 5);
    for (const auto& e : fixed)
        CHECK(e == fixed.front());

    const auto moving = twist_string(genus2({5, 0, 0}, {3, 0, 0}), 1, -50, 50);
    std::set<std::int64_t> values;
    for (const auto& e : moving)
        values.insert(e.t[0]);
    CHECK(values.size() == 101);

    CHECK_THROWS_AS(twist_string(d, 1, 3, 0), Error);
}

TEST_CASE("twist engine properties") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::int64_t> m_dist(0, 20), t_dist(-50, 50), e_dist(-100, 100);
    for (int trial = 0; trial < 500; ++trial) {
        const int genus = 2 + static_cast<int>(rng() % 2);
        const int boundary = static_cast<int>(rng() % 3);
        const int n = 3 * genus + boundary - 3;
        std::vector<std::int64_t> m, t;
        for (int i = 0; i < n; ++i) {
            m.push_back(m_dist(rng));
            t.push_back(t_dist(rng));
        }
        const auto d = make_multicurve(make_surface(genus, boundary), m, t);
        const int k = 1 + static_cast<int>(rng() % n);
        const std::int64_t a = e_dist(rng), b = e_dist(rng);
        CHECK(twist(d, k, 0) == d);
        CHECK(twist(d, k, a + b) == twist(twist(d, k, a), k, b));
        const int k2 = 1 + static_cast<int>(rng() % n);
        if (k2 != k)
            CHECK(twist(twist(d, k, a), k2, b) == twist(twist(d, k2, b), k, a));
    }
}

TEST_CASE("commuting twists embed a lattice") {
    const auto d = genus2({1, 1, 0}, {0, 0, 4});
    const auto lattice = lattice_from_twists(d, {1, 2});
    CHECK(lattice.dimension() == 2);
    const std::vector<std::int64_t> exps{3, 4};
    CHECK(lattice.at(exps) == genus2({1, 1, 0}, {3, 4, 4}));

    std::set<std::vector<std::int64_t>> images;
    for (std::int64_t x = -10; x <= 10; ++x)
        for (std::int64_t y = -10; y <= 10; ++y) {
            const std::vector<std::int64_t> e{x, y};
            images.insert(lattice.at(e).t);
        }
    CHECK(images.size() == 441);

    // One axis reduces to the string window.
    const auto line = lattice_from_twists(d, {2});
    const auto window = twist_string(d, 2, -3, 3);
    for (std::int64_t i = -3; i <= 3; ++i) {
        const std::vector<std::int64_t> e{i};
        CHECK(line.at(e) == window[static_cast<std::size_t>(i + 3)]);
    }

    CHECK_THROWS_AS(lattice_from_twists(d, {1, 3}), NotInterestingError);
    CHECK_THROWS_AS(lattice_from_twists(d, {1, 1}), Error);
    CHECK_THROWS_AS(lattice_from_twists(d, {1, 9}), IndexOutOfRangeError);
}

TEST_CASE("shift defects classify exactly") {
    SUBCASE("constant background with exceptions") {
        const auto c = two_color_sectors("red", "red", "red", "red",
                                         {{{3, -2}, "blue"}, {{0, 0}, "blue"}, {{5, 5}, "blue"}});
        for (int axis = 1; axis <= 2; ++axis) {
            const auto d = shift_defect(c, axis);
            REQUIRE(d.finite);
            CHECK(d.points.size() <= 6);
            for (const auto& z : d.points) {
                std::vector<std::int64_t> shifted = z;
                shifted[static_cast<std::size_t>(axis - 1)] += 1;
                CHECK(color_at(c, z) != color_at(c, shifted));
            }
        }
    }
    SUBCASE("left/right split is infinite along axis 1 only") {
        const auto c = two_color_sectors("blue", "blue", "red", "red");
        CHECK(!shift_defect(c, 1).finite);
        CHECK(shift_defect(c, 2).finite);
    }
    SUBCASE("top/bottom split is finite along axis 1") {
        const auto c = two_color_sectors("red", "blue", "red", "blue");
        const auto d = shift_defect(c, 1);
        REQUIRE(d.finite);
        CHECK(d.points.empty());
        CHECK(!shift_defect(c, 2).finite);
    }
    SUBCASE("one dimension is always finite") {
        const auto c = make_lattice_coloring(1, {{"+", "red"}, {"-", "blue"}}, {});
        const auto d = shift_defect(c, 1);
        REQUIRE(d.finite);
        CHECK(d.points == std::vector<std::vector<std::int64_t>>{{-1}});
    }
    CHECK_THROWS_AS(shift_defect(two_color_sectors("r", "r", "r", "r"), 3),
                    IndexOutOfRangeError);
}

TEST_CASE("futures and pasts") {
    const auto noisy = two_color_sectors("red", "red", "red", "red",
                                         {{{1, 2}, "blue"}, {{-4, 0}, "green"}});
    for (int axis = 1; axis <= 2; ++axis) {
        CHECK(future(noisy, axis) == "red");
        CHECK(past(noisy, axis) == "red");
    }

    const auto split = two_color_sectors("blue", "blue", "red", "red");
    CHECK_THROWS_AS(future(split, 1), NotAlmostInvariantError);
    CHECK_THROWS_AS(past(split, 2), NotAlmostInvariantError);
}

TEST_CASE("future_past_check walks the connecting path") {
    const auto good = two_color_sectors("red", "red", "red", "red",
                                        {{{2, 2}, "blue"}, {{-1, 3}, "blue"}});
    const auto report = future_past_check(good);
    CHECK(report.hypotheses_ok);
    CHECK(report.pass);
    CHECK(report.futures == std::vector<Color>{"red", "red"});
    CHECK(report.pasts == std::vector<Color>{"red", "red"});
    CHECK(report.region_lo == std::vector<std::int64_t>{-4, -4});
    CHECK(report.region_hi == std::vector<std::int64_t>{4, 4});

    const auto bad = future_past_check(two_color_sectors("blue", "blue", "red", "red"));
    CHECK(!bad.hypotheses_ok);
    CHECK(bad.failed_axes == std::vector<int>{1});
    CHECK(!bad.pass);

    CHECK_THROWS_AS(future_past_check(make_lattice_coloring(1, {{"+", "r"}, {"-", "r"}}, {})), Error);
}

TEST_CASE("exhaustive two-color sector census matches the window oracle") {
    const std::vector<Color> palette{"red", "blue"};
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::int64_t> coord(-5, 5);
    for (int mask = 0; mask < 16; ++mask) {
        for (int noise = 0; noise < 4; ++noise) {
            std::map<std::vector<std::int64_t>, Color> exceptions;
            for (int i = 0; i < noise * 2; ++i)
                exceptions[{coord(rng), coord(rng)}] = palette[rng() % 2];
            const auto c = two_color_sectors(palette[mask & 1], palette[(mask >> 1) & 1],
                                             palette[(mask >> 2) & 1], palette[(mask >> 3) & 1],
                                             exceptions);

            bool all_finite = true;
            for (int axis = 1; axis <= 2; ++axis) {
                const auto scan = testing::window_scan_defect(c, axis);
                const auto structural = shift_defect(c, axis);
                CHECK(structural.finite == scan.finite);
                if (structural.finite) {
                    // The window sees exactly the structural set.
                    CHECK(scan.points == structural.points);
                } else {
                    all_finite = false;
                }
            }

            const bool sectors_equal = ((mask & 1) == ((mask >> 1) & 1)) &&
                                       ((mask & 1) == ((mask >> 2) & 1)) &&
                                       ((mask & 1) == ((mask >> 3) & 1));
            CHECK(all_finite == sectors_equal);

            const auto report = future_past_check(c);
            CHECK(report.hypotheses_ok == all_finite);
            CHECK(report.pass == all_finite);
            if (all_finite) {
                for (int axis = 0; axis < 2; ++axis)
                    CHECK(report.futures[axis] == report.pasts[axis]);
                const auto common = common_future_check(c);
                CHECK(common.pass);
                CHECK(common.common_future == report.futures[0]);
            } else {
                CHECK_THROWS_AS(common_future_check(c), NotAlmostInvariantError);
            }
        }
    }
}

TEST_CASE("coordinate text round trips") {
    const auto d = genus2({3, 0, 1}, {5, 0, -7});
    CHECK(to_string(d) == "2,0;3:5,0:0,1:-7");
    CHECK(parse_dt(to_string(d)) == d);
    CHECK(parse_dt("1,0;") == make_multicurve(make_surface(1, 0), {}, {}));
    CHECK(to_string(parse_dt("1,0;")) == "1,0;");

    CHECK_THROWS_AS(parse_dt("2,0;3:5"), ParseError);      // wrong pair count
    CHECK_THROWS_AS(parse_dt("1,1;"), InvalidSurfaceError); // bad surface
    CHECK_THROWS_AS(parse_dt("2,0;3:5,0:0,-1:0"), ParseError); // negative m
    CHECK_THROWS_AS(parse_dt("no semicolon"), ParseError);
    CHECK_THROWS_AS(parse_dt("2,0;3:5,x:0,0:0"), ParseError);
}

TEST_CASE("lattice coloring JSON round trips and is strict") {
    const auto c = two_color_sectors("red", "red", "red", "blue", {{{3, -2}, "red"}});
    const std::string text = emit_lattice_coloring(c);
    CHECK(text ==
          "{\"d\":2,\"exceptions\":{\"3,-2\":\"red\"},\"sectors\":{\"++\":\"red\",\"+-\":"
          "\"red\",\"-+\":\"red\",\"--\":\"blue\"}}\n");
    const auto back = parse_lattice_coloring(text);
    CHECK(back.dim == c.dim);
    CHECK(back.sectors == c.sectors);
    CHECK(back.exceptions == c.exceptions);

    CHECK_THROWS_AS(parse_lattice_coloring("{}"), ParseError);
    CHECK_THROWS_AS(parse_lattice_coloring(R"({"d":2,"sectors":{},"exceptions":{}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_lattice_coloring(
                        R"({"d":1,"sectors":{"+":"r","-":"r"},"exceptions":{"1,2":"b"}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_lattice_coloring(
                        R"({"d":1,"sectors":{"+":"r","-":"r"},"exceptions":{},"y":1})"),
                    ParseError);
}
