#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookbasis/bar_drawing.hpp"
#include "hookbasis/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

using namespace hookbasis;

namespace {

BarDrawing make(std::initializer_list<std::array<std::uint32_t, 3>> bars) {
    std::vector<Bar> v;
    for (const auto& b : bars) v.push_back({b[0], b[1], b[2]});
    return BarDrawing(std::move(v));
}

} // namespace

TEST_CASE("bar rule validation") {
    // equal depths must come in decreasing height order
    CHECK_THROWS_AS(make({{0, 1, 0}, {0, 2, 0}}), std::invalid_argument);
    CHECK_NOTHROW(make({{0, 2, 0}, {0, 1, 0}}));
    // a bar left of a deeper bar keeps q+1 blank y-cells
    CHECK_THROWS_AS(make({{0, 1, 1}, {1, 0, 0}}), std::invalid_argument);
    CHECK_NOTHROW(make({{0, 1, 0}, {1, 0, 0}}));
    // crossed_y bounded by the height
    CHECK_THROWS_AS(make({{0, 1, 2}}), std::invalid_argument);

    // multiset check against mu
    auto mu = Partition::parse("2,1");
    CHECK_NOTHROW(BarDrawing({{0, 1, 0}, {1, 0, 0}}, mu));
    CHECK_THROWS_AS(BarDrawing({{0, 2, 0}, {1, 0, 0}}, mu), std::invalid_argument);
}

TEST_CASE("enumeration fixtures") {
    SUBCASE("mu = (2,1): three drawings") {
        auto ds = enumerate_bars(Partition::parse("2,1"));
        REQUIRE(ds.size() == 3);
        CHECK(ds[0] == make({{0, 1, 0}, {1, 0, 0}})); // A before B forces A blank
        CHECK(ds[1] == make({{1, 0, 0}, {0, 1, 0}})); // B before A leaves A free
        CHECK(ds[2] == make({{1, 0, 0}, {0, 1, 1}}));
    }
    SUBCASE("mu = (1,1): a single crossed bar") {
        auto ds = enumerate_bars(Partition::parse("1,1"));
        REQUIRE(ds.size() == 1);
        CHECK(ds[0] == make({{1, 0, 0}}));
    }
    SUBCASE("mu = (3): six drawings, heights ordered 2 then 1") {
        auto ds = enumerate_bars(Partition::parse("3"));
        REQUIRE(ds.size() == 6);
        CHECK(ds[0] == make({{0, 2, 0}, {0, 1, 0}}));
        CHECK(ds[1] == make({{0, 2, 0}, {0, 1, 1}}));
        CHECK(ds[2] == make({{0, 2, 1}, {0, 1, 0}}));
        CHECK(ds[3] == make({{0, 2, 1}, {0, 1, 1}}));
        CHECK(ds[4] == make({{0, 2, 2}, {0, 1, 0}}));
        CHECK(ds[5] == make({{0, 2, 2}, {0, 1, 1}}));
    }
    SUBCASE("mu = (1): the empty drawing") {
        auto ds = enumerate_bars(Partition::parse("1"));
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].size() == 0);
    }
}

TEST_CASE("drawing count equals the conjugate factorial quotient") {
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            INFO("mu = ", mu.to_string());
            CHECK(enumerate_bars(mu).size() == factorial_quotient(mu.conjugate()));
        }
}

TEST_CASE("bar operators for mu = (2,1)") {
    auto mu = Partition::parse("2,1");
    auto dm = delta(mu);
    auto ds = enumerate_bars(mu);
    REQUIRE(ds.size() == 3);

    SUBCASE("[A blank, B]: S = dx2, M_T = y1, row y1 - y3") {
        auto ops = bar_operators(ds[0], 3);
        CHECK(ops.s_op == Monomial::variable(3, Axis::X, 2));
        CHECK(ops.m_t == Monomial::variable(3, Axis::Y, 1));
        Polynomial row = apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
        CHECK(row.to_string() == "1*y1 - 1*y3");
        auto [lead, coeff] = row.leading_term();
        CHECK(lead == ops.m_t);
        CHECK(coeff == Rational(1));
    }
    SUBCASE("[B, A blank]: S = dx1, M_T = y2, row y3 - y2") {
        auto ops = bar_operators(ds[1], 3);
        CHECK(ops.s_op == Monomial::variable(3, Axis::X, 1));
        CHECK(ops.m_t == Monomial::variable(3, Axis::Y, 2));
        Polynomial row = apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
        CHECK(row.to_string() == "-1*y2 + 1*y3");
        CHECK(row.leading_monomial() == ops.m_t); // up to sign
        CHECK(row.leading_term().second == Rational(-1));
    }
    SUBCASE("[B, A crossed]: S = dx1 dy2, M_T = 1, row -1") {
        auto ops = bar_operators(ds[2], 3);
        Monomial expected(3);
        expected.set_exp(Axis::X, 1, 1);
        expected.set_exp(Axis::Y, 2, 1);
        CHECK(ops.s_op == expected);
        CHECK(ops.m_t.is_unit());
        Polynomial row = apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
        CHECK(row.to_string() == "-1");
    }
    SUBCASE("bar count must be n - 1") {
        CHECK_THROWS_AS(bar_operators(ds[0], 5), std::invalid_argument);
    }
}

TEST_CASE("rows have x-degree zero for all mu with n <= 6") {
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto dm = delta(mu);
            for_each_bar_drawing(mu, [&](const BarDrawing& d) {
                auto ops = bar_operators(d, n);
                // total x-order matches the x-homogeneity of delta
                CHECK(ops.s_op.degree(Axis::X) == nmu(mu));
                Polynomial row =
                    apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
                CHECK_FALSE(row.is_zero());
                CHECK(row.degree(Axis::X) == 0);
            });
        }
}

TEST_CASE("leading monomials are the distinct M_T, all mu with n <= 5") {
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto dm = delta(mu);
            std::set<Monomial, LexLess> seen;
            for_each_bar_drawing(mu, [&](const BarDrawing& d) {
                auto ops = bar_operators(d, n);
                Polynomial row =
                    apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
                REQUIRE_FALSE(row.is_zero());
                CHECK(row.leading_monomial() == ops.m_t);
                CHECK(seen.insert(ops.m_t).second);
            });
        }
}

TEST_CASE("triangularity in lex-decreasing M_T order") {
    for (const char* name : {"2,2", "3,1"}) {
        auto mu = Partition::parse(name);
        auto dm = delta(mu);
        std::vector<std::pair<Monomial, Polynomial>> rows;
        for (const auto& d : enumerate_bars(mu)) {
            auto ops = bar_operators(d, mu.n());
            rows.emplace_back(
                ops.m_t, apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm));
        }
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return LexGreater{}(a.first, b.first); });
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                CHECK(rows[j].second.coeff(rows[i].first) == Rational(0));
    }
}

TEST_CASE("verify_mzero certificates") {
    SUBCASE("mu = (2,1)") {
        auto report = verify_mzero(Partition::parse("2,1"));
        CHECK(report.expected == 3);
        CHECK(report.count == 3);
        CHECK(report.rank_report.rank == 3);
        CHECK(report.ok);
    }
    SUBCASE("single-column shapes have a one-element basis") {
        for (unsigned n = 2; n <= 4; ++n) {
            auto report = verify_mzero(Partition(std::vector<unsigned>(n, 1)));
            CHECK(report.expected == 1);
            CHECK(report.count == 1);
            CHECK(report.rank_report.rank == 1);
            CHECK(report.ok);
        }
    }
    SUBCASE("mu = (2,2)") {
        auto report = verify_mzero(Partition::parse("2,2"));
        CHECK(report.expected == 6);
        CHECK(report.count == 6);
        CHECK(report.rank_report.rank == 6);
        CHECK(report.ok);
    }
    SUBCASE("every partition with n <= 5 verifies") {
        for (unsigned n = 1; n <= 5; ++n)
            for (const auto& mu : partitions_of(n)) {
                auto report = verify_mzero(mu);
                INFO("mu = ", mu.to_string());
                CHECK(report.ok);
            }
    }
    SUBCASE("bound enforcement") {
        CHECK_THROWS_AS(verify_mzero(Partition::parse("8")), ResourceError);
    }
    SUBCASE("JSON mirrors the five checks") {
        auto j = verify_mzero(Partition::parse("2,1")).to_json();
        CHECK(j["ok"] == true);
        CHECK(j["count"] == 3);
        CHECK(j["expected"] == 3);
        CHECK(j["checks"]["count"] == true);
        CHECK(j["checks"]["x_degree_zero"] == true);
        CHECK(j["checks"]["leading_matches"] == true);
        CHECK(j["checks"]["mt_distinct"] == true);
        CHECK(j["checks"]["rank"] == true);
        CHECK(j["rank_report"]["rank"] == 3);
    }
}

TEST_CASE("bar drawing JSON round trip") {
    for (const auto& d : enumerate_bars(Partition::parse("2,2"))) {
        CHECK(BarDrawing::from_json(d.to_json()) == d);
    }
    CHECK(make({{0, 1, 0}, {1, 0, 0}}).to_json().dump() ==
          R"({"bars":[[0,1,0],[1,0,0]]})");
    CHECK_THROWS_AS(BarDrawing::from_json(nlohmann::json{{"bars", {{1, 2}}}}),
                    std::invalid_argument);
}
