#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookbasis/errors.hpp"
#include "hookbasis/partition.hpp"
#include "hookbasis/rng.hpp"

#include <algorithm>

using namespace hookbasis;

namespace {

/// Swaps the variable pair (x_i, y_i) <-> (x_j, y_j) in every term.
Polynomial swap_variables(const Polynomial& p, std::size_t i, std::size_t j) {
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial s = m;
        auto xi = s.exp(Axis::X, i), xj = s.exp(Axis::X, j);
        s.set_exp(Axis::X, i, xj);
        s.set_exp(Axis::X, j, xi);
        auto yi = s.exp(Axis::Y, i), yj = s.exp(Axis::Y, j);
        s.set_exp(Axis::Y, i, yj);
        s.set_exp(Axis::Y, j, yi);
        out.add_term(s, c);
    }
    return out;
}

/// Product formula oracle for the Vandermonde determinant in one axis.
Polynomial vandermonde(std::size_t n, Axis axis) {
    Polynomial v = Polynomial::constant(n, 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Polynomial factor(n);
            factor.add_term(Monomial::variable(n, axis, j), 1);
            factor.add_term(Monomial::variable(n, axis, i), -1);
            v = v * factor;
        }
    return v;
}

} // namespace

TEST_CASE("partition validation and parsing") {
    CHECK(Partition::parse("3,1,1").parts() == std::vector<unsigned>{3, 1, 1});
    CHECK(Partition::parse("3,1,1").to_string() == "3,1,1");
    CHECK(Partition::parse("5").n() == 5);

    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,1,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<unsigned>{}), std::invalid_argument);
}

TEST_CASE("hooks and conjugates") {
    CHECK(Partition::parse("3,1,1").is_hook());
    CHECK(Partition::parse("4").is_hook());
    CHECK(Partition::parse("1,1,1").is_hook());
    CHECK_FALSE(Partition::parse("2,2").is_hook());

    CHECK(Partition::parse("3,1,1").hook_arm() == 2);
    CHECK(Partition::parse("3,1,1").hook_leg() == 2);
    CHECK(hook_partition(2, 2) == Partition::parse("3,1,1"));

    CHECK(Partition::parse("3,1").conjugate() == Partition::parse("2,1,1"));
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("biexponents") {
    using BL = BiexponentList;
    CHECK(biexponents(Partition::parse("1,1")) == BL{{0, 0}, {1, 0}});
    CHECK(biexponents(Partition::parse("2,1")) == BL{{0, 0}, {0, 1}, {1, 0}});
    CHECK(biexponents(Partition::parse("3,1,1")) ==
          BL{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
}

TEST_CASE("delta fixtures") {
    CHECK(delta(Partition::parse("1,1")).to_string() == "-1*x1 + 1*x2");
    CHECK(delta(Partition::parse("2")).to_string() == "-1*y1 + 1*y2");
    CHECK(delta(Partition::parse("2,1")).to_string() ==
          "-1*x1*y2 + 1*x1*y3 + 1*x2*y1 - 1*x2*y3 - 1*x3*y1 + 1*x3*y2");
    CHECK(delta(Partition::parse("1")) == Polynomial::constant(1, 1));
}

TEST_CASE("delta structure for all small partitions") {
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            Polynomial dm = delta(mu);
            CHECK(dm.term_count() == factorial(n));
            for (const auto& [m, c] : dm.terms()) {
                CHECK((c == Rational(1) || c == Rational(-1)));
                // bihomogeneous: x-degree n(mu), y-degree n(mu')
                CHECK(m.degree(Axis::X) == nmu(mu));
                CHECK(m.degree(Axis::Y) == nmu(mu.conjugate()));
            }
        }
    }
}

TEST_CASE("delta of columns and rows is a Vandermonde determinant") {
    for (unsigned n = 2; n <= 6; ++n) {
        std::vector<unsigned> column(n, 1);
        CHECK(delta(Partition(column)) == vandermonde(n, Axis::X));
        CHECK(delta(Partition({n})) == vandermonde(n, Axis::Y));
    }
}

TEST_CASE("delta is antisymmetric under variable transpositions") {
    Rng rng(default_seed);
    for (unsigned n = 2; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            Polynomial dm = delta(mu);
            std::size_t i = 1 + rng.below(n);
            std::size_t j = 1 + rng.below(n);
            while (j == i) j = 1 + rng.below(n);
            CHECK(swap_variables(dm, i, j) == -dm);
        }
    }
}

TEST_CASE("delta bound") {
    CHECK_THROWS_AS(delta(Partition::parse("9,1,1"), 8), ResourceError);
}

TEST_CASE("nmu") {
    CHECK(nmu(Partition::parse("5")) == 0);
    CHECK(nmu(Partition::parse("1,1,1")) == 3);
    CHECK(nmu(Partition::parse("2,1")) == 1);
}

TEST_CASE("factorial quotient") {
    CHECK(factorial_quotient(Partition::parse("2,1")) == 3);
    CHECK(factorial_quotient(Partition::parse("1,1,1")) == 6);
    CHECK(factorial_quotient(Partition::parse("3,2,1")) == 60);
}

TEST_CASE("partitions_of enumerates everything once") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(7).size() == 15);
    auto all = partitions_of(5);
    for (const auto& mu : all) CHECK(mu.n() == 5);
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) CHECK(!(all[a] == all[b]));
}
