#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookbasis/polynomial.hpp"
#include "hookbasis/rng.hpp"

#include <vector>

using namespace hookbasis;

namespace {

Monomial mono(std::size_t n, std::initializer_list<std::uint32_t> xs,
              std::initializer_list<std::uint32_t> ys) {
    Monomial m(n);
    std::size_t i = 1;
    for (auto e : xs) m.set_exp(Axis::X, i++, e);
    i = 1;
    for (auto e : ys) m.set_exp(Axis::Y, i++, e);
    return m;
}

Polynomial x(std::size_t n, std::size_t i) {
    return Polynomial::from_monomial(Monomial::variable(n, Axis::X, i));
}
Polynomial y(std::size_t n, std::size_t i) {
    return Polynomial::from_monomial(Monomial::variable(n, Axis::Y, i));
}

/// Hand-expanded delta for (1,1): x2 - x1. Kept independent of the
/// shapes module on purpose.
Polynomial delta_11_fixture() {
    Polynomial p(2);
    p.add_term(Monomial::variable(2, Axis::X, 2), 1);
    p.add_term(Monomial::variable(2, Axis::X, 1), -1);
    return p;
}

/// Hand-expanded 3x3 determinant of rows (1, y_i, x_i):
/// x2*y1 - x3*y1 - x1*y2 + x3*y2 + x1*y3 - x2*y3.
Polynomial delta_21_fixture() {
    Polynomial p(3);
    auto xy = [](std::size_t xi, std::size_t yi) {
        Monomial m(3);
        m.set_exp(Axis::X, xi, 1);
        m.set_exp(Axis::Y, yi, 1);
        return m;
    };
    p.add_term(xy(2, 1), 1);
    p.add_term(xy(3, 1), -1);
    p.add_term(xy(1, 2), -1);
    p.add_term(xy(3, 2), 1);
    p.add_term(xy(1, 3), 1);
    p.add_term(xy(2, 3), -1);
    return p;
}

Polynomial random_poly(Rng& rng, std::size_t n, unsigned max_deg, std::size_t max_terms) {
    Polynomial p(n);
    std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(n);
        unsigned budget = max_deg;
        for (std::size_t i = 1; i <= n; ++i) {
            unsigned ex = static_cast<unsigned>(rng.below(budget + 1));
            budget -= ex;
            m.set_exp(Axis::X, i, ex);
            unsigned ey = static_cast<unsigned>(rng.below(budget + 1));
            budget -= ey;
            m.set_exp(Axis::Y, i, ey);
        }
        long c = static_cast<long>(rng.range(1, 9));
        if (rng.coin()) c = -c;
        p.add_term(m, c);
    }
    return p;
}

} // namespace

TEST_CASE("lex order on monomials") {
    CHECK(lex_compare(mono(2, {1, 0}, {0, 0}), mono(2, {0, 0}, {1, 0})) > 0); // x1 > y1
    CHECK(lex_compare(mono(3, {0, 0, 0}, {0, 1, 0}), mono(3, {0, 0, 0}, {0, 0, 1})) >
          0); // y2 > y3
    // tie on x, decided at y1: x1*y1 > x1*y2
    CHECK(lex_compare(mono(2, {1, 0}, {1, 0}), mono(2, {1, 0}, {0, 1})) > 0);
    CHECK(lex_compare(mono(2, {1, 0}, {1, 0}), mono(2, {1, 0}, {1, 0})) == 0);
    CHECK_THROWS_AS(lex_compare(Monomial(2), Monomial(3)), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
    std::size_t n = 2;
    SUBCASE("cancellation") {
        Polynomial p = x(n, 1) - y(n, 1);
        Polynomial q = p + y(n, 1);
        CHECK(q == x(n, 1));
    }
    SUBCASE("difference of squares") {
        Polynomial p = (x(n, 1) + x(n, 2)) * (x(n, 1) - x(n, 2));
        Polynomial expected(n);
        expected.add_term(mono(n, {2, 0}, {0, 0}), 1);
        expected.add_term(mono(n, {0, 2}, {0, 0}), -1);
        CHECK(p == expected);
    }
    SUBCASE("scale by zero clears") {
        Polynomial p = x(n, 1) * Rational(0);
        CHECK(p.is_zero());
        CHECK(p.term_count() == 0);
    }
    SUBCASE("mismatched variable counts are rejected") {
        CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
        CHECK_THROWS_AS(x(2, 1) * x(3, 1), std::invalid_argument);
    }
}

TEST_CASE("partial derivatives") {
    Polynomial p = Polynomial::from_monomial(mono(2, {2, 0}, {0, 1})); // x1^2*y2
    Polynomial d = partial_derivative(p, Axis::X, 1);
    Polynomial expected = Polynomial::from_monomial(mono(2, {1, 0}, {0, 1}), 2);
    CHECK(d == expected);

    CHECK(partial_derivative(x(2, 1), Axis::Y, 1).is_zero());

    // dx2 applied to the expanded delta of (1,1)
    CHECK(partial_derivative(delta_11_fixture(), Axis::X, 2) ==
          Polynomial::constant(2, 1));

    CHECK_THROWS_AS(partial_derivative(x(2, 1), Axis::X, 3), std::out_of_range);
    CHECK_THROWS_AS(partial_derivative(x(2, 1), Axis::X, 0), std::out_of_range);
}

TEST_CASE("differential operator application") {
    Polynomial dm = delta_21_fixture();
    SUBCASE("identity operator") {
        CHECK(apply_diff_operator(Polynomial::constant(3, 1), dm) == dm);
    }
    SUBCASE("x1*y1 annihilates") {
        Polynomial op = Polynomial::from_monomial(mono(3, {1, 0, 0}, {1, 0, 0}));
        CHECK(apply_diff_operator(op, dm).is_zero());
    }
    SUBCASE("h1 in x annihilates") {
        Polynomial op = x(3, 1) + x(3, 2) + x(3, 3);
        CHECK(apply_diff_operator(op, dm).is_zero());
    }
    SUBCASE("mismatched n") {
        CHECK_THROWS_AS(apply_diff_operator(Polynomial::constant(2, 1), dm),
                        std::invalid_argument);
    }
}

TEST_CASE("leading terms") {
    Polynomial p = x(2, 2) - x(2, 1); // x2 - x1; leading is x1 with -1
    auto [m, c] = p.leading_term();
    CHECK(m == Monomial::variable(2, Axis::X, 1));
    CHECK(c == Rational(-1));

    Polynomial d = partial_derivative(delta_21_fixture(), Axis::X, 2); // y1 - y3
    auto [m2, c2] = d.leading_term();
    CHECK(m2 == Monomial::variable(3, Axis::Y, 1));
    CHECK(c2 == Rational(1));

    auto [m3, c3] = Polynomial::constant(2, -1).leading_term();
    CHECK(m3.is_unit());
    CHECK(c3 == Rational(-1));

    CHECK_THROWS_AS(Polynomial::zero(2).leading_term(), std::invalid_argument);
}

TEST_CASE("complete homogeneous polynomials") {
    CHECK(h_complete(1, Axis::Y, {1, 2}, 2) == y(2, 1) + y(2, 2));
    CHECK(h_complete(2, Axis::X, {1}, 2) ==
          Polynomial::from_monomial(mono(2, {2, 0}, {0, 0})));

    // weak compositions of 2 into 2 parts: x1^2 + x1*x2 + x2^2
    Polynomial h22 = h_complete(2, Axis::X, {1, 2}, 2);
    Polynomial expected(2);
    expected.add_term(mono(2, {2, 0}, {0, 0}), 1);
    expected.add_term(mono(2, {1, 1}, {0, 0}), 1);
    expected.add_term(mono(2, {0, 2}, {0, 0}), 1);
    CHECK(h22 == expected);

    CHECK(h_complete(0, Axis::X, {}, 3) == Polynomial::constant(3, 1));
    CHECK_THROWS_AS(h_complete(2, Axis::X, {}, 3), std::invalid_argument);
    CHECK_THROWS_AS(h_complete(1, Axis::X, {7}, 3), std::out_of_range);

    SUBCASE("term count is C(|V|+k-1, k)") {
        auto binom = [](std::uint64_t a, std::uint64_t b) {
            std::uint64_t r = 1;
            for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
            return r;
        };
        for (unsigned vars = 1; vars <= 4; ++vars) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 1; i <= vars; ++i) idx.push_back(i);
            for (unsigned k = 0; k <= 5; ++k) {
                CHECK(h_complete(k, Axis::Y, idx, 4).term_count() ==
                      binom(vars + k - 1, k));
            }
        }
    }
}

TEST_CASE("operator application is bilinear and composes") {
    Rng rng(default_seed);
    for (int round = 0; round < 40; ++round) {
        std::size_t n = 1 + rng.below(4);
        Polynomial p1 = random_poly(rng, n, 4, 5);
        Polynomial p2 = random_poly(rng, n, 4, 5);
        Polynomial q1 = random_poly(rng, n, 3, 4);
        Polynomial q2 = random_poly(rng, n, 3, 4);

        CHECK(apply_diff_operator(q1, p1 + p2) ==
              apply_diff_operator(q1, p1) + apply_diff_operator(q1, p2));
        CHECK(apply_diff_operator(q1 + q2, p1) ==
              apply_diff_operator(q1, p1) + apply_diff_operator(q2, p1));
        CHECK(apply_diff_operator(q1 * q2, p1) ==
              apply_diff_operator(q1, apply_diff_operator(q2, p1)));
    }
}

TEST_CASE("lex order is multiplicative on leading monomials") {
    Rng rng(default_seed + 1);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = 1 + rng.below(4);
        Polynomial p = random_poly(rng, n, 4, 5);
        Polynomial q = random_poly(rng, n, 4, 5);
        if (p.is_zero() || q.is_zero()) continue;
        Polynomial prod = p * q;
        REQUIRE(!prod.is_zero());
        CHECK(prod.leading_monomial() == p.leading_monomial() * q.leading_monomial());
    }
}

TEST_CASE("canonical rendering") {
    CHECK(Polynomial::zero(2).to_string() == "0");
    CHECK(Polynomial::constant(2, -1).to_string() == "-1");
    CHECK(delta_21_fixture().to_string() ==
          "-1*x1*y2 + 1*x1*y3 + 1*x2*y1 - 1*x2*y3 - 1*x3*y1 + 1*x3*y2");

    Polynomial q(2);
    q.add_term(mono(2, {2, 0}, {0, 1}), Rational(-3, 4));
    CHECK(q.to_string() == "-3/4*x1^2*y2");

    SUBCASE("truncation marker") {
        Polynomial p = h_complete(3, Axis::X, {1, 2}, 2); // 4 terms
        CHECK(p.to_string(2) == "1*x1^3 + 1*x1^2*x2 + ... (2 more terms)");
    }
}

TEST_CASE("parser round-trips the canonical rendering") {
    Rng rng(default_seed + 2);
    for (int round = 0; round < 80; ++round) {
        std::size_t n = 1 + rng.below(4);
        Polynomial p = random_poly(rng, n, 5, 6);
        CHECK(parse_polynomial(p.to_string(), n) == p);
    }
    CHECK(parse_polynomial("0", 3).is_zero());
    CHECK(parse_polynomial("x1*y2", 2) ==
          Polynomial::from_monomial(mono(2, {1, 0}, {0, 1})));
    CHECK(parse_polynomial("5/3*y2^2", 2) ==
          Polynomial::from_monomial(mono(2, {0, 0}, {0, 2}), Rational(5, 3)));
    CHECK(parse_polynomial(" - x1 + 2", 1) ==
          Polynomial::constant(1, 2) - x(1, 1));

    CHECK_THROWS_AS(parse_polynomial("", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 +", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("z1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x9", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("3*", 2), std::invalid_argument);
}
