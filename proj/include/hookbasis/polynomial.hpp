#pragma once

#include "hookbasis/monomial.hpp"
#include "hookbasis/rational.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookbasis {

/// Sparse multivariate polynomial over the rationals in x1..xn, y1..yn.
/// Terms are kept in descending lex order, so the leading term is the
/// first entry and addition is a merge. No stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, LexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t n) : vars_(n) {}

    static Polynomial zero(std::size_t n) { return Polynomial(n); }
    static Polynomial constant(std::size_t n, const Rational& c);
    static Polynomial from_monomial(Monomial m, Rational c = Rational(1));

    std::size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of m (zero if absent).
    Rational coeff(const Monomial& m) const;

    /// Adds c * m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }
    Polynomial operator-() const;

    bool operator==(const Polynomial&) const = default;

    bool is_constant() const;
    /// True iff the polynomial is a nonzero integer constant.
    bool is_nonzero_integer_constant() const;

    /// Lex-greatest term. Throws std::invalid_argument on the zero polynomial.
    std::pair<Monomial, Rational> leading_term() const;
    const Monomial& leading_monomial() const;

    /// Max degree in the given axis over all terms (0 for the zero polynomial).
    std::uint64_t degree(Axis axis) const;

    /// Canonical rendering: terms in descending lex order, each as
    /// "<coeff>*<monomial>" with explicit 1-coefficients, joined by
    /// " + " / " - ". A term on the unit monomial renders as the bare
    /// coefficient; the zero polynomial renders as "0". When max_terms
    /// is exceeded the tail is replaced by a truncation marker.
    std::string to_string(
        std::size_t max_terms = std::numeric_limits<std::size_t>::max()) const;

private:
    std::size_t vars_ = 0;
    TermMap terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Formal partial derivative with respect to x_i or y_i (1-based).
Polynomial partial_derivative(const Polynomial& p, Axis axis, std::size_t index);

/// op(d) applied to p: each term c * x^a y^b of op acts as
/// c * (d/dx)^a (d/dy)^b, extended linearly.
Polynomial apply_diff_operator(const Polynomial& op, const Polynomial& p);

/// Complete homogeneous symmetric polynomial of degree k in the chosen
/// variables (1-based indices) of one axis, inside the 2n-variable ring.
/// h_0 = 1; k > 0 with an empty index set is an error.
Polynomial h_complete(unsigned k, Axis axis, const std::vector<std::size_t>& indices,
                      std::size_t n);

/// Parses the canonical rendering (plus harmless whitespace variants and
/// bare monomials like "x1*y2"). Inverse of Polynomial::to_string.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

} // namespace hookbasis
