#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hookbasis {

enum class Axis : std::uint8_t { X, Y };

inline constexpr char axis_letter(Axis a) { return a == Axis::X ? 'x' : 'y'; }

/// A monomial in the 2n variables x1..xn, y1..yn. The same value doubles
/// as a differential operator: each exponent read as a derivative order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : xexp_(n, 0), yexp_(n, 0) {}

    static Monomial unit(std::size_t n) { return Monomial(n); }
    /// Single variable x_i or y_i (1-based index) raised to `power`.
    static Monomial variable(std::size_t n, Axis axis, std::size_t index,
                             std::uint32_t power = 1);

    std::size_t vars() const { return xexp_.size(); }

    std::uint32_t exp(Axis axis, std::size_t index) const; // 1-based
    void set_exp(Axis axis, std::size_t index, std::uint32_t value);

    const std::vector<std::uint32_t>& xexp() const { return xexp_; }
    const std::vector<std::uint32_t>& yexp() const { return yexp_; }

    std::uint64_t degree(Axis axis) const;
    std::uint64_t total_degree() const { return degree(Axis::X) + degree(Axis::Y); }
    bool is_unit() const;

    /// Componentwise <= on both exponent vectors.
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Componentwise difference; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

    /// "x1^2*x3*y2"; the unit monomial renders as "1".
    std::string to_string() const;

private:
    std::vector<std::uint32_t> xexp_, yexp_;
};

/// Total lexicographic order: compares x1,...,xn, then y1,...,yn; the
/// first differing exponent decides and the larger exponent wins. Hence
/// x1 > y1 and y2 > y3.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_compare(a, b) > 0;
    }
};

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_compare(a, b) < 0;
    }
};

} // namespace hookbasis
