#include "hookbasis/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace hookbasis {

Monomial Monomial::variable(std::size_t n, Axis axis, std::size_t index,
                            std::uint32_t power) {
    Monomial m(n);
    m.set_exp(axis, index, power);
    return m;
}

std::uint32_t Monomial::exp(Axis axis, std::size_t index) const {
    const auto& v = axis == Axis::X ? xexp_ : yexp_;
    if (index < 1 || index > v.size())
        throw std::out_of_range("variable index out of range");
    return v[index - 1];
}

void Monomial::set_exp(Axis axis, std::size_t index, std::uint32_t value) {
    auto& v = axis == Axis::X ? xexp_ : yexp_;
    if (index < 1 || index > v.size())
        throw std::out_of_range("variable index out of range");
    v[index - 1] = value;
}

std::uint64_t Monomial::degree(Axis axis) const {
    const auto& v = axis == Axis::X ? xexp_ : yexp_;
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const {
    for (auto e : xexp_)
        if (e != 0) return false;
    for (auto e : yexp_)
        if (e != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    if (vars() != other.vars())
        throw std::invalid_argument("monomial variable counts differ");
    for (std::size_t i = 0; i < xexp_.size(); ++i)
        if (xexp_[i] > other.xexp_[i]) return false;
    for (std::size_t i = 0; i < yexp_.size(); ++i)
        if (yexp_[i] > other.yexp_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomial variable counts differ");
    Monomial r = a;
    for (std::size_t i = 0; i < r.xexp_.size(); ++i) {
        if (__builtin_add_overflow(r.xexp_[i], b.xexp_[i], &r.xexp_[i]))
            throw std::overflow_error("monomial exponent overflow");
        if (__builtin_add_overflow(r.yexp_[i], b.yexp_[i], &r.yexp_[i]))
            throw std::overflow_error("monomial exponent overflow");
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this))
        throw std::invalid_argument("monomial quotient is not a monomial");
    Monomial r = *this;
    for (std::size_t i = 0; i < xexp_.size(); ++i) {
        r.xexp_[i] -= other.xexp_[i];
        r.yexp_[i] -= other.yexp_[i];
    }
    return r;
}

std::string Monomial::to_string() const {
    std::string out;
    auto emit = [&out](char letter, std::size_t index, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += letter;
        out += std::to_string(index);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    };
    for (std::size_t i = 0; i < xexp_.size(); ++i) emit('x', i + 1, xexp_[i]);
    for (std::size_t i = 0; i < yexp_.size(); ++i) emit('y', i + 1, yexp_[i]);
    if (out.empty()) return "1";
    return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomial variable counts differ");
    for (std::size_t i = 0; i < a.xexp().size(); ++i)
        if (auto c = a.xexp()[i] <=> b.xexp()[i]; c != 0) return c;
    for (std::size_t i = 0; i < a.yexp().size(); ++i)
        if (auto c = a.yexp()[i] <=> b.yexp()[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

} // namespace hookbasis
