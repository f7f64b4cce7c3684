#include "hookbasis/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace hookbasis {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("polynomial variable counts differ");
}

} // namespace

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
    Polynomial p(n);
    p.add_term(Monomial::unit(n), c);
    return p;
}

Polynomial Polynomial::from_monomial(Monomial m, Rational c) {
    Polynomial p(m.vars());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.vars() != vars_)
        throw std::invalid_argument("monomial does not live in this ring");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_vars(vars_, other.vars_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_vars(vars_, other.vars_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a.vars(), b.vars());
    Polynomial r(a.vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Polynomial::is_nonzero_integer_constant() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           is_integer(terms_.begin()->second);
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::invalid_argument("zero polynomial has no leading term");
    return *terms_.begin();
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw std::invalid_argument("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

std::uint64_t Polynomial::degree(Axis axis) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = m.degree(axis);
        if (t > d) d = t;
    }
    return d;
}

std::string Polynomial::to_string(std::size_t max_terms) const {
    if (terms_.empty()) return "0";
    std::string out;
    std::size_t emitted = 0;
    for (const auto& [m, c] : terms_) {
        if (emitted == max_terms) {
            out += " + ... (";
            out += std::to_string(terms_.size() - emitted);
            out += " more terms)";
            return out;
        }
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (m.is_unit()) {
            out += a.get_str();
        } else {
            out += a.get_str();
            out += '*';
            out += m.to_string();
        }
        ++emitted;
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, Axis axis, std::size_t index) {
    if (index < 1 || index > p.vars())
        throw std::out_of_range("derivative index out of range");
    Polynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exp(axis, index);
        if (e == 0) continue;
        Monomial d = m;
        d.set_exp(axis, index, e - 1);
        r.add_term(d, c * e);
    }
    return r;
}

namespace {

/// Falling factorial e(e-1)...(e-d+1) for e >= d, as an exact integer.
Integer falling_factorial(std::uint32_t e, std::uint32_t d) {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        std::uint64_t f = e - i;
        if (__builtin_mul_overflow(acc, f, &acc)) {
            // rare: restart in arbitrary precision
            Integer big = 1;
            for (std::uint32_t j = 0; j < d; ++j) big *= (e - j);
            return big;
        }
    }
    return Integer(static_cast<unsigned long>(acc));
}

/// Derivative multiplier of applying operator monomial op to monomial m,
/// assuming op.divides(m): product of per-variable falling factorials.
Integer derivative_multiplier(const Monomial& op, const Monomial& m) {
    Integer mult = 1;
    for (std::size_t i = 0; i < op.vars(); ++i) {
        if (op.xexp()[i] > 0) mult *= falling_factorial(m.xexp()[i], op.xexp()[i]);
        if (op.yexp()[i] > 0) mult *= falling_factorial(m.yexp()[i], op.yexp()[i]);
    }
    return mult;
}

} // namespace

Polynomial apply_diff_operator(const Polynomial& op, const Polynomial& p) {
    require_same_vars(op.vars(), p.vars());
    Polynomial r(p.vars());
    for (const auto& [mq, cq] : op.terms()) {
        for (const auto& [mp, cp] : p.terms()) {
            if (!mq.divides(mp)) continue;
            Integer mult = derivative_multiplier(mq, mp);
            r.add_term(mp / mq, cq * cp * Rational(mult));
        }
    }
    return r;
}

Polynomial h_complete(unsigned k, Axis axis, const std::vector<std::size_t>& indices,
                      std::size_t n) {
    for (std::size_t i : indices)
        if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Polynomial r(n);
    if (k == 0) {
        r.add_term(Monomial::unit(n), 1);
        return r;
    }
    if (indices.empty())
        throw std::invalid_argument("h_k with k > 0 needs a nonempty variable set");

    // weak compositions of k into |indices| parts
    std::vector<std::uint32_t> comp(indices.size(), 0);
    comp[0] = k;
    for (;;) {
        Monomial m(n);
        for (std::size_t i = 0; i < indices.size(); ++i)
            if (comp[i] > 0)
                m.set_exp(axis, indices[i], m.exp(axis, indices[i]) + comp[i]);
        r.add_term(m, 1);

        // next weak composition in colex-style order
        if (comp.back() == static_cast<std::uint32_t>(k)) break;
        std::size_t i = 0;
        while (comp[i] == 0) ++i;
        std::uint32_t v = comp[i];
        comp[i] = 0;
        comp[0] = v - 1;
        comp[i + 1] += 1;
    }
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: \"" + s + "\"");
    }
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    Polynomial run() {
        Polynomial p(n_);
        skip_ws();
        if (at_end()) throw error("empty polynomial text");
        // special case: a lone "0"
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-' between terms");
            }
            auto [m, c] = parse_term();
            p.add_term(m, sign * c);
            skip_ws();
            first = false;
        }
        return p;
    }

private:
    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::invalid_argument error(const std::string& what) const {
        return std::invalid_argument("polynomial parse error at offset " +
                                     std::to_string(pos_) + ": " + what);
    }

    std::pair<Monomial, Rational> parse_term() {
        Rational c(1);
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_number();
            have_coeff = true;
        }
        Monomial m = Monomial::unit(n_);
        bool have_factor = false;
        for (;;) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (have_factor || have_coeff) {
                break; // factors are '*'-joined
            }
            if (at_end() || (peek() != 'x' && peek() != 'y')) {
                if (have_factor || have_coeff) throw error("expected variable after '*'");
                throw error("expected coefficient or variable");
            }
            parse_factor(m);
            have_factor = true;
        }
        if (!have_coeff && !have_factor) throw error("empty term");
        return {m, c};
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num(text_.substr(start, pos_ - start));
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (dstart == pos_) throw error("expected denominator digits");
            num += '/';
            num += text_.substr(dstart, pos_ - dstart);
        }
        return parse_rational(num);
    }

    void parse_factor(Monomial& m) {
        Axis axis = peek() == 'x' ? Axis::X : Axis::Y;
        ++pos_;
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected variable index");
        unsigned long index = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (index < 1 || index > n_) throw error("variable index out of range");
        std::uint32_t e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            std::size_t estart = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (estart == pos_) throw error("expected exponent digits");
            e = static_cast<std::uint32_t>(
                std::stoul(std::string(text_.substr(estart, pos_ - estart))));
        }
        m.set_exp(axis, index, m.exp(axis, index) + e);
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
    // "0" denotes the zero polynomial
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "0") return Polynomial::zero(n);
    return PolyParser(text, n).run();
}

} // namespace hookbasis
