#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace hookbasis {

// Exact arithmetic backs every certificate in this library; coefficients
// are GMP rationals throughout.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Bit size of the larger of numerator and denominator. Used to monitor
/// coefficient growth during elimination.
inline std::size_t bit_size(const Rational& q) {
    if (sgn(q) == 0) return 0;
    std::size_t num = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
    std::size_t den = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    return num > den ? num : den;
}

/// Parses "p" or "p/q" (base 10, optional leading '-').
Rational parse_rational(std::string_view text);

} // namespace hookbasis
