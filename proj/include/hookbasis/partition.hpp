#pragma once

#include "hookbasis/polynomial.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hookbasis {

/// A cell's (row-1, column-1) coordinates in the Ferrers diagram
/// (French convention, rows bottom-up). p is the x-exponent, q the
/// y-exponent contributed to the defining determinant.
struct Biexponent {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    bool operator==(const Biexponent&) const = default;
    auto operator<=>(const Biexponent&) const = default;
};

using BiexponentList = std::vector<Biexponent>;

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts); // validates

    /// Parses "3,1,1".
    static Partition parse(std::string_view text);
    std::string to_string() const;

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    unsigned n() const { return n_; }

    Partition conjugate() const;

    /// True for shapes (K+1, 1^L), including single rows and columns.
    bool is_hook() const;
    unsigned hook_arm() const;   // K = mu_1 - 1
    unsigned hook_leg() const;   // L = rows - 1

    bool operator==(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// Hook (K+1, 1^L).
Partition hook_partition(unsigned K, unsigned L);

/// All partitions of n in a fixed deterministic order.
std::vector<Partition> partitions_of(unsigned n);

/// Biexponents of every cell, sorted lexicographically. (0,0) is always
/// first.
BiexponentList biexponents(const Partition& mu);

inline constexpr unsigned default_delta_bound = 8;

unsigned effective_delta_bound(); // default_delta_bound unless HOOKBASIS_MAX_N is set

/// The Garsia-Haiman determinant det(x_i^{p_j} y_i^{q_j}) expanded by
/// direct permutation enumeration: exactly n! terms, coefficients +-1.
/// Throws ResourceError when n exceeds the bound.
Polynomial delta(const Partition& mu, unsigned max_n = effective_delta_bound());

/// n(mu) = sum (i-1) mu_i, the x-degree of every term of delta(mu).
std::uint64_t nmu(const Partition& mu);

/// n! / prod(mu_i!), computed exactly.
std::uint64_t factorial_quotient(const Partition& mu);

std::uint64_t factorial(unsigned n); // guards against 64-bit overflow

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace hookbasis
