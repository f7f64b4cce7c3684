#pragma once

#include "hookbasis/exact_rank.hpp"
#include "hookbasis/partition.hpp"
#include "hookbasis/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace hookbasis {

/// One bar: depth x-cells below the axis (all crossed), height y-cells
/// above it of which crossed_y carry crosses.
struct Bar {
    std::uint32_t depth = 0;
    std::uint32_t height = 0;
    std::uint32_t crossed_y = 0;
    bool operator==(const Bar&) const = default;
};

/// A bar drawing for an arbitrary partition mu of n: n-1 bars whose
/// (depth, height) multiset is biexponents(mu) minus (0,0), subject to
///   1. equal-depth bars appear in decreasing height order;
///   2. every x-cell is crossed;
///   3. a bar left of a deeper bar with q y-cells keeps at least q+1
///      blank y-cells.
class BarDrawing {
public:
    explicit BarDrawing(std::vector<Bar> bars); // structural checks only
    BarDrawing(std::vector<Bar> bars, const Partition& mu); // + multiset check

    const std::vector<Bar>& bars() const { return bars_; }
    std::size_t size() const { return bars_.size(); }

    bool operator==(const BarDrawing&) const = default;

    static bool rules_satisfied(const std::vector<Bar>& bars);

    /// {"bars":[[depth,height,crossed_y],...]}
    nlohmann::json to_json() const;
    static BarDrawing from_json(const nlohmann::json& j);

private:
    std::vector<Bar> bars_;
};

inline constexpr unsigned default_mzero_bound = 7;

/// Visits every valid bar drawing exactly once: bar arrangements in lex
/// order of the (depth, height) sequence, crossed_y vectors in ascending
/// lex order within an arrangement.
void for_each_bar_drawing(const Partition& mu,
                          const std::function<void(const BarDrawing&)>& visit,
                          unsigned max_n = 0);

std::vector<BarDrawing> enumerate_bars(const Partition& mu, unsigned max_n = 0);

/// Derivative operator and blank-cell monomial of a bar drawing in n
/// variables: bar i acts on variable i; s_op collects the crossed cells
/// (x^depth, y^crossed_y), m_t records the blank y-cells.
struct BarOperators {
    Monomial s_op;
    Monomial m_t;
};
BarOperators bar_operators(const BarDrawing& d, std::size_t n);

/// Certificate that {S(D) applied to delta_mu} is a monomial-indexed
/// basis of the x-degree-zero subspace of M_mu:
///   (a) the drawing count equals n!/mu'! (conjugate factorial quotient,
///       the dimension of that subspace);
///   (b) every row is nonzero with x-degree 0;
///   (c) each row's leading monomial is its M_T up to sign;
///   (d) the M_T are pairwise distinct;
///   (e) the exact rank of the family equals the count.
struct MzeroReport {
    std::string mu;
    std::uint64_t expected = 0;
    std::uint64_t count = 0;
    bool count_ok = false;
    bool x_degree_zero_ok = false;
    bool leading_matches_ok = false;
    bool mt_distinct_ok = false;
    bool rank_ok = false;
    RankReport rank_report;
    bool ok = false;
    nlohmann::json to_json() const;
};

MzeroReport verify_mzero(const Partition& mu, unsigned max_n = 0);

} // namespace hookbasis
