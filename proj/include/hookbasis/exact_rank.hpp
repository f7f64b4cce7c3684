#pragma once

#include "hookbasis/partition.hpp"
#include "hookbasis/polynomial.hpp"

#include <json.hpp>

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace hookbasis {

/// Streaming exact elimination: rows are polynomials, columns their
/// monomials under the global lex order. Each incoming row is reduced
/// against the pivot set (keyed by leading monomial); a nonzero
/// remainder is normalized to leading coefficient 1 and inserted.
/// Deterministic given the insertion order.
class EchelonSet {
public:
    struct InsertOutcome {
        bool independent = false;
        Monomial pivot; // set when independent
    };

    /// When recheck is on, every dependent row is confirmed by a fresh
    /// recomputation: row minus the recorded pivot combination must be
    /// exactly zero.
    explicit EchelonSet(bool recheck_dependent = true) : recheck_(recheck_dependent) {}

    InsertOutcome insert(Polynomial row);

    std::size_t rank() const { return rows_.size(); }
    /// Pivot monomials in descending lex order.
    std::vector<Monomial> pivots() const;
    std::size_t max_coeff_bits() const { return max_coeff_bits_; }

    /// Remainder of p after reduction against the current pivot set
    /// (does not insert).
    Polynomial reduce(Polynomial p) const;

private:
    struct PivotRow {
        Monomial lead;
        Polynomial poly; // leading coefficient 1
    };
    // descending by pivot monomial
    std::vector<PivotRow> rows_;
    bool recheck_ = true;
    std::size_t max_coeff_bits_ = 0;

    void note_coeffs(const Polynomial& p);
};

struct RankReport {
    std::size_t rank = 0;
    std::size_t row_count = 0;
    std::vector<Monomial> pivot_monomials;      // descending lex
    std::vector<std::size_t> dependent_row_ids; // input positions that reduced to zero
    std::size_t max_coeff_bits = 0;
    std::chrono::duration<double> elapsed{0};

    /// Deterministic certificate: elapsed is deliberately omitted so that
    /// identical runs emit identical bytes.
    nlohmann::json to_json() const;
};

/// Consumes rows from `next` until it returns nullopt.
RankReport incremental_rank(const std::function<std::optional<Polynomial>()>& next);
RankReport incremental_rank(const std::vector<Polynomial>& rows);

/// Optional audit dump: (row, monomial, coefficient) triplets of the
/// input rows, written as JSON.
nlohmann::json sparse_triplets(const std::vector<Polynomial>& rows);

inline constexpr unsigned default_independence_bound = 6;
inline constexpr unsigned default_span_bound = 5;

struct RankCheck {
    RankReport report;
    std::uint64_t expected_rank = 0;
    bool ok = false;
    nlohmann::json to_json() const;
};

/// Rows {S(D) applied to delta_mu : D a drawing}; passes iff the rank is
/// n! with no dependent row. `rows_out`, when non-null, receives the
/// generated rows for audit dumps.
RankCheck verify_independence(const Partition& mu, unsigned max_n = 0,
                              std::vector<Polynomial>* rows_out = nullptr);

/// Rows = every monomial derivative of delta_mu inside the componentwise
/// degree box (x orders <= L, y orders <= K), pruned by the structural
/// zeros (bihomogeneity, and x_i y_i pairs which kill every hook term).
/// Passes iff the rank is n!, certifying dim M_mu = n!.
RankCheck verify_span(const Partition& mu, unsigned max_n = 0,
                      std::vector<Polynomial>* rows_out = nullptr);

} // namespace hookbasis
