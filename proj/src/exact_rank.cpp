#include "hookbasis/exact_rank.hpp"

#include "hookbasis/errors.hpp"
#include "hookbasis/hook_drawing.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookbasis {

void EchelonSet::note_coeffs(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
        std::size_t b = bit_size(c);
        if (b > max_coeff_bits_) max_coeff_bits_ = b;
    }
}

EchelonSet::InsertOutcome EchelonSet::insert(Polynomial row) {
    note_coeffs(row);
    Polynomial original = recheck_ ? row : Polynomial();
    std::vector<std::pair<Rational, std::size_t>> combination;

    while (!row.is_zero()) {
        const Monomial& lead = row.leading_monomial();
        auto it = std::lower_bound(
            rows_.begin(), rows_.end(), lead,
            [](const PivotRow& r, const Monomial& m) { return lex_compare(r.lead, m) > 0; });
        if (it == rows_.end() || it->lead != lead) break;
        Rational c = row.coeff(lead);
        // row -= c * pivot
        for (const auto& [m, pc] : it->poly.terms()) row.add_term(m, -c * pc);
        combination.emplace_back(c, static_cast<std::size_t>(it - rows_.begin()));
    }
    note_coeffs(row);

    if (row.is_zero()) {
        if (recheck_) {
            // independent recomputation: original minus the recorded
            // combination must vanish identically
            Polynomial check = original;
            for (const auto& [c, idx] : combination) {
                Polynomial scaled = rows_[idx].poly;
                scaled *= c;
                check -= scaled;
            }
            if (!check.is_zero())
                throw std::logic_error("echelon recheck failed: dependent row does "
                                       "not reduce to zero on recomputation");
        }
        return {};
    }

    auto [lead, coeff] = row.leading_term();
    row *= Rational(1) / coeff;
    note_coeffs(row);

    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), lead,
        [](const PivotRow& r, const Monomial& m) { return lex_compare(r.lead, m) > 0; });
    it = rows_.insert(it, PivotRow{lead, std::move(row)});

    InsertOutcome out;
    out.independent = true;
    out.pivot = it->lead;
    return out;
}

std::vector<Monomial> EchelonSet::pivots() const {
    std::vector<Monomial> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.lead);
    return out;
}

Polynomial EchelonSet::reduce(Polynomial p) const {
    Polynomial remainder(p.vars());
    while (!p.is_zero()) {
        const Monomial& lead = p.leading_monomial();
        auto it = std::lower_bound(
            rows_.begin(), rows_.end(), lead,
            [](const PivotRow& r, const Monomial& m) { return lex_compare(r.lead, m) > 0; });
        if (it == rows_.end() || it->lead != lead) {
            // move the irreducible leading term to the remainder
            Rational c = p.coeff(lead);
            remainder.add_term(lead, c);
            p.add_term(lead, -c);
            continue;
        }
        Rational c = p.coeff(lead);
        for (const auto& [m, pc] : it->poly.terms()) p.add_term(m, -c * pc);
    }
    return remainder;
}

RankReport incremental_rank(const std::function<std::optional<Polynomial>()>& next) {
    auto start = std::chrono::steady_clock::now();
    EchelonSet echelon;
    RankReport report;
    std::size_t id = 0;
    while (auto row = next()) {
        auto outcome = echelon.insert(std::move(*row));
        if (!outcome.independent) report.dependent_row_ids.push_back(id);
        ++id;
    }
    report.rank = echelon.rank();
    report.row_count = id;
    report.pivot_monomials = echelon.pivots();
    report.max_coeff_bits = echelon.max_coeff_bits();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

RankReport incremental_rank(const std::vector<Polynomial>& rows) {
    std::size_t i = 0;
    return incremental_rank([&]() -> std::optional<Polynomial> {
        if (i >= rows.size()) return std::nullopt;
        return rows[i++];
    });
}

nlohmann::json RankReport::to_json() const {
    nlohmann::json pivots = nlohmann::json::array();
    for (const auto& m : pivot_monomials) pivots.push_back(m.to_string());
    return {{"rank", rank},
            {"row_count", row_count},
            {"pivot_monomials", pivots},
            {"dependent_row_ids", dependent_row_ids},
            {"max_coeff_bits", max_coeff_bits}};
}

nlohmann::json RankCheck::to_json() const {
    return {{"expected_rank", expected_rank}, {"ok", ok}, {"report", report.to_json()}};
}

nlohmann::json sparse_triplets(const std::vector<Polynomial>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [m, c] : rows[i].terms())
            out.push_back({i, m.to_string(), to_string(c)});
    return out;
}

RankCheck verify_independence(const Partition& mu, unsigned max_n,
                              std::vector<Polynomial>* rows_out) {
    if (!mu.is_hook()) throw std::invalid_argument("independence check needs a hook");
    const unsigned n = mu.n();
    const unsigned bound = max_n > 0 ? max_n : effective_bound(default_independence_bound);
    if (n > bound)
        throw ResourceError("independence bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(bound));

    const Polynomial dm = delta(mu, n);
    const unsigned K = mu.hook_arm(), L = mu.hook_leg();

    RankCheck check;
    check.expected_rank = factorial(n);

    auto start = std::chrono::steady_clock::now();
    EchelonSet echelon;
    std::size_t id = 0;
    RankReport& report = check.report;
    for_each_drawing(K, L, [&](const HookDrawing& d) {
        Polynomial row =
            apply_diff_operator(Polynomial::from_monomial(operators(d).s_op), dm);
        if (rows_out) rows_out->push_back(row);
        auto outcome = echelon.insert(std::move(row));
        if (!outcome.independent) report.dependent_row_ids.push_back(id);
        ++id;
    });
    report.rank = echelon.rank();
    report.row_count = id;
    report.pivot_monomials = echelon.pivots();
    report.max_coeff_bits = echelon.max_coeff_bits();
    report.elapsed = std::chrono::steady_clock::now() - start;

    check.ok = report.rank == check.expected_rank && report.dependent_row_ids.empty();
    return check;
}

namespace {

/// Visits every operator monomial x^a y^b with a_i <= L, b_i <= K,
/// sum(a) <= nmu(mu), sum(b) <= nmu(mu'), and no index with both a_i > 0
/// and b_i > 0 (hook biexponents make such derivatives identically zero).
/// Deterministic order: a ascending lex, then b ascending lex.
void for_each_span_operator(unsigned n, unsigned K, unsigned L,
                            std::uint64_t x_budget, std::uint64_t y_budget,
                            const std::function<void(const Monomial&)>& visit) {
    std::vector<std::uint32_t> a(n, 0), b(n, 0);
    Monomial op(n);

    auto rec_b = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> void {
        if (pos == n) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) {
                m.set_exp(Axis::X, i + 1, a[i]);
                m.set_exp(Axis::Y, i + 1, b[i]);
            }
            visit(m);
            return;
        }
        std::uint32_t cap = a[pos] > 0 ? 0 : K;
        for (std::uint32_t v = 0; v <= cap && v <= remaining; ++v) {
            b[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        b[pos] = 0;
    };
    auto rec_a = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> void {
        if (pos == n) {
            rec_b(rec_b, 0, y_budget);
            return;
        }
        for (std::uint32_t v = 0; v <= L && v <= remaining; ++v) {
            a[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        a[pos] = 0;
    };
    rec_a(rec_a, 0, x_budget);
}

} // namespace

RankCheck verify_span(const Partition& mu, unsigned max_n,
                      std::vector<Polynomial>* rows_out) {
    if (!mu.is_hook()) throw std::invalid_argument("span check needs a hook");
    const unsigned n = mu.n();
    const unsigned bound = max_n > 0 ? max_n : effective_bound(default_span_bound);
    if (n > bound)
        throw ResourceError("span bound exceeded: n = " + std::to_string(n) + " > " +
                            std::to_string(bound));

    const Polynomial dm = delta(mu, n);
    const unsigned K = mu.hook_arm(), L = mu.hook_leg();
    const std::uint64_t x_budget = nmu(mu);
    const std::uint64_t y_budget = nmu(mu.conjugate());

    RankCheck check;
    check.expected_rank = factorial(n);

    auto start = std::chrono::steady_clock::now();
    EchelonSet echelon;
    std::size_t id = 0;
    RankReport& report = check.report;
    for_each_span_operator(n, K, L, x_budget, y_budget, [&](const Monomial& op) {
        Polynomial row = apply_diff_operator(Polynomial::from_monomial(op), dm);
        if (row.is_zero()) return; // dropped before insertion
        if (rows_out) rows_out->push_back(row);
        auto outcome = echelon.insert(std::move(row));
        if (!outcome.independent) report.dependent_row_ids.push_back(id);
        ++id;
    });
    report.rank = echelon.rank();
    report.row_count = id;
    report.pivot_monomials = echelon.pivots();
    report.max_coeff_bits = echelon.max_coeff_bits();
    report.elapsed = std::chrono::steady_clock::now() - start;

    check.ok = report.rank == check.expected_rank;
    return check;
}

} // namespace hookbasis
