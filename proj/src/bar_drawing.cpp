#include "hookbasis/bar_drawing.hpp"

#include "hookbasis/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hookbasis {

bool BarDrawing::rules_satisfied(const std::vector<Bar>& bars) {
    for (std::size_t i = 0; i < bars.size(); ++i) {
        if (bars[i].crossed_y > bars[i].height) return false;
        for (std::size_t j = i + 1; j < bars.size(); ++j) {
            if (bars[j].depth == bars[i].depth && bars[j].height > bars[i].height)
                return false; // equal depths must come in decreasing height
            if (bars[j].depth > bars[i].depth &&
                bars[i].height - bars[i].crossed_y < bars[j].height + 1)
                return false; // too few blank y-cells left of a deeper bar
        }
    }
    return true;
}

BarDrawing::BarDrawing(std::vector<Bar> bars) : bars_(std::move(bars)) {
    if (!rules_satisfied(bars_))
        throw std::invalid_argument("bar drawing violates the placement rules");
}

BarDrawing::BarDrawing(std::vector<Bar> bars, const Partition& mu)
    : BarDrawing(std::move(bars)) {
    // the (depth, height) multiset must be the biexponents minus (0,0)
    auto be = biexponents(mu);
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (const auto& b : be) expected.insert({b.p, b.q});
    auto zero = expected.find({0, 0});
    if (zero == expected.end())
        throw std::invalid_argument("partition has no (0,0) biexponent");
    expected.erase(zero);
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& b : bars_) got.insert({b.depth, b.height});
    if (got != expected)
        throw std::invalid_argument("bars do not match the biexponents of mu");
}

nlohmann::json BarDrawing::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : bars_) arr.push_back({b.depth, b.height, b.crossed_y});
    return {{"bars", arr}};
}

BarDrawing BarDrawing::from_json(const nlohmann::json& j) {
    std::vector<Bar> bars;
    for (const auto& item : j.at("bars")) {
        if (!item.is_array() || item.size() != 3)
            throw std::invalid_argument("bar entries are [depth, height, crossed_y]");
        bars.push_back({item[0].get<std::uint32_t>(), item[1].get<std::uint32_t>(),
                        item[2].get<std::uint32_t>()});
    }
    return BarDrawing(std::move(bars));
}

void for_each_bar_drawing(const Partition& mu,
                          const std::function<void(const BarDrawing&)>& visit,
                          unsigned max_n) {
    const unsigned n = mu.n();
    const unsigned bound = max_n > 0 ? max_n : effective_bound(default_mzero_bound);
    if (n > bound)
        throw ResourceError("bar drawing bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(bound));

    // bar skeletons: biexponents minus the (0,0) cell
    std::vector<std::pair<std::uint32_t, std::uint32_t>> skeleton;
    for (const auto& b : biexponents(mu))
        if (!(b.p == 0 && b.q == 0)) skeleton.push_back({b.p, b.q});
    std::sort(skeleton.begin(), skeleton.end());

    if (skeleton.empty()) { // mu = (1): the empty drawing
        visit(BarDrawing(std::vector<Bar>{}));
        return;
    }

    // arrangements in lex order of the (depth, height) sequence
    do {
        // rule 1: equal depths in decreasing height order
        bool ordered = true;
        for (std::size_t i = 0; i + 1 < skeleton.size() && ordered; ++i)
            for (std::size_t j = i + 1; j < skeleton.size(); ++j)
                if (skeleton[j].first == skeleton[i].first &&
                    skeleton[j].second > skeleton[i].second) {
                    ordered = false;
                    break;
                }
        if (!ordered) continue;

        // rule 3 caps the crossed y-cells of every bar independently
        std::vector<std::int64_t> cap(skeleton.size());
        bool feasible = true;
        for (std::size_t i = 0; i < skeleton.size() && feasible; ++i) {
            std::int64_t c = skeleton[i].second;
            for (std::size_t j = i + 1; j < skeleton.size(); ++j)
                if (skeleton[j].first > skeleton[i].first)
                    c = std::min<std::int64_t>(
                        c, static_cast<std::int64_t>(skeleton[i].second) -
                               (static_cast<std::int64_t>(skeleton[j].second) + 1));
            cap[i] = c;
            if (c < 0) feasible = false;
        }
        if (!feasible) continue;

        // crossed_y vectors in ascending lex order
        std::vector<std::uint32_t> crossed(skeleton.size(), 0);
        bool more = true;
        while (more) {
            std::vector<Bar> bars(skeleton.size());
            for (std::size_t i = 0; i < skeleton.size(); ++i)
                bars[i] = {skeleton[i].first, skeleton[i].second, crossed[i]};
            visit(BarDrawing(std::move(bars)));
            more = false;
            for (std::size_t i = crossed.size(); i > 0; --i) {
                if (static_cast<std::int64_t>(crossed[i - 1]) < cap[i - 1]) {
                    ++crossed[i - 1];
                    more = true;
                    break;
                }
                crossed[i - 1] = 0; // carry
            }
        }
    } while (std::next_permutation(skeleton.begin(), skeleton.end()));
}

std::vector<BarDrawing> enumerate_bars(const Partition& mu, unsigned max_n) {
    std::vector<BarDrawing> out;
    for_each_bar_drawing(mu, [&](const BarDrawing& d) { out.push_back(d); }, max_n);
    return out;
}

BarOperators bar_operators(const BarDrawing& d, std::size_t n) {
    if (d.size() + 1 != n)
        throw std::invalid_argument("bar count must be n - 1");
    BarOperators ops{Monomial(n), Monomial(n)};
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Bar& b = d.bars()[i];
        ops.s_op.set_exp(Axis::X, i + 1, b.depth);
        ops.s_op.set_exp(Axis::Y, i + 1, b.crossed_y);
        ops.m_t.set_exp(Axis::Y, i + 1, b.height - b.crossed_y);
    }
    return ops;
}

nlohmann::json MzeroReport::to_json() const {
    return {{"mu", mu},
            {"expected", expected},
            {"count", count},
            {"checks",
             {{"count", count_ok},
              {"x_degree_zero", x_degree_zero_ok},
              {"leading_matches", leading_matches_ok},
              {"mt_distinct", mt_distinct_ok},
              {"rank", rank_ok}}},
            {"rank_report", rank_report.to_json()},
            {"ok", ok}};
}

MzeroReport verify_mzero(const Partition& mu, unsigned max_n) {
    const unsigned n = mu.n();
    const unsigned bound = max_n > 0 ? max_n : effective_bound(default_mzero_bound);
    if (n > bound)
        throw ResourceError("mzero bound exceeded: n = " + std::to_string(n) + " > " +
                            std::to_string(bound));

    MzeroReport report;
    report.mu = mu.to_string();
    // the x-degree-zero subspace has dimension n! / mu'! (conjugate parts)
    report.expected = factorial_quotient(mu.conjugate());

    const Polynomial dm = delta(mu, n);

    auto start = std::chrono::steady_clock::now();
    EchelonSet echelon;
    std::set<Monomial, LexLess> seen_mt;
    report.x_degree_zero_ok = true;
    report.leading_matches_ok = true;
    report.mt_distinct_ok = true;

    std::size_t id = 0;
    for_each_bar_drawing(
        mu,
        [&](const BarDrawing& d) {
            ++report.count;
            auto ops = bar_operators(d, n);
            Polynomial row = apply_diff_operator(Polynomial::from_monomial(ops.s_op), dm);
            if (row.is_zero() || row.degree(Axis::X) != 0)
                report.x_degree_zero_ok = false;
            if (row.is_zero() || row.leading_monomial() != ops.m_t)
                report.leading_matches_ok = false;
            if (!seen_mt.insert(ops.m_t).second) report.mt_distinct_ok = false;
            if (!row.is_zero()) {
                auto outcome = echelon.insert(std::move(row));
                if (!outcome.independent)
                    report.rank_report.dependent_row_ids.push_back(id);
            }
            ++id;
        },
        bound);

    report.rank_report.rank = echelon.rank();
    report.rank_report.row_count = report.count;
    report.rank_report.pivot_monomials = echelon.pivots();
    report.rank_report.max_coeff_bits = echelon.max_coeff_bits();
    report.rank_report.elapsed = std::chrono::steady_clock::now() - start;

    report.count_ok = report.count == report.expected;
    report.rank_ok = report.rank_report.rank == report.expected;
    report.ok = report.count_ok && report.x_degree_zero_ok && report.leading_matches_ok &&
                report.mt_distinct_ok && report.rank_ok;
    return report;
}

} // namespace hookbasis
