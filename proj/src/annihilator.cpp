#include "hookbasis/annihilator.hpp"

#include "hookbasis/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookbasis {

namespace {

std::string index_set_string(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_index_set(const std::vector<std::size_t>& v, std::size_t n,
                       bool allow_empty = false) {
    require(allow_empty || !v.empty(), "index set must be nonempty");
    require(std::is_sorted(v.begin(), v.end()), "index set must be sorted");
    require(std::adjacent_find(v.begin(), v.end()) == v.end(),
            "index set must be duplicate-free");
    for (std::size_t i : v) require(i >= 1 && i <= n, "index out of range");
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial squarefree_monomial(Axis axis, const std::vector<std::size_t>& indices,
                               std::size_t n) {
    Monomial m(n);
    for (std::size_t i : indices) m.set_exp(axis, i, 1);
    return Polynomial::from_monomial(m);
}

} // namespace

std::string GeneratorSpec::label() const {
    switch (kind) {
        case Kind::h_x: return "h_" + std::to_string(k) + "(x" + index_set_string(set1) + ")";
        case Kind::h_y: return "h_" + std::to_string(k) + "(y" + index_set_string(set1) + ")";
        case Kind::xy_diag: return "x" + std::to_string(set1.at(0)) + "*y" + std::to_string(set1.at(0));
        case Kind::squarefree_x: return "x" + index_set_string(set1);
        case Kind::squarefree_y: return "y" + index_set_string(set1);
        case Kind::prop1:
            return "prop1[k=" + std::to_string(k) + ",Y=" + index_set_string(set1) + "]";
        case Kind::prop2:
            return "prop2[k=" + std::to_string(k) + ",Y=" + index_set_string(set1) +
                   ",Y'=" + index_set_string(set2) + "]";
        case Kind::prop3a:
            return "prop3a[k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                   ",Y=" + index_set_string(set1) + ",X=" + index_set_string(set2) + "]";
        case Kind::prop3b:
            return "prop3b[k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                   ",Y=" + index_set_string(set1) + ",X=" + index_set_string(set2) + "]";
        case Kind::diag_power:
            return "sum_i x_i^" + std::to_string(k) + "*y_i^" + std::to_string(l);
    }
    return "?";
}

nlohmann::json GeneratorSpec::to_json() const {
    static const char* names[] = {"h_x",   "h_y",   "xy_diag", "squarefree_x",
                                  "squarefree_y", "prop1", "prop2",   "prop3a",
                                  "prop3b", "diag_power"};
    nlohmann::json j{{"kind", names[static_cast<int>(kind)]}, {"label", label()}};
    if (k > 0) j["k"] = k;
    if (l > 0) j["l"] = l;
    if (!set1.empty()) j["set1"] = set1;
    if (!set2.empty()) j["set2"] = set2;
    return j;
}

std::vector<std::pair<GeneratorSpec, Polynomial>>
theorem2_generators(const Partition& hook_mu) {
    if (!hook_mu.is_hook())
        throw std::invalid_argument("generator list is defined for hooks only");
    const unsigned K = hook_mu.hook_arm();
    const unsigned L = hook_mu.hook_leg();
    const std::size_t n = hook_mu.n();
    const auto everything = all_indices(n);

    std::vector<std::pair<GeneratorSpec, Polynomial>> out;

    for (unsigned i = 1; i <= n; ++i) {
        GeneratorSpec s{GeneratorSpec::Kind::h_x, i, 0, everything, {}};
        out.emplace_back(s, h_complete(i, Axis::X, everything, n));
    }
    for (unsigned i = 1; i <= n; ++i) {
        GeneratorSpec s{GeneratorSpec::Kind::h_y, i, 0, everything, {}};
        out.emplace_back(s, h_complete(i, Axis::Y, everything, n));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        GeneratorSpec s{GeneratorSpec::Kind::xy_diag, 0, 0, {i}, {}};
        Monomial m(n);
        m.set_exp(Axis::X, i, 1);
        m.set_exp(Axis::Y, i, 1);
        out.emplace_back(s, Polynomial::from_monomial(m));
    }

    // all squarefree monomials of the critical degrees, subsets in lex order
    auto emit_subsets = [&](std::size_t size, Axis axis, GeneratorSpec::Kind kind) {
        if (size > n) return; // no such subset
        std::vector<std::size_t> subset(size);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
            if (pos == size) {
                GeneratorSpec s{kind, 0, 0, subset, {}};
                out.emplace_back(s, squarefree_monomial(axis, subset, n));
                return;
            }
            for (std::size_t v = from; v <= n - (size - pos - 1); ++v) {
                subset[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    };
    emit_subsets(static_cast<std::size_t>(L) + 1, Axis::X, GeneratorSpec::Kind::squarefree_x);
    emit_subsets(static_cast<std::size_t>(K) + 1, Axis::Y, GeneratorSpec::Kind::squarefree_y);

    return out;
}

bool annihilates(const Polynomial& p, const Polynomial& delta_mu) {
    return apply_diff_operator(p, delta_mu).is_zero();
}

bool annihilates(const Polynomial& p, const Partition& mu) {
    return annihilates(p, delta(mu));
}

Polynomial proposition_witness(const GeneratorSpec& spec, const Partition& mu) {
    const std::size_t n = mu.n();
    switch (spec.kind) {
        case GeneratorSpec::Kind::prop1: {
            require_index_set(spec.set1, n);
            require(spec.k > 0, "prop1 needs k > 0");
            require(spec.k + spec.set1.size() > n, "prop1 needs k + |Y| > n");
            return h_complete(spec.k, Axis::Y, spec.set1, n);
        }
        case GeneratorSpec::Kind::prop2: {
            require(mu.is_hook(), "prop2 is stated for hooks");
            const unsigned K = mu.hook_arm();
            require_index_set(spec.set1, n);
            require_index_set(spec.set2, n);
            require(spec.k > 0, "prop2 needs k > 0");
            require(spec.k + spec.set1.size() > K, "prop2 needs k + |Y| > K");
            require(subset_of(spec.set1, spec.set2), "prop2 needs Y contained in Y'");
            return squarefree_monomial(Axis::Y, spec.set1, n) *
                   h_complete(spec.k, Axis::Y, spec.set2, n);
        }
        case GeneratorSpec::Kind::prop3a: {
            require_index_set(spec.set1, n);
            require_index_set(spec.set2, n);
            require(spec.k > 0 && spec.l > 0, "prop3 needs k, l > 0");
            require(subset_of(spec.set1, spec.set2), "prop3a needs Y contained in X");
            require(spec.k + spec.l + spec.set1.size() > n,
                    "prop3a needs k + l + |Y| > n");
            return h_complete(spec.k, Axis::Y, spec.set1, n) *
                   h_complete(spec.l, Axis::X, spec.set2, n);
        }
        case GeneratorSpec::Kind::prop3b: {
            require_index_set(spec.set1, n);
            require_index_set(spec.set2, n);
            require(spec.k > 0 && spec.l > 0, "prop3 needs k, l > 0");
            require(subset_of(spec.set2, spec.set1), "prop3b needs X contained in Y");
            require(spec.k + spec.l + spec.set2.size() > n,
                    "prop3b needs k + l + |X| > n");
            return h_complete(spec.k, Axis::Y, spec.set1, n) *
                   h_complete(spec.l, Axis::X, spec.set2, n);
        }
        default:
            throw std::invalid_argument("not a proposition spec");
    }
}

namespace {

std::vector<std::size_t> random_subset(std::size_t n, std::size_t size, Rng& rng) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
    // partial Fisher-Yates
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace

std::vector<GeneratorSpec> sample_proposition_specs(GeneratorSpec::Kind kind,
                                                    const Partition& mu,
                                                    std::size_t count, Rng& rng) {
    const std::size_t n = mu.n();
    std::vector<GeneratorSpec> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        GeneratorSpec spec;
        spec.kind = kind;
        switch (kind) {
            case GeneratorSpec::Kind::prop1: {
                std::size_t ysize = 1 + rng.below(n);
                std::size_t kmin = n >= ysize ? n - ysize + 1 : 1;
                spec.k = static_cast<unsigned>(rng.range(std::max<std::size_t>(kmin, 1),
                                                         kmin + 2));
                spec.set1 = random_subset(n, ysize, rng);
                break;
            }
            case GeneratorSpec::Kind::prop2: {
                const unsigned K = mu.hook_arm();
                std::size_t ypsize = 1 + rng.below(n);
                std::size_t ysize = 1 + rng.below(ypsize);
                spec.set2 = random_subset(n, ypsize, rng);
                spec.set1 = spec.set2;
                // shrink Y' to a random subset Y
                for (std::size_t i = spec.set1.size(); i > ysize; --i)
                    spec.set1.erase(spec.set1.begin() + rng.below(spec.set1.size()));
                std::size_t kmin = K >= ysize ? K - ysize + 1 : 1;
                spec.k = static_cast<unsigned>(rng.range(std::max<std::size_t>(kmin, 1),
                                                         std::max<std::size_t>(kmin, 1) + 2));
                break;
            }
            case GeneratorSpec::Kind::prop3a:
            case GeneratorSpec::Kind::prop3b: {
                std::size_t outer = 1 + rng.below(n);
                std::size_t inner = 1 + rng.below(outer);
                auto outer_set = random_subset(n, outer, rng);
                auto inner_set = outer_set;
                for (std::size_t i = inner_set.size(); i > inner; --i)
                    inner_set.erase(inner_set.begin() + rng.below(inner_set.size()));
                if (kind == GeneratorSpec::Kind::prop3a) {
                    spec.set1 = inner_set; // Y
                    spec.set2 = outer_set; // X
                } else {
                    spec.set1 = outer_set; // Y
                    spec.set2 = inner_set; // X
                }
                spec.l = static_cast<unsigned>(1 + rng.below(2));
                std::size_t kmin = n >= spec.l + inner ? n - spec.l - inner + 1 : 1;
                kmin = std::max<std::size_t>(kmin, 1);
                spec.k = static_cast<unsigned>(rng.range(kmin, kmin + 2));
                break;
            }
            default:
                throw std::invalid_argument("not a proposition kind");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

AnnihilationReport observation4_check(const Partition& mu, std::size_t samples,
                                      std::uint64_t seed) {
    const std::size_t n = mu.n();
    const Polynomial dm = delta(mu);
    AnnihilationReport report;

    auto push = [&](GeneratorSpec spec, const Polynomial& p) {
        bool ok = annihilates(p, dm);
        report.entries.push_back({std::move(spec), ok});
        if (!ok) report.all_ok = false;
    };
    auto diag_power = [&](unsigned r, unsigned s) {
        Polynomial p(n);
        for (std::size_t i = 1; i <= n; ++i) {
            Monomial m(n);
            m.set_exp(Axis::X, i, r);
            m.set_exp(Axis::Y, i, s);
            p.add_term(m, 1);
        }
        return p;
    };

    // fixed family: power sums in x alone and in y alone
    for (unsigned r = 1; r <= n; ++r) {
        push({GeneratorSpec::Kind::diag_power, r, 0, {}, {}}, diag_power(r, 0));
        push({GeneratorSpec::Kind::diag_power, 0, r, {}, {}}, diag_power(0, r));
    }
    // sampled polarized power sums
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        unsigned r1 = static_cast<unsigned>(rng.below(n + 1));
        unsigned s1 = static_cast<unsigned>(rng.below(n + 1));
        if (r1 + s1 == 0) r1 = 1;
        push({GeneratorSpec::Kind::diag_power, r1, s1, {}, {}}, diag_power(r1, s1));
    }
    return report;
}

nlohmann::json AnnihilationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back({{"generator", e.spec.to_json()}, {"annihilates", e.annihilates}});
    return arr;
}

nlohmann::json IdealReport::to_json() const {
    return {{"generators", generators.to_json()},
            {"propositions", propositions.to_json()},
            {"observation4", observation4.to_json()},
            {"ok", all_ok}};
}

IdealReport verify_ideal(const Partition& hook_mu, std::size_t samples,
                         std::uint64_t seed, unsigned threads) {
    IdealReport report;
    const Polynomial dm = delta(hook_mu);

    // generator family
    auto gens = theorem2_generators(hook_mu);
    std::vector<std::uint8_t> ok(gens.size(), 0);
    parallel_for(gens.size(), threads, [&](std::size_t i) {
        ok[i] = annihilates(gens[i].second, dm) ? 1 : 0;
    });
    for (std::size_t i = 0; i < gens.size(); ++i) {
        report.generators.entries.push_back({gens[i].first, ok[i] != 0});
        if (!ok[i]) report.generators.all_ok = false;
    }

    // randomized propositions
    Rng rng(seed);
    std::vector<GeneratorSpec> specs;
    for (auto kind : {GeneratorSpec::Kind::prop1, GeneratorSpec::Kind::prop2,
                      GeneratorSpec::Kind::prop3a, GeneratorSpec::Kind::prop3b}) {
        auto batch = sample_proposition_specs(kind, hook_mu, samples, rng);
        specs.insert(specs.end(), batch.begin(), batch.end());
    }
    std::vector<std::uint8_t> pok(specs.size(), 0);
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        pok[i] = annihilates(proposition_witness(specs[i], hook_mu), dm) ? 1 : 0;
    });
    for (std::size_t i = 0; i < specs.size(); ++i) {
        report.propositions.entries.push_back({specs[i], pok[i] != 0});
        if (!pok[i]) report.propositions.all_ok = false;
    }

    report.observation4 = observation4_check(hook_mu, samples, seed);
    report.all_ok = report.generators.all_ok && report.propositions.all_ok &&
                    report.observation4.all_ok;
    return report;
}

} // namespace hookbasis
