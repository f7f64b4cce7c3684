#pragma once

#include "hookbasis/partition.hpp"
#include "hookbasis/polynomial.hpp"
#include "hookbasis/rng.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hookbasis {

/// Describes one polynomial known (or claimed) to lie in the annihilator
/// ideal of delta_mu. The h/xy/squarefree kinds are the hook generator
/// family; prop1..prop3b are the side-condition witnesses; diag_power is
/// the polarized power sum sum_i x_i^k y_i^l.
struct GeneratorSpec {
    enum class Kind {
        h_x,          // h_k over x-indices in set1
        h_y,          // h_k over y-indices in set1
        xy_diag,      // x_i y_i with i = set1[0]
        squarefree_x, // product of x_i over set1
        squarefree_y, // product of y_i over set1
        prop1,        // h_k(Y), k + |Y| > n
        prop2,        // Ybar * h_k(Y'), k + |Y| > K, Y in Y' (set1 = Y, set2 = Y')
        prop3a,       // h_k(Y) h_l(X), Y in X indexwise, k+l+|Y| > n (set1 = Y, set2 = X)
        prop3b,       // h_k(Y) h_l(X), X in Y indexwise, k+l+|X| > n (set1 = Y, set2 = X)
        diag_power,   // sum_i x_i^k y_i^l, k + l >= 1
    };

    Kind kind;
    unsigned k = 0;
    unsigned l = 0;
    std::vector<std::size_t> set1; // 1-based variable indices
    std::vector<std::size_t> set2;

    std::string label() const;
    nlohmann::json to_json() const;
};

/// The generator list for the annihilator ideal of a hook (K+1, 1^L):
/// h_i in all x's and in all y's for 1 <= i <= n, the diagonal products
/// x_i y_i, the squarefree x-monomials of degree L+1 and the squarefree
/// y-monomials of degree K+1.
std::vector<std::pair<GeneratorSpec, Polynomial>>
theorem2_generators(const Partition& hook_mu);

/// True iff p(d) delta_mu = 0.
bool annihilates(const Polynomial& p, const Polynomial& delta_mu);
bool annihilates(const Polynomial& p, const Partition& mu);

/// Builds the polynomial named by a prop1/prop2/prop3a/prop3b spec,
/// validating its side conditions (throws std::invalid_argument when
/// violated). Callers assert that the result annihilates delta_mu.
Polynomial proposition_witness(const GeneratorSpec& spec, const Partition& mu);

/// Draws `count` random parameter choices for the given proposition kind,
/// valid for the hook mu.
std::vector<GeneratorSpec> sample_proposition_specs(GeneratorSpec::Kind kind,
                                                    const Partition& mu,
                                                    std::size_t count, Rng& rng);

struct AnnihilationEntry {
    GeneratorSpec spec;
    bool annihilates = false;
};

struct AnnihilationReport {
    std::vector<AnnihilationEntry> entries;
    bool all_ok = true;
    nlohmann::json to_json() const; // list of {"generator":..., "annihilates":...}
};

/// Samples symmetric witnesses -- power sums in x alone, in y alone, and
/// polarized power sums sum_i x_i^r y_i^s with r+s >= 1 -- and checks that
/// each annihilates delta_mu.
AnnihilationReport observation4_check(const Partition& mu, std::size_t samples,
                                      std::uint64_t seed);

/// Full ideal suite behind `verify ideal`: generator annihilation,
/// randomized propositions 1-3, and the observation-4 sample.
struct IdealReport {
    AnnihilationReport generators;
    AnnihilationReport propositions;
    AnnihilationReport observation4;
    bool all_ok = true;
    nlohmann::json to_json() const;
};

IdealReport verify_ideal(const Partition& hook_mu, std::size_t samples,
                         std::uint64_t seed, unsigned threads = 0);

} // namespace hookbasis
