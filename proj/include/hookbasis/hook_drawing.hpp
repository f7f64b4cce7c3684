#pragma once

#include "hookbasis/partition.hpp"
#include "hookbasis/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace hookbasis {

/// A drawing for the hook (K+1, 1^L): K y-columns above the axis with
/// heights K..1 left to right, L x-columns below it with depths L..1,
/// interleaved freely, each column carrying a number of axis-adjacent
/// crosses. Cross counts obey:
///   1. x-columns: any count up to the depth;
///   2. a y-column with an x-column somewhere to its right looks at the
///      leftmost such column that is uniform (all crossed or all blank;
///      the depth-1 column always qualifies): all blank forces at least
///      one cross, all crossed forces at least one blank;
///   3. a y-column with no x-column to its right is unconstrained.
class HookDrawing {
public:
    HookDrawing(unsigned K, unsigned L, std::vector<Axis> shape,
                std::vector<std::uint32_t> crosses); // validates the rules

    unsigned K() const { return K_; }
    unsigned L() const { return L_; }
    std::size_t places() const { return shape_.size(); } // K + L

    Axis axis(std::size_t place) const { return shape_.at(place - 1); } // 1-based
    std::uint32_t column_size(std::size_t place) const { return sizes_.at(place - 1); }
    std::uint32_t crosses(std::size_t place) const { return crosses_.at(place - 1); }
    std::uint32_t blanks(std::size_t place) const {
        return column_size(place) - crosses(place);
    }

    const std::vector<Axis>& shape() const { return shape_; }
    const std::vector<std::uint32_t>& cross_counts() const { return crosses_; }
    std::string shape_word() const; // "YXYY..."

    bool operator==(const HookDrawing&) const = default;

    static bool rules_satisfied(const std::vector<Axis>& shape,
                                const std::vector<std::uint32_t>& sizes,
                                const std::vector<std::uint32_t>& crosses);

    /// {"shape":"YX...","crosses":[...]}
    nlohmann::json to_json() const;
    static HookDrawing from_json(const nlohmann::json& j);

private:
    unsigned K_ = 0, L_ = 0;
    std::vector<Axis> shape_;
    std::vector<std::uint32_t> sizes_;
    std::vector<std::uint32_t> crosses_;
};

/// Visits every valid drawing exactly once: shape words in lex order with
/// Y < X, cross vectors in ascending lex order within a shape.
void for_each_drawing(unsigned K, unsigned L,
                      const std::function<void(const HookDrawing&)>& visit);

std::vector<HookDrawing> enumerate_drawings(unsigned K, unsigned L);

std::uint64_t count_drawings(unsigned K, unsigned L);

/// Evaluates the closed-form count as the explicit sum over the split
/// K = k1 + k2:
///   (k1+1)! * K!/k1! * (L+1)! * C(k2+L-1, k2)
/// which telescopes to (K+L+1)! by Chu-Vandermonde. Returned unsummed
/// against nothing -- callers compare with factorial(K+L+1).
std::uint64_t count_formula(unsigned K, unsigned L);

/// Exchanges crossed and blank cells. An involution on the drawing family.
HookDrawing flip(const HookDrawing& d);

/// The derivative operators of a drawing, as monomials in n = K+L+1
/// variables: place i maps to variable i, variable n is never used.
/// s_op collects crossed cells, t_op blank cells.
struct DrawingOperators {
    Monomial s_op;
    Monomial t_op;
};
DrawingOperators operators(const HookDrawing& d);

/// Per-place crossed/blank counts (the S and T cell sets).
struct CellCounts {
    Axis axis;
    std::uint32_t crossed;
    std::uint32_t blank;
};
std::vector<CellCounts> cell_sets(const HookDrawing& d);

/// True iff child's crossed-cell operator composed with parent's
/// blank-cell operator sends delta_mu to a nonzero (integer) constant,
/// i.e. child is a child of parent in the descendant relation.
bool is_child(const HookDrawing& parent, const HookDrawing& child,
              const Polynomial& delta_mu);

struct ChildrenGraph {
    std::size_t nodes = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // parent -> child
    nlohmann::json to_json() const; // {"nodes":[ids],"edges":[[i,j],...]}
};

inline constexpr unsigned default_graph_bound = 6;

/// Runs is_child over all ordered pairs of drawings; node ids are
/// enumeration ranks. Throws ResourceError when K+L+1 exceeds the bound.
ChildrenGraph children_graph(unsigned K, unsigned L, unsigned threads = 0,
                             unsigned max_n = 0);

bool is_acyclic(const ChildrenGraph& graph);

/// Property behind the flip/child duality: child(a -> b) iff
/// child(flip(b) -> flip(a)). Returns whether both sides agree.
bool flip_child_duality(const HookDrawing& a, const HookDrawing& b,
                        const Polynomial& delta_mu);

/// Superposition of a's blank cells with b's crossed cells: per place,
/// the (y_total, x_total) cell counts.
struct SuperposedPlace {
    std::uint32_t y_total = 0;
    std::uint32_t x_total = 0;
};
std::vector<SuperposedPlace> superpose(const HookDrawing& a, const HookDrawing& b);

/// Checks completeness on places 1..k of the superposition: wherever
/// either drawing carries a y-column the superposed heights must read
/// K, K-1, ... in order, and likewise L, L-1, ... for x-columns.
bool is_complete_prefix(const HookDrawing& a, const HookDrawing& b, std::size_t k);

} // namespace hookbasis
