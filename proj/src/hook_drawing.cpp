#include "hookbasis/hook_drawing.hpp"

#include "hookbasis/errors.hpp"
#include "hookbasis/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookbasis {

namespace {

std::vector<std::uint32_t> column_sizes(unsigned K, unsigned L,
                                        const std::vector<Axis>& shape) {
    std::vector<std::uint32_t> sizes(shape.size(), 0);
    std::uint32_t next_y = K, next_x = L;
    for (std::size_t i = 0; i < shape.size(); ++i)
        sizes[i] = shape[i] == Axis::Y ? next_y-- : next_x--;
    return sizes;
}

} // namespace

bool HookDrawing::rules_satisfied(const std::vector<Axis>& shape,
                                  const std::vector<std::uint32_t>& sizes,
                                  const std::vector<std::uint32_t>& crosses) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (crosses[i] > sizes[i]) return false;
        if (shape[i] == Axis::X) continue;
        // leftmost uniform x-column to the right decides the y-constraint
        for (std::size_t j = i + 1; j < shape.size(); ++j) {
            if (shape[j] != Axis::X) continue;
            if (crosses[j] == 0) { // uniform blank
                if (crosses[i] < 1) return false;
                break;
            }
            if (crosses[j] == sizes[j]) { // uniform crossed
                if (crosses[i] > sizes[i] - 1) return false;
                break;
            }
            // mixed column: keep scanning; the depth-1 column is always uniform
        }
    }
    return true;
}

HookDrawing::HookDrawing(unsigned K, unsigned L, std::vector<Axis> shape,
                         std::vector<std::uint32_t> crosses)
    : K_(K), L_(L), shape_(std::move(shape)), crosses_(std::move(crosses)) {
    if (shape_.size() != static_cast<std::size_t>(K) + L ||
        crosses_.size() != shape_.size())
        throw std::invalid_argument("drawing shape/cross sizes inconsistent");
    unsigned ys = 0;
    for (Axis a : shape_)
        if (a == Axis::Y) ++ys;
    if (ys != K)
        throw std::invalid_argument("drawing shape has the wrong number of y-columns");
    sizes_ = column_sizes(K_, L_, shape_);
    if (!rules_satisfied(shape_, sizes_, crosses_))
        throw std::invalid_argument("drawing violates the cross rules");
}

std::string HookDrawing::shape_word() const {
    std::string w;
    for (Axis a : shape_) w += a == Axis::Y ? 'Y' : 'X';
    return w;
}

nlohmann::json HookDrawing::to_json() const {
    return {{"shape", shape_word()}, {"crosses", crosses_}};
}

HookDrawing HookDrawing::from_json(const nlohmann::json& j) {
    std::string word = j.at("shape").get<std::string>();
    std::vector<std::uint32_t> crosses =
        j.at("crosses").get<std::vector<std::uint32_t>>();
    std::vector<Axis> shape;
    unsigned K = 0, L = 0;
    for (char ch : word) {
        if (ch == 'Y') {
            shape.push_back(Axis::Y);
            ++K;
        } else if (ch == 'X') {
            shape.push_back(Axis::X);
            ++L;
        } else {
            throw std::invalid_argument("bad shape word");
        }
    }
    return HookDrawing(K, L, std::move(shape), std::move(crosses));
}

void for_each_drawing(unsigned K, unsigned L,
                      const std::function<void(const HookDrawing&)>& visit) {
    // shape words in lex order with Y < X
    std::vector<int> word(K, 0);
    word.insert(word.end(), L, 1);
    do {
        std::vector<Axis> shape(word.size());
        for (std::size_t i = 0; i < word.size(); ++i)
            shape[i] = word[i] == 0 ? Axis::Y : Axis::X;
        const auto sizes = column_sizes(K, L, shape);

        // cross vectors in ascending lex order: odometer, rightmost place
        // least significant
        std::vector<std::uint32_t> crosses(shape.size(), 0);
        bool more = true;
        while (more) {
            if (HookDrawing::rules_satisfied(shape, sizes, crosses))
                visit(HookDrawing(K, L, shape, crosses));
            more = false;
            for (std::size_t i = crosses.size(); i > 0; --i) {
                if (crosses[i - 1] < sizes[i - 1]) {
                    ++crosses[i - 1];
                    more = true;
                    break;
                }
                crosses[i - 1] = 0; // carry
            }
        }
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<HookDrawing> enumerate_drawings(unsigned K, unsigned L) {
    std::vector<HookDrawing> out;
    for_each_drawing(K, L, [&](const HookDrawing& d) { out.push_back(d); });
    return out;
}

std::uint64_t count_drawings(unsigned K, unsigned L) {
    std::uint64_t count = 0;
    for_each_drawing(K, L, [&](const HookDrawing&) { ++count; });
    return count;
}

std::uint64_t count_formula(unsigned K, unsigned L) {
    // sum over K = k1 + k2 of
    //   [2*3*...*(k1+1)] * [(k1+1)*...*(k1+k2)] * (L+1)! * C(k2+L-1, k2)
    // = (k1+1)! * K!/k1! * (L+1)! * C(k2+L-1, k2)
    std::uint64_t total = 0;
    for (unsigned k2 = 0; k2 <= K; ++k2) {
        unsigned k1 = K - k2;
        std::uint64_t binom;
        if (k2 == 0)
            binom = 1; // empty choice, even when L = 0 makes the top index -1
        else if (L == 0)
            binom = 0;
        else
            binom = binomial(k2 + L - 1, k2);
        std::uint64_t term = factorial(k1 + 1) * (factorial(K) / factorial(k1));
        term *= factorial(L + 1);
        term *= binom;
        total += term;
    }
    return total;
}

HookDrawing flip(const HookDrawing& d) {
    std::vector<std::uint32_t> crosses(d.places());
    for (std::size_t p = 1; p <= d.places(); ++p)
        crosses[p - 1] = d.column_size(p) - d.crosses(p);
    return HookDrawing(d.K(), d.L(), d.shape(), std::move(crosses));
}

DrawingOperators operators(const HookDrawing& d) {
    const std::size_t n = static_cast<std::size_t>(d.K()) + d.L() + 1;
    DrawingOperators ops{Monomial(n), Monomial(n)};
    for (std::size_t p = 1; p <= d.places(); ++p) {
        Axis a = d.axis(p);
        ops.s_op.set_exp(a, p, d.crosses(p));
        ops.t_op.set_exp(a, p, d.blanks(p));
    }
    return ops;
}

std::vector<CellCounts> cell_sets(const HookDrawing& d) {
    std::vector<CellCounts> cells;
    cells.reserve(d.places());
    for (std::size_t p = 1; p <= d.places(); ++p)
        cells.push_back({d.axis(p), d.crosses(p), d.blanks(p)});
    return cells;
}

bool is_child(const HookDrawing& parent, const HookDrawing& child,
              const Polynomial& delta_mu) {
    if (parent.K() != child.K() || parent.L() != child.L())
        throw std::invalid_argument("drawings have different (K, L)");
    if (parent == child)
        throw std::invalid_argument("child relation needs distinct drawings");
    const auto t = operators(parent).t_op;
    const auto s1 = operators(child).s_op;
    Polynomial r = apply_diff_operator(Polynomial::from_monomial(s1), delta_mu);
    if (r.is_zero()) return false;
    r = apply_diff_operator(Polynomial::from_monomial(t), r);
    return !r.is_zero() && r.is_nonzero_integer_constant();
}

ChildrenGraph children_graph(unsigned K, unsigned L, unsigned threads,
                             unsigned max_n) {
    const unsigned n = K + L + 1;
    const unsigned bound = max_n > 0 ? max_n : effective_bound(default_graph_bound);
    if (n > bound)
        throw ResourceError("children graph bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(bound));

    const auto drawings = enumerate_drawings(K, L);
    const std::size_t N = drawings.size();
    const Polynomial dm = delta(hook_partition(K, L), n);

    // degree profile shortcut: the composite must be a full-order
    // derivative of the bihomogeneous delta to land in the constants
    std::vector<std::uint64_t> t_x(N), t_y(N), s_x(N), s_y(N);
    for (std::size_t i = 0; i < N; ++i) {
        auto ops = operators(drawings[i]);
        t_x[i] = ops.t_op.degree(Axis::X);
        t_y[i] = ops.t_op.degree(Axis::Y);
        s_x[i] = ops.s_op.degree(Axis::X);
        s_y[i] = ops.s_op.degree(Axis::Y);
    }
    const std::uint64_t full_x = static_cast<std::uint64_t>(L) * (L + 1) / 2;
    const std::uint64_t full_y = static_cast<std::uint64_t>(K) * (K + 1) / 2;

    std::vector<std::uint8_t> adjacency(N * N, 0);
    parallel_for(N * N, threads, [&](std::size_t idx) {
        std::size_t i = idx / N, j = idx % N;
        if (i == j) return;
        if (t_x[i] + s_x[j] != full_x || t_y[i] + s_y[j] != full_y) return;
        if (is_child(drawings[i], drawings[j], dm)) adjacency[idx] = 1;
    });

    ChildrenGraph g;
    g.nodes = N;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (adjacency[i * N + j])
                g.edges.emplace_back(static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j));
    return g;
}

nlohmann::json ChildrenGraph::to_json() const {
    nlohmann::json nodes_json = nlohmann::json::array();
    for (std::size_t i = 0; i < nodes; ++i) nodes_json.push_back(i);
    nlohmann::json edges_json = nlohmann::json::array();
    for (const auto& [a, b] : edges) edges_json.push_back({a, b});
    return {{"nodes", nodes_json}, {"edges", edges_json}};
}

bool is_acyclic(const ChildrenGraph& graph) {
    std::vector<std::vector<std::uint32_t>> out(graph.nodes);
    std::vector<std::size_t> indegree(graph.nodes, 0);
    for (const auto& [a, b] : graph.edges) {
        out[a].push_back(b);
        ++indegree[b];
    }
    std::vector<std::uint32_t> queue;
    for (std::size_t i = 0; i < graph.nodes; ++i)
        if (indegree[i] == 0) queue.push_back(static_cast<std::uint32_t>(i));
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::uint32_t v = queue.back();
        queue.pop_back();
        ++seen;
        for (std::uint32_t w : out[v])
            if (--indegree[w] == 0) queue.push_back(w);
    }
    return seen == graph.nodes;
}

bool flip_child_duality(const HookDrawing& a, const HookDrawing& b,
                        const Polynomial& delta_mu) {
    return is_child(a, b, delta_mu) == is_child(flip(b), flip(a), delta_mu);
}

std::vector<SuperposedPlace> superpose(const HookDrawing& a, const HookDrawing& b) {
    if (a.K() != b.K() || a.L() != b.L())
        throw std::invalid_argument("drawings have different (K, L)");
    std::vector<SuperposedPlace> places(a.places());
    for (std::size_t p = 1; p <= a.places(); ++p) {
        SuperposedPlace& sp = places[p - 1];
        if (a.axis(p) == Axis::Y)
            sp.y_total += a.blanks(p);
        else
            sp.x_total += a.blanks(p);
        if (b.axis(p) == Axis::Y)
            sp.y_total += b.crosses(p);
        else
            sp.x_total += b.crosses(p);
    }
    return places;
}

bool is_complete_prefix(const HookDrawing& a, const HookDrawing& b, std::size_t k) {
    if (k > a.places()) throw std::out_of_range("prefix length exceeds place count");
    const auto places = superpose(a, b);
    std::uint32_t expect_y = a.K(), expect_x = a.L();
    for (std::size_t p = 1; p <= k; ++p) {
        bool y_present = a.axis(p) == Axis::Y || b.axis(p) == Axis::Y;
        bool x_present = a.axis(p) == Axis::X || b.axis(p) == Axis::X;
        if (y_present) {
            if (expect_y == 0 || places[p - 1].y_total != expect_y) return false;
            --expect_y;
        }
        if (x_present) {
            if (expect_x == 0 || places[p - 1].x_total != expect_x) return false;
            --expect_x;
        }
    }
    return true;
}

} // namespace hookbasis
