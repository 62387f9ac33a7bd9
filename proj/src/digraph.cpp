#include "ocycles/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ocycles/error.hpp"

namespace ocycles {

std::optional<std::size_t> TransitionDigraph::vertex_index(const Word& v) const {
    const auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TransitionDigraph build_digraph(std::span<const Word> objects, std::size_t s) {
    if (objects.empty()) throw ParameterError("object set must be nonempty");
    const std::size_t n = objects.front().size();
    for (const Word& w : objects) {
        if (w.size() != n) throw ParameterError("objects must share a common length");
    }
    if (s < 1 || s + 1 > n) throw ParameterError("overlap s must satisfy 1 <= s <= n-1");

    std::vector<Word> labels(objects.begin(), objects.end());
    std::sort(labels.begin(), labels.end());
    if (const auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
        throw ParameterError("duplicate object " + dup->str());
    }

    TransitionDigraph g;
    g.overlap_ = s;
    g.word_length_ = n;

    std::set<Word> vertex_set;
    for (const Word& w : labels) {
        vertex_set.insert(w.prefix(s));
        vertex_set.insert(w.suffix(s));
    }
    g.vertices_.assign(vertex_set.begin(), vertex_set.end());
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.index_.emplace(g.vertices_[i], i);

    g.out_.resize(g.vertices_.size());
    g.in_degree_.assign(g.vertices_.size(), 0);
    g.edges_.reserve(labels.size());
    for (Word& w : labels) {
        const std::size_t e = g.edges_.size();
        const std::size_t t = g.index_.at(w.prefix(s));
        const std::size_t h = g.index_.at(w.suffix(s));
        g.edges_.push_back(Edge{g.vertices_[t], g.vertices_[h], std::move(w)});
        g.tails_.push_back(t);
        g.heads_.push_back(h);
        // Labels were sorted, so each out-list is filled in label order.
        g.out_[t].push_back(e);
        ++g.in_degree_[h];
    }
    return g;
}

std::optional<std::size_t> first_unbalanced_vertex(const TransitionDigraph& g) {
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        if (g.in_degree(v) != g.out_degree(v)) return v;
    }
    return std::nullopt;
}

bool is_balanced(const TransitionDigraph& g) { return !first_unbalanced_vertex(g).has_value(); }

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // The smaller root wins, so each root is its component's least vertex.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

std::vector<std::size_t> component_labels(const TransitionDigraph& g) {
    const std::size_t nv = g.vertices().size();
    DisjointSets sets(nv);
    for (std::size_t e = 0; e < g.edges().size(); ++e) sets.unite(g.tail_index(e), g.head_index(e));

    std::vector<std::size_t> labels(nv);
    std::map<std::size_t, std::size_t> root_to_id;
    for (std::size_t v = 0; v < nv; ++v) {
        const auto [it, inserted] = root_to_id.emplace(sets.find(v), root_to_id.size());
        labels[v] = it->second;
    }
    return labels;
}

std::vector<std::vector<Word>> weak_components(const TransitionDigraph& g) {
    const auto labels = component_labels(g);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Word>> out(count);
    for (std::size_t v = 0; v < labels.size(); ++v) out[labels[v]].push_back(g.vertices()[v]);
    return out;
}

EulerTour euler_tour(const TransitionDigraph& g) {
    if (const auto bad = first_unbalanced_vertex(g)) {
        const Word& v = g.vertices()[*bad];
        std::ostringstream msg;
        msg << "graph is not balanced: vertex " << v.str() << " has in-degree " << g.in_degree(*bad)
            << " and out-degree " << g.out_degree(*bad);
        throw InfeasibleError(InfeasibleReason::Unbalanced, {v}, msg.str());
    }
    const auto components = weak_components(g);
    if (components.size() > 1) {
        std::ostringstream msg;
        msg << "graph is not weakly connected: " << components.size() << " components; vertices "
            << components[0].front().str() << " and " << components[1].front().str()
            << " lie in different components";
        throw InfeasibleError(InfeasibleReason::Disconnected, {components[0].front(), components[1].front()},
                              msg.str());
    }

    // Iterative Hierholzer. `next` is the position of the least unused edge
    // in each vertex's sorted out-list.
    std::vector<std::size_t> next(g.vertices().size(), 0);
    std::vector<std::size_t> circuit;
    circuit.reserve(g.edges().size());
    struct Frame {
        std::size_t vertex;
        std::size_t via_edge;
    };
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<Frame> stack{{0, kNone}};
    while (!stack.empty()) {
        const std::size_t v = stack.back().vertex;
        if (next[v] < g.out_degree(v)) {
            const std::size_t e = g.out_edges(v)[next[v]++];
            stack.push_back({g.head_index(e), e});
        } else {
            if (stack.back().via_edge != kNone) circuit.push_back(stack.back().via_edge);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    EulerTour tour;
    tour.overlap = g.overlap();
    tour.edges.reserve(circuit.size());
    for (std::size_t e : circuit) tour.edges.push_back(g.edges()[e]);
    return tour;
}

}  // namespace ocycles
