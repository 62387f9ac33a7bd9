#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocycles/word.hpp"

namespace ocycles {

/// One object X, drawn from its s-prefix to its s-suffix.
struct Edge {
    Word tail;
    Word head;
    Word label;
};

/// The s-overlap transition multigraph of a set of equal-length words.
///
/// Vertices are the length-s words that occur as a prefix or suffix of some
/// object; every object contributes one edge. Vertex indices follow the
/// lexicographic order of the vertex words and each out-list is sorted by
/// edge label, so every traversal below is deterministic.
class TransitionDigraph {
public:
    std::size_t overlap() const noexcept { return overlap_; }
    std::size_t word_length() const noexcept { return word_length_; }

    const std::vector<Word>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::optional<std::size_t> vertex_index(const Word& v) const;

    std::size_t tail_index(std::size_t edge) const { return tails_[edge]; }
    std::size_t head_index(std::size_t edge) const { return heads_[edge]; }
    /// Edge indices leaving vertex v, in increasing label order.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
    std::size_t in_degree(std::size_t v) const { return in_degree_[v]; }

private:
    friend TransitionDigraph build_digraph(std::span<const Word> objects, std::size_t s);

    std::size_t overlap_ = 0;
    std::size_t word_length_ = 0;
    std::vector<Word> vertices_;
    std::map<Word, std::size_t> index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> tails_;
    std::vector<std::size_t> heads_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> in_degree_;
};

/// Requires a nonempty, duplicate-free set of words of common length n and
/// 1 <= s <= n-1; throws ParameterError otherwise.
TransitionDigraph build_digraph(std::span<const Word> objects, std::size_t s);

/// Every vertex has in-degree equal to out-degree.
bool is_balanced(const TransitionDigraph& g);

/// Least vertex whose in- and out-degree differ, if any.
std::optional<std::size_t> first_unbalanced_vertex(const TransitionDigraph& g);

/// Component id per vertex index for the underlying undirected multigraph.
/// Ids are numbered by the least vertex they contain.
std::vector<std::size_t> component_labels(const TransitionDigraph& g);

/// Weakly connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Word>> weak_components(const TransitionDigraph& g);

/// A closed walk through every edge once.
struct EulerTour {
    std::size_t overlap = 0;
    std::vector<Edge> edges;
};

enum class InfeasibleReason { Unbalanced, Disconnected };

/// The graph has no Euler tour. `witness` holds the offending vertex for
/// Unbalanced, or one representative from each of two components for
/// Disconnected.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(InfeasibleReason reason, std::vector<Word> witness, const std::string& what)
        : std::runtime_error(what), reason_(reason), witness_(std::move(witness)) {}

    InfeasibleReason reason() const noexcept { return reason_; }
    const std::vector<Word>& witness() const noexcept { return witness_; }

private:
    InfeasibleReason reason_;
    std::vector<Word> witness_;
};

/// Hierholzer's algorithm starting from the least vertex and always leaving
/// along the unused edge with the least label. Throws InfeasibleError when
/// the graph is unbalanced or not weakly connected.
EulerTour euler_tour(const TransitionDigraph& g);

}  // namespace ocycles
