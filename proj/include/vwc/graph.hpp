#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vwc/errors.hpp"

namespace vwc {

/// Bitmask over vertex indices. All graphs are capped at 64 vertices, which
/// is far beyond the exhaustive searches in this library anyway.
using VertexMask = std::uint64_t;

/// Undirected edge as a normalized (lo < hi) pair of vertex indices.
struct Edge {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph over named vertices.
///
/// Vertex identity is the string label; the order in which labels are first
/// registered is fixed and determines all iteration and tie-breaking in the
/// rest of the library, so results are reproducible.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    /// Registers a vertex (idempotent) and returns its index.
    int add_vertex(const std::string& label);

    /// Adds an undirected edge, registering unseen endpoint labels in order.
    /// Throws GraphError on loops and duplicate edges.
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<int> index_of(const std::string& label) const;

    bool has_edge(int u, int v) const;
    bool has_edge(const std::string& a, const std::string& b) const;

    /// Edges sorted lexicographically by (lo, hi).
    const std::vector<Edge>& edges() const { return edges_; }

    VertexMask adjacency(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const;
    bool is_isolated(int v) const { return adjacency(v) == 0; }

    VertexMask all_vertices_mask() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<VertexMask> adj_;
    std::vector<Edge> edges_; // kept sorted
};

/// Result of the well-coveredness test.
struct WellCoveredness {
    bool well_covered = false;
    bool very_well_covered = false;
    /// Common (maximum) size of the maximal independent sets.
    int independence_number = 0;
    /// First isolated vertex, when one exists.
    std::optional<std::string> isolated_vertex;
    /// Two maximal independent sets of different sizes (smaller first), when
    /// equicardinality fails.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> unequal_witness;
};

/// A pairwise 3-disjoint set of edges certifying the value of a(G).
struct DisjointWitness {
    std::vector<Edge> edges;
    int size = 0;
};

/// Subgraph induced on the given labels; vertex order is inherited from g.
/// Throws GraphError on unknown labels.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);
Graph induced_subgraph(const Graph& g, VertexMask keep);

/// All inclusion-maximal independent sets, each sorted by vertex index, the
/// list sorted lexicographically. The empty graph yields [{}]. Complements
/// are exactly the minimal vertex covers.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);
std::vector<VertexMask> maximal_independent_set_masks(const Graph& g);

WellCoveredness is_well_covered(const Graph& g);

/// True iff the four endpoints are distinct and the subgraph induced on them
/// has exactly the two edges e and f. Throws GraphError when an edge is not
/// in g.
bool three_disjoint(const Graph& g, Edge e, Edge f);
bool three_disjoint(const Graph& g, const std::string& a, const std::string& b,
                    const std::string& c, const std::string& d);

/// Maximum pairwise 3-disjoint edge set, computed exactly as a maximum clique
/// in the compatibility graph whose vertices are the edges of g.
DisjointWitness max_three_disjoint(const Graph& g);

/// Copy of g without its isolated vertices; removed labels are appended to
/// *removed when given.
Graph strip_isolated(const Graph& g, std::vector<std::string>* removed = nullptr);

/// Edge-list text format: one edge per line as two whitespace-separated
/// labels, lines starting with '#' ignored, a line with a single label
/// declares an isolated vertex. Throws ParseError (with line number) on
/// malformed lines, loops, duplicate edges, and entirely empty input.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Canonical serialization: every vertex on its own line in registration
/// order, then all edges in lexicographic order. Parsing it reproduces the
/// graph exactly, including vertex order.
std::string to_edge_list(const Graph& g);

/// FNV-1a digest of the canonical serialization, as 16 hex characters.
std::string digest(const Graph& g);

std::vector<int> mask_to_indices(VertexMask m);
VertexMask indices_to_mask(const std::vector<int>& idx);

/// Lexicographic comparison of masks viewed as sorted index sequences.
bool mask_sequence_less(VertexMask a, VertexMask b);

} // namespace vwc
