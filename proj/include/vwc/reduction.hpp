#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vwc/classify.hpp"
#include "vwc/graph.hpp"

namespace vwc {

/// Semidirected graph on pair indices [n): directed edge (i, j) for every
/// cross edge x_i y_j of the labeled graph, undirected edge {i, j} for every
/// cover-side edge x_i x_j. For an unmixed graph no pair is both.
struct SemiDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> directed;   // (from, to), sorted, no loops
    std::vector<std::pair<int, int>> undirected; // lo < hi, sorted

    bool has_directed(int i, int j) const;
    bool has_undirected(int i, int j) const;
};

SemiDigraph build_semidigraph(const Graph& g, const VwcLabeling& lab);

/// reach[i] = mask of vertices j with a directed path from i to j of length
/// at least one.
std::vector<std::uint64_t> directed_reachability(const SemiDigraph& d);

/// Strong components of the directed part, listed in topological order of
/// the condensation with ties broken by least contained index; component_of
/// maps a vertex to its component's position in that list.
struct ComponentPartition {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;

    int count() const { return static_cast<int>(components.size()); }
};

ComponentPartition strong_components(const SemiDigraph& d);

/// A violation of transitive closure: either directed edges i->j, j->k with
/// i->k missing, or an undirected edge {i, j} plus directed k->j with {i, k}
/// missing.
struct ClosureCounterexample {
    int i = 0, j = 0, k = 0;
    bool undirected_rule = false;
};

std::optional<ClosureCounterexample> transitive_closure_violation(const SemiDigraph& d);
inline bool is_transitively_closed(const SemiDigraph& d) {
    return !transitive_closure_violation(d).has_value();
}

/// Acyclic reduction: contract strong components of the semidirected graph,
/// take directed edges of the contraction by reachability, and realize the
/// result as a graph on fresh vertices u_1..u_t, v_1..v_t with edges u_a v_a,
/// u_a v_b for directed a->b, u_a u_b for undirected {a, b}.
struct AcyclicReduction {
    Graph ghat;
    SemiDigraph dhat; // on component indices; acyclic
    ComponentPartition partition;
    VwcLabeling ghat_labeling; // the canonical (u_a, v_a) pairs
};

AcyclicReduction acyclic_reduction(const Graph& g, const VwcLabeling& lab);

/// All antichains of d (sets with no directed path between distinct members),
/// the empty set included, in lexicographic order.
std::vector<std::vector<int>> antichains(const SemiDigraph& d);

/// Upward component closure of an antichain: the union of all components
/// reachable (weakly) from the components of the antichain's members.
/// Throws PreconditionError when a is not an antichain of d.
std::vector<int> omega(const SemiDigraph& d, const ComponentPartition& part,
                       const std::vector<int>& a);

/// A height-n monomial prime: x-generators for indices outside the closure,
/// y-generators inside it.
struct VertexCoverPrime {
    std::vector<int> xs;
    std::vector<int> ys;

    friend bool operator==(const VertexCoverPrime&, const VertexCoverPrime&) = default;
};

/// Associated primes of the edge ideal, parametrized by the antichains of the
/// contracted semidirected graph whose closure contains no undirected edge.
/// For a very well-covered graph this is exactly the set of minimal vertex
/// covers, split into sides.
std::vector<VertexCoverPrime> associated_primes(const Graph& g, const VwcLabeling& lab);

/// The antichain formula evaluated independently over the semidirected graph
/// itself and over its acyclic contraction; both maxima exclude antichains
/// whose closure contains an undirected edge of the base semidirected graph.
/// The two routes are asserted equal.
struct AntichainRegularity {
    int value = 0;
    std::vector<int> witness; // an antichain of the base semidirected graph
    int via_base = 0;
    int via_reduction = 0;
};

AntichainRegularity antichain_regularity(const Graph& g, const VwcLabeling& lab);

/// Same edge-list format as graphs, with directed edges marked by '>'
/// (e.g. "1 > 2"); indices printed 1-based.
std::string to_edge_list(const SemiDigraph& d);

} // namespace vwc
