#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vwc/graph.hpp"

namespace vwc {

/// A labeling of a 2n-vertex graph as matching pairs (x_i, y_i) such that
/// {x_i y_i} is a perfect matching, X = {x_1..x_n} is a minimal vertex cover
/// and Y = {y_1..y_n} is a maximal independent set. Pair indices are 0-based
/// internally and reported 1-based.
struct VwcLabeling {
    std::vector<std::pair<int, int>> pairs; // (x_i, y_i) vertex indices

    int size() const { return static_cast<int>(pairs.size()); }
    int x(int i) const { return pairs[static_cast<std::size_t>(i)].first; }
    int y(int i) const { return pairs[static_cast<std::size_t>(i)].second; }
    VertexMask x_mask() const;
    VertexMask y_mask() const;
};

/// Throws LabelingError unless lab satisfies all of its invariants for g.
void validate_labeling(const Graph& g, const VwcLabeling& lab);

/// Deterministic labeling construction: the lexicographically first perfect
/// matching, then a backtracking search with unit propagation over the two
/// endpoint choices per pair. Within a pair the endpoint of smaller degree
/// is preferred as y_i, ties broken toward the later vertex. Returns nullopt
/// when no perfect matching or no independent transversal exists (in
/// particular for every graph that is not very well-covered).
std::optional<VwcLabeling> find_vwc_labeling(const Graph& g);

enum class ViolationKind {
    IsolatedVertex,
    UnequalIndependentSets,
    NotVeryWellCovered,
    NoLabeling,
    ClosureViolation,   // z_i x_j, y_j x_k present but z_i x_k missing
    CrossEdgeConflict,  // x_i y_j and x_i x_j both present
    NoAscendingRelabeling,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<int> indices;          // 1-based pair indices involved
    std::vector<std::string> vertices; // labels involved
    std::string detail;
};

/// Unmixedness conditions on a labeled graph: for all distinct i, j, k and
/// z_i in {x_i, y_i}, edges z_i x_j and y_j x_k force z_i x_k; and x_i y_j
/// forbids x_i x_j. Returns every violation; an empty list is exactly the
/// unmixed case. Throws LabelingError when lab is invalid for g.
std::vector<Violation> check_unmixed_conditions(const Graph& g, const VwcLabeling& lab);

/// True iff every cross edge x_i y_j of g has i <= j under lab.
bool ascending_property_holds(const Graph& g, const VwcLabeling& lab);

/// Simultaneous reindexing of the pairs making every cross edge x_i y_j
/// point upward (i <= j), obtained by topologically ordering the strong
/// components of the associated semidirected graph with least-index
/// tie-breaking. Returns nullopt iff a directed cycle through at least two
/// pair indices makes such an order impossible.
std::optional<VwcLabeling> relabel_for_star_star(const Graph& g, const VwcLabeling& lab);

enum class CmStatus {
    NotWellCovered,
    WellCoveredNotVwc,
    VwcNotUnmixed, // unreachable for genuinely very well-covered input
    VwcUnmixedNotCM,
    VwcCohenMacaulay,
};

const char* to_string(CmStatus s);

struct Classification {
    CmStatus status = CmStatus::NotWellCovered;
    /// For VwcCohenMacaulay the stored labeling satisfies the ascending
    /// property; for VwcUnmixedNotCM it is the labeling found by
    /// find_vwc_labeling.
    std::optional<VwcLabeling> labeling;
    /// Height of the edge ideal: minimum vertex cover size.
    int height = 0;
    /// Empty exactly when status is VwcCohenMacaulay.
    std::vector<Violation> violations;
};

/// Full pipeline: well-covered test, very-well-covered test, labeling,
/// unmixedness conditions, ascending relabeling.
Classification classify(const Graph& g);

} // namespace vwc
