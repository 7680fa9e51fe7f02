#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "vwc/classify.hpp"
#include "vwc/graph.hpp"

namespace vwc {

/// Simplicial complex given by its facet set over an ordered ambient vertex
/// list. The void complex (no faces at all) and the irrelevant complex
/// (just the empty face) are distinct values: the former has no facets, the
/// latter has the single facet {}.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex();
    static SimplicialComplex irrelevant_complex();

    /// Builds a complex from generating faces; dominated faces are dropped so
    /// the stored facets are inclusion-maximal. Unknown labels are appended
    /// to the ambient list in first-occurrence order.
    static SimplicialComplex from_facets(std::vector<std::string> ambient,
                                         const std::vector<std::vector<std::string>>& facets);

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    /// Dimension: largest facet size minus one; -2 for the void complex.
    int dim() const;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<VertexMask>& facet_masks() const { return facets_; }
    std::vector<std::vector<std::string>> facets() const;

    bool is_face(VertexMask f) const;
    bool is_face(const std::vector<std::string>& f) const;
    VertexMask mask_of(const std::vector<std::string>& f) const; // throws on unknown label

    /// All faces (the empty face included unless void), grouped by dimension
    /// starting at -1.
    std::vector<std::vector<VertexMask>> faces_by_dimension() const;

    /// One facet per line, blank line for the empty facet.
    std::string to_facet_list() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexMask> facets_; // maximal, sorted by mask_sequence_less

    friend SimplicialComplex complex_from_masks(std::vector<std::string> labels,
                                                std::vector<VertexMask> faces, bool shrink);
};

/// Internal-style constructor shared by the operations below: maximalizes
/// the given faces; when shrink is set, ambient vertices appearing in no
/// facet are dropped (the abstract-complex view used by link and deletion).
SimplicialComplex complex_from_masks(std::vector<std::string> labels,
                                     std::vector<VertexMask> faces, bool shrink);

/// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

/// Link and deletion of a face; both throw ComplexError-like GraphError when
/// f is not a face. The empty face returns the complex itself.
SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& f);
SimplicialComplex deletion(const SimplicialComplex& c, const std::vector<std::string>& f);

bool is_pure(const SimplicialComplex& c);

/// Restriction to a vertex subset: faces contained in keep.
SimplicialComplex restriction(const SimplicialComplex& c, const std::vector<std::string>& keep);
SimplicialComplex restriction_mask(const SimplicialComplex& c, VertexMask keep);

/// Shedding tree certifying a vertex decomposition; leaves are base cases.
struct SheddingTree {
    std::string vertex;
    std::unique_ptr<SheddingTree> link;
    std::unique_ptr<SheddingTree> del;
};

struct VdResult {
    bool decomposable = false;
    std::unique_ptr<SheddingTree> tree;  // present on success for non-base cases
    std::vector<std::string> exhausted;  // per-candidate failure notes otherwise
};

/// Memo shared across calls keyed on a canonical facet encoding (vertices
/// renamed by first occurrence). Concurrent use requires external locking.
using VdMemo = std::unordered_map<std::string, bool>;

/// Recursive vertex-decomposability decision. Base cases: the void complex
/// and any single-facet complex (a simplex, the irrelevant complex included).
/// Shedding candidates are tried in vertex order, except that a vertex whose
/// closed neighborhood (in the complement sense) dominates another vertex is
/// tried first when one exists.
VdResult is_vertex_decomposable(const SimplicialComplex& c, VdMemo* memo = nullptr);

enum class Shellability { Shellable, NotShellable, NotPure, Undecided };

const char* to_string(Shellability s);

struct ShellingResult {
    Shellability status = Shellability::Undecided;
    std::vector<std::vector<std::string>> order; // explicit shelling on success
    std::string note;
};

/// Backtracking search for a pure shelling order, with the shelling condition
/// checked incrementally. Complexes with more than max_facets facets report
/// Undecided rather than running unbounded. The void complex is shellable by
/// convention.
ShellingResult is_pure_shellable(const SimplicialComplex& c, std::size_t max_facets = 16);

/// Square-free monomial ideal: generators are variable subsets, minimal under
/// divisibility. The zero ideal has no generators; the unit ideal has the
/// single empty generator.
struct SquarefreeMonomialIdeal {
    std::vector<std::string> variables;
    std::vector<VertexMask> generators; // minimal, sorted by mask_sequence_less

    std::vector<std::vector<std::string>> generator_supports() const;

    friend bool operator==(const SquarefreeMonomialIdeal&,
                           const SquarefreeMonomialIdeal&) = default;
};

/// Drops generators divisible by another and sorts.
std::vector<VertexMask> minimalize_generators(std::vector<VertexMask> gens);

/// Cover ideal: one generator per minimal vertex cover of g. Equals the
/// Alexander dual of the edge ideal.
SquarefreeMonomialIdeal cover_ideal(const Graph& g);

/// Minimal transversals (hitting sets) of a family of supports.
std::vector<VertexMask> minimal_hitting_sets(const std::vector<VertexMask>& sets, int nvars);

/// The complex whose Stanley-Reisner ideal is the given ideal: faces are the
/// variable subsets containing no generator support. The unit ideal yields
/// the void complex, the zero ideal the full simplex.
SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal);

/// Splitting identities of the cover ideal at the distinguished pair
/// (x_1, y_1) of an ascending labeling with deg(y_1) = 1: the cover ideal
/// decomposes as x_1 I(G'')^v + m I(G')^v where G' and G'' remove the closed
/// neighborhoods of x_1 and y_1, and the intersection of the two parts is
/// x_1 m I(G')^v. Returns true iff both identities hold exactly as sets of
/// minimal monomial generators; throws PreconditionError when the labeling
/// is not in the required normalized form.
bool cover_ideal_splitting_check(const Graph& g, const VwcLabeling& lab);

} // namespace vwc
