#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vwc/complexes.hpp"
#include "vwc/graph.hpp"

namespace vwc {

/// Coefficient field for the homological oracles. Both are exact: GF(2) uses
/// bitset row reduction, the rationals use fraction-free elimination over
/// arbitrary-precision integers.
enum class Field { GF2, Rationals };

const char* to_string(Field f);

/// Ranks of the reduced simplicial homology groups, indexed from dimension -1
/// up to dim c (so entry 0 is the rank in dimension -1). The void complex
/// yields an empty list; the irrelevant complex has rank 1 in dimension -1.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& c, Field k);

/// Reisner criterion: true iff for every face F (the empty face included)
/// the reduced homology of its link vanishes strictly below the link's
/// dimension.
bool is_cohen_macaulay_reisner(const SimplicialComplex& c, Field k);

/// Graded Betti numbers of the quotient by a square-free monomial ideal.
struct BettiTable {
    Field field = Field::GF2;
    std::map<std::pair<int, int>, long long> entries; // (i, j) -> beta
    std::vector<std::string> stripped_vertices;       // cone points removed first

    int regularity() const;           // max j - i over nonzero entries
    int projective_dimension() const; // max i over nonzero entries
    std::string to_text() const;      // triangular table, rows i, columns j - i
};

/// Betti numbers of R/I(G) by the subset-homology formula, summing the
/// reduced homology ranks of all vertex-subset restrictions of the
/// independence complex. Isolated vertices are stripped first (recorded in
/// the table); throws OracleLimitError when more than cap vertices remain.
BettiTable betti_table_hochster(const Graph& g, Field k, int cap = 16);

/// Same subset sweep for an arbitrary complex (used for the dual route).
BettiTable betti_table_of_complex(const SimplicialComplex& c, Field k, int cap = 16);

int regularity(const Graph& g, Field k, int cap = 16);

/// Projective dimension of the cover ideal, computed independently of
/// regularity by running the subset sweep on the complex whose
/// Stanley-Reisner ideal is the cover ideal.
int projective_dimension_of_dual(const Graph& g, Field k, int cap = 16);

/// True iff the regularity of R/I(G) equals the projective dimension of the
/// cover ideal, both computed by their own oracle route.
bool terai_check(const Graph& g, Field k, int cap = 16);

} // namespace vwc
