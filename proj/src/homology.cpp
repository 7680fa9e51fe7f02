#include "vwc/homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace vwc {

namespace {

using boost::multiprecision::cpp_int;

// Rank over GF(2): rows as bit blocks, plain elimination.
int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
    int rank = 0;
    std::size_t nrows = rows.size();
    for (int col = 0; col < ncols && rank < static_cast<int>(nrows); ++col) {
        std::size_t word = static_cast<std::size_t>(col) / 64;
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        std::size_t pivot = nrows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nrows; ++r)
            if (rows[r][word] & mask) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            if (rows[r][word] & mask)
                for (std::size_t w = 0; w < rows[r].size(); ++w)
                    rows[r][w] ^= rows[static_cast<std::size_t>(rank)][w];
        }
        ++rank;
    }
    return rank;
}

// Rank over the rationals: fraction-free (Bareiss) elimination on exact
// integers, so every division is exact and no rounding can occur.
int rank_rational(std::vector<std::vector<cpp_int>> a) {
    if (a.empty()) return 0;
    std::size_t nrows = a.size(), ncols = a[0].size();
    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == nrows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c)
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

// Boundary-matrix ranks for every dimension of the complex; ranks[d] is the
// rank of the boundary map leaving dimension d (d = 0 maps vertices onto the
// empty face).
std::vector<int> boundary_ranks(const SimplicialComplex& c, Field k) {
    auto levels = c.faces_by_dimension(); // index s = faces of size s
    std::vector<int> ranks(levels.size(), 0);
    for (std::size_t s = 1; s < levels.size(); ++s) {
        const auto& rowsFaces = levels[s - 1];
        const auto& colsFaces = levels[s];
        if (rowsFaces.empty() || colsFaces.empty()) continue;
        std::unordered_map<VertexMask, int> rowIndex;
        for (std::size_t i = 0; i < rowsFaces.size(); ++i)
            rowIndex.emplace(rowsFaces[i], static_cast<int>(i));
        if (k == Field::GF2) {
            std::size_t words = (colsFaces.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> m(rowsFaces.size(),
                                                      std::vector<std::uint64_t>(words, 0));
            for (std::size_t j = 0; j < colsFaces.size(); ++j) {
                VertexMask f = colsFaces[j];
                for (VertexMask t = f; t; t &= t - 1) {
                    VertexMask sub = f & ~(t & (~t + 1));
                    int i = rowIndex.at(sub);
                    m[static_cast<std::size_t>(i)][j / 64] ^= std::uint64_t{1} << (j % 64);
                }
            }
            ranks[s] = rank_gf2(std::move(m), static_cast<int>(colsFaces.size()));
        } else {
            std::vector<std::vector<cpp_int>> m(rowsFaces.size(),
                                                std::vector<cpp_int>(colsFaces.size(), 0));
            for (std::size_t j = 0; j < colsFaces.size(); ++j) {
                VertexMask f = colsFaces[j];
                int pos = 0;
                for (VertexMask t = f; t; t &= t - 1, ++pos) {
                    VertexMask sub = f & ~(t & (~t + 1));
                    int i = rowIndex.at(sub);
                    m[static_cast<std::size_t>(i)][j] = (pos % 2 == 0) ? 1 : -1;
                }
            }
            ranks[s] = rank_rational(std::move(m));
        }
    }
    return ranks;
}

} // namespace

const char* to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

std::vector<int> reduced_homology_ranks(const SimplicialComplex& c, Field k) {
    if (c.is_void()) return {};
    // A single facet is a simplex: contractible unless it is the bare empty
    // face, whose homology is one copy of k in dimension -1.
    if (c.facet_masks().size() == 1) {
        std::vector<int> out(static_cast<std::size_t>(c.dim() + 2), 0);
        if (c.is_irrelevant()) out[0] = 1;
        return out;
    }
    auto levels = c.faces_by_dimension();
    auto ranks = boundary_ranks(c, k);
    std::vector<int> out(levels.size(), 0);
    for (std::size_t s = 0; s < levels.size(); ++s) {
        int chain = static_cast<int>(levels[s].size());
        int out_rank = ranks[s];                                  // boundary leaving dim s-1
        int in_rank = s + 1 < ranks.size() ? ranks[s + 1] : 0;    // boundary entering
        out[s] = chain - out_rank - in_rank;
    }
    return out;
}

bool is_cohen_macaulay_reisner(const SimplicialComplex& c, Field k) {
    if (c.is_void()) return true;
    for (const auto& level : c.faces_by_dimension()) {
        for (VertexMask f : level) {
            std::vector<std::string> fl;
            for (int v : mask_to_indices(f)) fl.push_back(c.labels()[static_cast<std::size_t>(v)]);
            SimplicialComplex lk = link(c, fl);
            int d = lk.dim();
            if (d <= -1) continue;
            auto ranks = reduced_homology_ranks(lk, k);
            for (int i = -1; i < d; ++i)
                if (ranks[static_cast<std::size_t>(i + 1)] != 0) return false;
        }
    }
    return true;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) r = std::max(r, ij.second - ij.first);
    return r;
}

int BettiTable::projective_dimension() const {
    int p = 0;
    for (const auto& [ij, b] : entries)
        if (b != 0) p = std::max(p, ij.first);
    return p;
}

std::string BettiTable::to_text() const {
    int maxI = projective_dimension();
    int maxD = regularity();
    std::ostringstream out;
    out << "      ";
    for (int d = 0; d <= maxD; ++d) out << '\t' << d;
    out << '\n';
    for (int i = 0; i <= maxI; ++i) {
        out << i << ':';
        for (int d = 0; d <= maxD; ++d) {
            auto it = entries.find({i, i + d});
            out << '\t';
            if (it == entries.end() || it->second == 0)
                out << '.';
            else
                out << it->second;
        }
        out << '\n';
    }
    return out.str();
}

BettiTable betti_table_of_complex(const SimplicialComplex& c, Field k, int cap) {
    int n = c.vertex_count();
    if (n > cap)
        throw OracleLimitError("subset sweep over " + std::to_string(n) +
                               " vertices exceeds the cap " + std::to_string(cap));
    BettiTable table;
    table.field = k;
    VertexMask full = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    // Subsets visited by increasing size so low-degree entries settle first.
    std::vector<VertexMask> subsets;
    for (VertexMask w = 0;; ++w) {
        subsets.push_back(w);
        if (w == full) break;
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
    for (VertexMask w : subsets) {
        SimplicialComplex rest = restriction_mask(c, w);
        if (rest.is_void()) continue;
        int j = std::popcount(w);
        auto ranks = reduced_homology_ranks(rest, k);
        for (std::size_t s = 0; s < ranks.size(); ++s) {
            if (ranks[s] == 0) continue;
            int d = static_cast<int>(s) - 1; // homological dimension
            int i = j - d - 1;
            table.entries[{i, j}] += ranks[s];
        }
    }
    return table;
}

BettiTable betti_table_hochster(const Graph& g, Field k, int cap) {
    std::vector<std::string> removed;
    Graph h = strip_isolated(g, &removed);
    if (h.vertex_count() > cap)
        throw OracleLimitError("oracle limit: " + std::to_string(h.vertex_count()) +
                               " vertices exceed the cap " + std::to_string(cap));
    BettiTable table = betti_table_of_complex(independence_complex(h), k, cap);
    table.stripped_vertices = std::move(removed);
    return table;
}

int regularity(const Graph& g, Field k, int cap) {
    return betti_table_hochster(g, k, cap).regularity();
}

int projective_dimension_of_dual(const Graph& g, Field k, int cap) {
    Graph h = strip_isolated(g);
    SquarefreeMonomialIdeal dual = cover_ideal(h);
    for (VertexMask gen : dual.generators)
        if (gen == 0) return 0; // unit ideal (edgeless graph): free module
    SimplicialComplex c = complex_of_ideal(dual);
    BettiTable table = betti_table_of_complex(c, k, cap);
    return table.projective_dimension() - 1;
}

bool terai_check(const Graph& g, Field k, int cap) {
    return regularity(g, k, cap) == projective_dimension_of_dual(g, k, cap);
}

} // namespace vwc
