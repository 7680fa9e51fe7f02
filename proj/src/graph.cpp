#include "vwc/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

namespace vwc {

int Graph::add_vertex(const std::string& label) {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    if (vertex_count() >= kMaxVertices)
        throw ResourceLimitError("graph exceeds the " + std::to_string(kMaxVertices) +
                                 "-vertex limit");
    int v = vertex_count();
    labels_.push_back(label);
    index_.emplace(label, v);
    adj_.push_back(0);
    return v;
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    int u = add_vertex(a);
    int v = add_vertex(b);
    add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw GraphError("loop at vertex '" + label(u) + "'");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw GraphError("edge endpoint out of range");
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw GraphError("duplicate edge '" + label(e.lo) + " " + label(e.hi) + "'");
    edges_.insert(it, e);
    adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (adjacency(u) >> v) & 1;
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    auto u = index_of(a), v = index_of(b);
    if (!u || !v) return false;
    return has_edge(*u, *v);
}

int Graph::degree(int v) const { return std::popcount(adjacency(v)); }

VertexMask Graph::all_vertices_mask() const {
    int n = vertex_count();
    return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::vector<int> mask_to_indices(VertexMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

VertexMask indices_to_mask(const std::vector<int>& idx) {
    VertexMask m = 0;
    for (int i : idx) m |= VertexMask{1} << i;
    return m;
}

bool mask_sequence_less(VertexMask a, VertexMask b) {
    while (a && b) {
        int i = std::countr_zero(a);
        int j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
    Graph h;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((keep >> v) & 1) h.add_vertex(g.label(v));
    for (const Edge& e : g.edges())
        if (((keep >> e.lo) & 1) && ((keep >> e.hi) & 1)) h.add_edge(g.label(e.lo), g.label(e.hi));
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
    VertexMask m = 0;
    for (const std::string& s : keep) {
        auto v = g.index_of(s);
        if (!v) throw GraphError("unknown vertex label '" + s + "'");
        m |= VertexMask{1} << *v;
    }
    return induced_subgraph(g, m);
}

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation, so the
// reported cliques are the maximal independent sets of g.
void independent_bk(const std::vector<VertexMask>& nonadj, VertexMask r, VertexMask p,
                    VertexMask x, std::vector<VertexMask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    VertexMask px = p | x;
    int pivot = -1, best = -1;
    for (VertexMask m = px; m; m &= m - 1) {
        int u = std::countr_zero(m);
        int c = std::popcount(p & nonadj[static_cast<std::size_t>(u)]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexMask cand = p & ~nonadj[static_cast<std::size_t>(pivot)];
    for (; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        VertexMask bit = VertexMask{1} << v;
        independent_bk(nonadj, r | bit, p & nonadj[static_cast<std::size_t>(v)],
                       x & nonadj[static_cast<std::size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<VertexMask> maximal_independent_set_masks(const Graph& g) {
    int n = g.vertex_count();
    VertexMask all = g.all_vertices_mask();
    std::vector<VertexMask> nonadj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        nonadj[static_cast<std::size_t>(v)] = all & ~g.adjacency(v) & ~(VertexMask{1} << v);
    std::vector<VertexMask> out;
    independent_bk(nonadj, 0, all, 0, out);
    std::sort(out.begin(), out.end(), mask_sequence_less);
    return out;
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (VertexMask m : maximal_independent_set_masks(g)) out.push_back(mask_to_indices(m));
    return out;
}

WellCoveredness is_well_covered(const Graph& g) {
    WellCoveredness r;
    auto sets = maximal_independent_set_masks(g);
    int minSize = -1, maxSize = 0;
    VertexMask minSet = 0, maxSet = 0;
    for (VertexMask m : sets) {
        int s = std::popcount(m);
        if (minSize < 0 || s < minSize) {
            minSize = s;
            minSet = m;
        }
        if (s > maxSize) {
            maxSize = s;
            maxSet = m;
        }
    }
    r.independence_number = maxSize;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v)) {
            r.isolated_vertex = g.label(v);
            break;
        }
    if (minSize != maxSize)
        r.unequal_witness = {mask_to_indices(minSet), mask_to_indices(maxSet)};
    r.well_covered = !r.isolated_vertex && minSize == maxSize;
    r.very_well_covered = r.well_covered && 2 * maxSize == g.vertex_count();
    return r;
}

bool three_disjoint(const Graph& g, Edge e, Edge f) {
    auto check = [&](Edge x) {
        if (!g.has_edge(x.lo, x.hi))
            throw GraphError("edge '" + g.label(x.lo) + " " + g.label(x.hi) + "' not in graph");
    };
    check(e);
    check(f);
    VertexMask m = (VertexMask{1} << e.lo) | (VertexMask{1} << e.hi) | (VertexMask{1} << f.lo) |
                   (VertexMask{1} << f.hi);
    if (std::popcount(m) != 4) return false;
    int edgesInside = 0;
    for (VertexMask t = m; t; t &= t - 1) {
        int v = std::countr_zero(t);
        edgesInside += std::popcount(g.adjacency(v) & m);
    }
    return edgesInside / 2 == 2;
}

bool three_disjoint(const Graph& g, const std::string& a, const std::string& b,
                    const std::string& c, const std::string& d) {
    auto idx = [&](const std::string& s) {
        auto v = g.index_of(s);
        if (!v) throw GraphError("unknown vertex label '" + s + "'");
        return *v;
    };
    return three_disjoint(g, make_edge(idx(a), idx(b)), make_edge(idx(c), idx(d)));
}

namespace {

// Maximum clique over the 3-disjointness compatibility graph. Edge counts
// stay small at this library's scale, so a plain recursive search with the
// usual |R|+|P| bound is plenty.
struct CliqueSearch {
    const std::vector<std::vector<char>>& compat;
    std::vector<int> best;
    std::vector<int> current;

    void run(const std::vector<int>& candidates) {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= best.size()) return;
            int v = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(candidates[j])])
                    next.push_back(candidates[j]);
            current.push_back(v);
            run(next);
            current.pop_back();
        }
    }
};

} // namespace

DisjointWitness max_three_disjoint(const Graph& g) {
    const auto& es = g.edges();
    std::size_t m = es.size();
    std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (three_disjoint(g, es[i], es[j])) compat[i][j] = compat[j][i] = 1;
    std::vector<int> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
    CliqueSearch search{compat, {}, {}};
    search.run(all);
    DisjointWitness w;
    for (int i : search.best) w.edges.push_back(es[static_cast<std::size_t>(i)]);
    std::sort(w.edges.begin(), w.edges.end());
    w.size = static_cast<int>(w.edges.size());
    return w;
}

Graph strip_isolated(const Graph& g, std::vector<std::string>* removed) {
    VertexMask keep = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            if (removed) removed->push_back(g.label(v));
        } else {
            keep |= VertexMask{1} << v;
        }
    }
    return induced_subgraph(g, keep);
}

Graph parse_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!(ss >> a)) continue; // blank
        if (a.front() == '#') continue;
        if (!(ss >> b)) {
            g.add_vertex(a);
            continue;
        }
        if (ss >> extra) throw ParseError("expected at most two labels", lineno);
        try {
            g.add_edge(a, b);
        } catch (const GraphError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (g.vertex_count() == 0) throw ParseError("no vertices", 0);
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const std::string& l : g.labels()) out << l << '\n';
    for (const Edge& e : g.edges()) out << g.label(e.lo) << ' ' << g.label(e.hi) << '\n';
    return out.str();
}

std::string digest(const Graph& g) {
    std::string s = to_edge_list(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace vwc
