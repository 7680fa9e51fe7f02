#include "vwc/classify.hpp"

#include <algorithm>
#include <bit>

#include "vwc/reduction.hpp"

namespace vwc {

VertexMask VwcLabeling::x_mask() const {
    VertexMask m = 0;
    for (auto [x, y] : pairs) m |= VertexMask{1} << x;
    return m;
}

VertexMask VwcLabeling::y_mask() const {
    VertexMask m = 0;
    for (auto [x, y] : pairs) m |= VertexMask{1} << y;
    return m;
}

void validate_labeling(const Graph& g, const VwcLabeling& lab) {
    if (2 * lab.size() != g.vertex_count())
        throw LabelingError("labeling must cover all vertices in pairs");
    VertexMask seen = 0;
    for (auto [x, y] : lab.pairs) {
        if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count())
            throw LabelingError("pair index out of range");
        VertexMask both = (VertexMask{1} << x) | (VertexMask{1} << y);
        if (std::popcount(both) != 2 || (seen & both))
            throw LabelingError("pairs must partition the vertex set");
        seen |= both;
        if (!g.has_edge(x, y))
            throw LabelingError("pair (" + g.label(x) + ", " + g.label(y) +
                                ") is not an edge of the graph");
    }
    // Y independent; maximality then follows since every vertex outside Y is
    // matched to a Y vertex.
    VertexMask ym = lab.y_mask();
    for (auto [x, y] : lab.pairs)
        if (g.adjacency(y) & ym)
            throw LabelingError("independent side contains the edge at '" + g.label(y) + "'");
}

namespace {

// Lexicographically first perfect matching: the lowest-index uncovered
// vertex is matched greedily to its lowest-index viable neighbor, with
// backtracking.
bool first_matching(const Graph& g, VertexMask covered, std::vector<Edge>& out) {
    VertexMask all = g.all_vertices_mask();
    if (covered == all) return true;
    int u = std::countr_zero(~covered & all);
    VertexMask cand = g.adjacency(u) & ~covered;
    for (; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        out.push_back(make_edge(u, v));
        if (first_matching(g, covered | (VertexMask{1} << u) | (VertexMask{1} << v), out))
            return true;
        out.pop_back();
    }
    return false;
}

struct YSearch {
    const Graph& g;
    const std::vector<Edge>& pairsEdges;
    // choice[i]: -1 undecided, 0 lo endpoint is y, 1 hi endpoint is y
    std::vector<int> choice;

    int endpoint(int i, int which) const {
        const Edge& e = pairsEdges[static_cast<std::size_t>(i)];
        return which == 0 ? e.lo : e.hi;
    }

    // Unit propagation: a decided y excludes adjacent endpoints of undecided
    // pairs; a pair with both endpoints excluded fails.
    bool consistent(std::vector<int>& work) const {
        bool changed = true;
        while (changed) {
            changed = false;
            VertexMask ym = 0;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (work[i] >= 0)
                    ym |= VertexMask{1} << endpoint(static_cast<int>(i), work[i]);
            for (std::size_t i = 0; i < work.size(); ++i) {
                if (work[i] >= 0) {
                    if (g.adjacency(endpoint(static_cast<int>(i), work[i])) & ym) return false;
                    continue;
                }
                bool loBad = (g.adjacency(endpoint(static_cast<int>(i), 0)) & ym) != 0;
                bool hiBad = (g.adjacency(endpoint(static_cast<int>(i), 1)) & ym) != 0;
                if (loBad && hiBad) return false;
                if (loBad) {
                    work[i] = 1;
                    changed = true;
                } else if (hiBad) {
                    work[i] = 0;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve(std::vector<int> work) {
        if (!consistent(work)) return false;
        int i = -1;
        for (std::size_t k = 0; k < work.size(); ++k)
            if (work[k] < 0) {
                i = static_cast<int>(k);
                break;
            }
        if (i < 0) {
            choice = work;
            return true;
        }
        // Preference: smaller degree as y, ties toward the later endpoint.
        int dlo = g.degree(endpoint(i, 0));
        int dhi = g.degree(endpoint(i, 1));
        int firstTry = dlo < dhi ? 0 : (dhi < dlo ? 1 : 1);
        for (int attempt : {firstTry, 1 - firstTry}) {
            auto next = work;
            next[static_cast<std::size_t>(i)] = attempt;
            if (solve(std::move(next))) return true;
        }
        return false;
    }
};

} // namespace

std::optional<VwcLabeling> find_vwc_labeling(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    std::vector<Edge> matching;
    if (!first_matching(g, 0, matching)) return std::nullopt;
    std::sort(matching.begin(), matching.end());

    YSearch search{g, matching, {}};
    if (!search.solve(std::vector<int>(matching.size(), -1))) return std::nullopt;

    VwcLabeling lab;
    for (std::size_t i = 0; i < matching.size(); ++i) {
        int y = search.endpoint(static_cast<int>(i), search.choice[i]);
        int x = search.endpoint(static_cast<int>(i), 1 - search.choice[i]);
        lab.pairs.emplace_back(x, y);
    }
    validate_labeling(g, lab);
    return lab;
}

const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::IsolatedVertex: return "isolated_vertex";
    case ViolationKind::UnequalIndependentSets: return "unequal_independent_sets";
    case ViolationKind::NotVeryWellCovered: return "not_very_well_covered";
    case ViolationKind::NoLabeling: return "no_labeling";
    case ViolationKind::ClosureViolation: return "closure_violation";
    case ViolationKind::CrossEdgeConflict: return "cross_edge_conflict";
    case ViolationKind::NoAscendingRelabeling: return "no_ascending_relabeling";
    }
    return "unknown";
}

std::vector<Violation> check_unmixed_conditions(const Graph& g, const VwcLabeling& lab) {
    validate_labeling(g, lab);
    int n = lab.size();
    std::vector<Violation> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                for (int side = 0; side < 2; ++side) {
                    int zi = side == 0 ? lab.x(i) : lab.y(i);
                    if (!g.has_edge(zi, lab.x(j))) continue;
                    if (!g.has_edge(lab.y(j), lab.x(k))) continue;
                    if (g.has_edge(zi, lab.x(k))) continue;
                    Violation v;
                    v.kind = ViolationKind::ClosureViolation;
                    v.indices = {i + 1, j + 1, k + 1};
                    v.vertices = {g.label(zi), g.label(lab.x(j)), g.label(lab.y(j)),
                                  g.label(lab.x(k))};
                    v.detail = "edges " + g.label(zi) + g.label(lab.x(j)) + " and " +
                               g.label(lab.y(j)) + g.label(lab.x(k)) + " require the edge " +
                               g.label(zi) + g.label(lab.x(k));
                    out.push_back(std::move(v));
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (g.has_edge(lab.x(i), lab.y(j)) && g.has_edge(lab.x(i), lab.x(j))) {
                Violation v;
                v.kind = ViolationKind::CrossEdgeConflict;
                v.indices = {i + 1, j + 1};
                v.vertices = {g.label(lab.x(i)), g.label(lab.y(j)), g.label(lab.x(j))};
                v.detail = "edge " + g.label(lab.x(i)) + g.label(lab.y(j)) +
                           " forbids the edge " + g.label(lab.x(i)) + g.label(lab.x(j));
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

bool ascending_property_holds(const Graph& g, const VwcLabeling& lab) {
    int n = lab.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(lab.x(i), lab.y(j)) && i > j) return false;
    return true;
}

std::optional<VwcLabeling> relabel_for_star_star(const Graph& g, const VwcLabeling& lab) {
    validate_labeling(g, lab);
    SemiDigraph d = build_semidigraph(g, lab);
    ComponentPartition parts = strong_components(d);
    for (const auto& comp : parts.components)
        if (comp.size() >= 2) return std::nullopt;
    VwcLabeling out;
    for (const auto& comp : parts.components)
        out.pairs.push_back(lab.pairs[static_cast<std::size_t>(comp.front())]);
    if (!ascending_property_holds(g, out))
        throw std::logic_error("topological relabeling failed to make cross edges ascend");
    return out;
}

const char* to_string(CmStatus s) {
    switch (s) {
    case CmStatus::NotWellCovered: return "NotWellCovered";
    case CmStatus::WellCoveredNotVwc: return "WellCoveredNotVwc";
    case CmStatus::VwcNotUnmixed: return "VwcNotUnmixed";
    case CmStatus::VwcUnmixedNotCM: return "VwcUnmixedNotCM";
    case CmStatus::VwcCohenMacaulay: return "VwcCohenMacaulay";
    }
    return "unknown";
}

Classification classify(const Graph& g) {
    Classification c;
    WellCoveredness wc = is_well_covered(g);
    c.height = g.vertex_count() - wc.independence_number;
    if (!wc.well_covered) {
        c.status = CmStatus::NotWellCovered;
        if (wc.isolated_vertex) {
            Violation v;
            v.kind = ViolationKind::IsolatedVertex;
            v.vertices = {*wc.isolated_vertex};
            v.detail = "vertex '" + *wc.isolated_vertex + "' is isolated";
            c.violations.push_back(std::move(v));
        }
        if (wc.unequal_witness) {
            Violation v;
            v.kind = ViolationKind::UnequalIndependentSets;
            for (int u : wc.unequal_witness->first) v.vertices.push_back(g.label(u));
            v.vertices.push_back("|");
            for (int u : wc.unequal_witness->second) v.vertices.push_back(g.label(u));
            v.detail = "maximal independent sets of sizes " +
                       std::to_string(wc.unequal_witness->first.size()) + " and " +
                       std::to_string(wc.unequal_witness->second.size());
            c.violations.push_back(std::move(v));
        }
        return c;
    }
    if (!wc.very_well_covered) {
        c.status = CmStatus::WellCoveredNotVwc;
        Violation v;
        v.kind = ViolationKind::NotVeryWellCovered;
        v.detail = "independence number " + std::to_string(wc.independence_number) +
                   " does not equal half of " + std::to_string(g.vertex_count()) + " vertices";
        c.violations.push_back(std::move(v));
        return c;
    }
    auto lab = find_vwc_labeling(g);
    if (!lab) {
        // Cannot happen for a genuinely very well-covered graph.
        c.status = CmStatus::VwcNotUnmixed;
        Violation v;
        v.kind = ViolationKind::NoLabeling;
        v.detail = "no perfect matching with an independent transversal";
        c.violations.push_back(std::move(v));
        return c;
    }
    auto viols = check_unmixed_conditions(g, *lab);
    if (!viols.empty()) {
        // Unreachable for very well-covered input.
        c.status = CmStatus::VwcNotUnmixed;
        c.labeling = *lab;
        c.violations = std::move(viols);
        return c;
    }
    auto relabeled = relabel_for_star_star(g, *lab);
    if (!relabeled) {
        c.status = CmStatus::VwcUnmixedNotCM;
        c.labeling = *lab;
        SemiDigraph d = build_semidigraph(g, *lab);
        ComponentPartition parts = strong_components(d);
        for (const auto& comp : parts.components)
            if (comp.size() >= 2) {
                Violation v;
                v.kind = ViolationKind::NoAscendingRelabeling;
                for (int i : comp) v.indices.push_back(i + 1);
                for (int i : comp) {
                    v.vertices.push_back(g.label(lab->x(i)));
                    v.vertices.push_back(g.label(lab->y(i)));
                }
                v.detail = "directed cycle through " + std::to_string(comp.size()) +
                           " pair indices blocks an ascending relabeling";
                c.violations.push_back(std::move(v));
                break;
            }
        return c;
    }
    c.status = CmStatus::VwcCohenMacaulay;
    c.labeling = *relabeled;
    return c;
}

} // namespace vwc
