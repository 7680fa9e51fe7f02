#include "vwc/reduction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>

namespace vwc {

namespace {

constexpr int kAntichainLimit = 24;

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

} // namespace

bool SemiDigraph::has_directed(int i, int j) const {
    return std::binary_search(directed.begin(), directed.end(), std::pair{i, j});
}

bool SemiDigraph::has_undirected(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(undirected.begin(), undirected.end(), std::pair{i, j});
}

SemiDigraph build_semidigraph(const Graph& g, const VwcLabeling& lab) {
    validate_labeling(g, lab);
    SemiDigraph d;
    d.n = lab.size();
    for (int i = 0; i < d.n; ++i) {
        for (int j = 0; j < d.n; ++j) {
            if (i == j) continue;
            if (g.has_edge(lab.x(i), lab.y(j))) d.directed.emplace_back(i, j);
            if (i < j && g.has_edge(lab.x(i), lab.x(j))) d.undirected.emplace_back(i, j);
        }
    }
    std::sort(d.directed.begin(), d.directed.end());
    std::sort(d.undirected.begin(), d.undirected.end());
    return d;
}

std::vector<Mask> directed_reachability(const SemiDigraph& d) {
    std::vector<Mask> reach(static_cast<std::size_t>(d.n), 0);
    for (auto [i, j] : d.directed) reach[static_cast<std::size_t>(i)] |= bit(j);
    for (int k = 0; k < d.n; ++k)
        for (int i = 0; i < d.n; ++i)
            if (reach[static_cast<std::size_t>(i)] & bit(k))
                reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];
    return reach;
}

ComponentPartition strong_components(const SemiDigraph& d) {
    int n = d.n;
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (auto [i, j] : d.directed) succ[static_cast<std::size_t>(i)].push_back(j);

    // Tarjan.
    std::vector<int> num(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> onStack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
        num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
        stack.push_back(v);
        onStack[static_cast<std::size_t>(v)] = 1;
        for (int w : succ[static_cast<std::size_t>(v)]) {
            if (num[static_cast<std::size_t>(w)] < 0) {
                dfs(w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (onStack[static_cast<std::size_t>(w)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], num[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == num[static_cast<std::size_t>(v)]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                onStack[static_cast<std::size_t>(w)] = 0;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (num[static_cast<std::size_t>(v)] < 0) dfs(v);

    // Condensation plus deterministic topological order: ready components
    // picked by least contained vertex index.
    int t = static_cast<int>(comps.size());
    std::vector<int> compOf(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < t; ++c)
        for (int v : comps[static_cast<std::size_t>(c)]) compOf[static_cast<std::size_t>(v)] = c;
    std::vector<std::vector<int>> compSucc(static_cast<std::size_t>(t));
    std::vector<int> indeg(static_cast<std::size_t>(t), 0);
    for (auto [i, j] : d.directed) {
        int a = compOf[static_cast<std::size_t>(i)], b = compOf[static_cast<std::size_t>(j)];
        if (a != b) compSucc[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& v : compSucc) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (int b : v) ++indeg[static_cast<std::size_t>(b)];
    }
    auto keyOf = [&](int c) { return comps[static_cast<std::size_t>(c)].front(); };
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
        ready;
    for (int c = 0; c < t; ++c)
        if (indeg[static_cast<std::size_t>(c)] == 0) ready.emplace(keyOf(c), c);

    ComponentPartition out;
    out.component_of.assign(static_cast<std::size_t>(n), -1);
    while (!ready.empty()) {
        int c = ready.top().second;
        ready.pop();
        int pos = out.count();
        for (int v : comps[static_cast<std::size_t>(c)])
            out.component_of[static_cast<std::size_t>(v)] = pos;
        out.components.push_back(comps[static_cast<std::size_t>(c)]);
        for (int b : compSucc[static_cast<std::size_t>(c)])
            if (--indeg[static_cast<std::size_t>(b)] == 0) ready.emplace(keyOf(b), b);
    }
    return out;
}

std::optional<ClosureCounterexample> transitive_closure_violation(const SemiDigraph& d) {
    for (auto [i, j] : d.directed)
        for (auto [j2, k] : d.directed)
            if (j2 == j && k != i && !d.has_directed(i, k))
                return ClosureCounterexample{i, j, k, false};
    for (auto [i, j] : d.undirected) {
        for (int k = 0; k < d.n; ++k) {
            if (k == i || k == j) continue;
            // {i,j} undirected is symmetric; test both readings.
            if (d.has_directed(k, j) && !d.has_undirected(i, k))
                return ClosureCounterexample{i, j, k, true};
            if (d.has_directed(k, i) && !d.has_undirected(j, k))
                return ClosureCounterexample{j, i, k, true};
        }
    }
    return std::nullopt;
}

AcyclicReduction acyclic_reduction(const Graph& g, const VwcLabeling& lab) {
    AcyclicReduction red;
    SemiDigraph d = build_semidigraph(g, lab);
    red.partition = strong_components(d);
    int t = red.partition.count();

    auto reach = directed_reachability(d);
    // Component-level weak reachability (a reaches b through any members).
    std::vector<Mask> compReach(static_cast<std::size_t>(t), 0);
    for (int a = 0; a < t; ++a)
        for (int v : red.partition.components[static_cast<std::size_t>(a)])
            for (Mask m = reach[static_cast<std::size_t>(v)]; m; m &= m - 1)
                compReach[static_cast<std::size_t>(a)] |=
                    bit(red.partition.component_of[static_cast<std::size_t>(std::countr_zero(m))]);

    red.dhat.n = t;
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            if (a != b && (compReach[static_cast<std::size_t>(a)] & bit(b)))
                red.dhat.directed.emplace_back(a, b);
    for (auto [i, j] : d.undirected) {
        int a = red.partition.component_of[static_cast<std::size_t>(i)];
        int b = red.partition.component_of[static_cast<std::size_t>(j)];
        if (a != b) red.dhat.undirected.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(red.dhat.directed.begin(), red.dhat.directed.end());
    std::sort(red.dhat.undirected.begin(), red.dhat.undirected.end());
    red.dhat.undirected.erase(std::unique(red.dhat.undirected.begin(), red.dhat.undirected.end()),
                              red.dhat.undirected.end());

    for (int a = 0; a < t; ++a) red.ghat.add_vertex("u" + std::to_string(a + 1));
    for (int a = 0; a < t; ++a) red.ghat.add_vertex("v" + std::to_string(a + 1));
    for (int a = 0; a < t; ++a) {
        red.ghat.add_edge(a, t + a);
        red.ghat_labeling.pairs.emplace_back(a, t + a);
    }
    for (auto [a, b] : red.dhat.directed) red.ghat.add_edge(a, t + b);
    for (auto [a, b] : red.dhat.undirected) red.ghat.add_edge(a, b);

    SemiDigraph check = build_semidigraph(red.ghat, red.ghat_labeling);
    if (check.directed != red.dhat.directed || check.undirected != red.dhat.undirected)
        throw std::logic_error("semidirected graph of the reduction disagrees with the contraction");
    return red;
}

namespace {

struct AntichainContext {
    int n;
    std::vector<Mask> reach;    // downward: i -> set reachable from i
    std::vector<Mask> reachInv; // set that reaches i

    explicit AntichainContext(const SemiDigraph& d) : n(d.n), reach(directed_reachability(d)) {
        reachInv.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (Mask m = reach[static_cast<std::size_t>(i)]; m; m &= m - 1)
                reachInv[static_cast<std::size_t>(std::countr_zero(m))] |= bit(i);
    }

    bool is_antichain(const std::vector<int>& a) const {
        for (std::size_t p = 0; p < a.size(); ++p)
            for (std::size_t q = p + 1; q < a.size(); ++q) {
                int i = a[p], j = a[q];
                if (i == j) return false;
                if (reach[static_cast<std::size_t>(i)] & bit(j)) return false;
                if (reach[static_cast<std::size_t>(j)] & bit(i)) return false;
            }
        return true;
    }
};

} // namespace

std::vector<std::vector<int>> antichains(const SemiDigraph& d) {
    if (d.n > kAntichainLimit)
        throw ResourceLimitError("antichain enumeration supports at most " +
                                 std::to_string(kAntichainLimit) + " indices");
    AntichainContext ctx(d);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int from) {
        out.push_back(current);
        for (int v = from; v < d.n; ++v) {
            bool ok = true;
            for (int u : current)
                if ((ctx.reach[static_cast<std::size_t>(u)] & bit(v)) ||
                    (ctx.reachInv[static_cast<std::size_t>(u)] & bit(v))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            extend(v + 1);
            current.pop_back();
        }
    };
    extend(0);
    return out;
}

namespace {

// Upward closure of a set of components under weak reachability, as a vertex
// mask of the base semidirected graph.
struct OmegaContext {
    const ComponentPartition& part;
    std::vector<Mask> compUp;     // component -> components weakly above it
    std::vector<Mask> compVerts;  // component -> vertex mask

    OmegaContext(const SemiDigraph& d, const ComponentPartition& p) : part(p) {
        int t = p.count();
        std::vector<Mask> reach = directed_reachability(d);
        compUp.assign(static_cast<std::size_t>(t), 0);
        compVerts.assign(static_cast<std::size_t>(t), 0);
        for (int a = 0; a < t; ++a) {
            compUp[static_cast<std::size_t>(a)] = bit(a);
            for (int v : p.components[static_cast<std::size_t>(a)]) {
                compVerts[static_cast<std::size_t>(a)] |= bit(v);
                for (Mask m = reach[static_cast<std::size_t>(v)]; m; m &= m - 1)
                    compUp[static_cast<std::size_t>(a)] |=
                        bit(p.component_of[static_cast<std::size_t>(std::countr_zero(m))]);
            }
        }
    }

    Mask omega_of_components(Mask comps) const {
        Mask up = 0;
        for (Mask m = comps; m; m &= m - 1) up |= compUp[static_cast<std::size_t>(std::countr_zero(m))];
        Mask verts = 0;
        for (Mask m = up; m; m &= m - 1) verts |= compVerts[static_cast<std::size_t>(std::countr_zero(m))];
        return verts;
    }
};

} // namespace

std::vector<int> omega(const SemiDigraph& d, const ComponentPartition& part,
                       const std::vector<int>& a) {
    AntichainContext ctx(d);
    for (int v : a)
        if (v < 0 || v >= d.n) throw PreconditionError("antichain index out of range");
    if (!ctx.is_antichain(a)) throw PreconditionError("set is not an antichain");
    OmegaContext oc(d, part);
    Mask comps = 0;
    for (int v : a) comps |= bit(part.component_of[static_cast<std::size_t>(v)]);
    return mask_to_indices(oc.omega_of_components(comps));
}

std::vector<VertexCoverPrime> associated_primes(const Graph& g, const VwcLabeling& lab) {
    SemiDigraph d = build_semidigraph(g, lab);
    ComponentPartition part = strong_components(d);
    int t = part.count();
    if (t > kAntichainLimit)
        throw ResourceLimitError("associated-primes enumeration supports at most " +
                                 std::to_string(kAntichainLimit) + " components");
    OmegaContext oc(d, part);
    std::vector<Mask> undirectedMasks;
    for (auto [i, j] : d.undirected) undirectedMasks.push_back(bit(i) | bit(j));

    // Components are already topologically ordered, so "a reaches b" can be
    // read off compUp; distinct components of the contraction form an
    // antichain iff none is above another.
    std::vector<VertexCoverPrime> out;
    Mask allVerts = d.n == 64 ? ~Mask{0} : (bit(d.n) - 1);
    std::vector<int> current;
    std::function<void(int)> extend = [&](int from) {
        Mask comps = 0;
        for (int c : current) comps |= bit(c);
        Mask om = oc.omega_of_components(comps);
        bool excluded = false;
        for (Mask e : undirectedMasks)
            if ((om & e) == e) {
                excluded = true;
                break;
            }
        if (!excluded) {
            VertexCoverPrime p;
            p.ys = mask_to_indices(om);
            p.xs = mask_to_indices(allVerts & ~om);
            out.push_back(std::move(p));
        } else {
            return; // the closure only grows with the antichain
        }
        for (int c = from; c < t; ++c) {
            bool ok = true;
            for (int u : current)
                if ((oc.compUp[static_cast<std::size_t>(u)] & bit(c)) ||
                    (oc.compUp[static_cast<std::size_t>(c)] & bit(u))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(c);
            extend(c + 1);
            current.pop_back();
        }
    };
    extend(0);
    std::sort(out.begin(), out.end(), [](const VertexCoverPrime& a, const VertexCoverPrime& b) {
        return mask_sequence_less(indices_to_mask(a.ys), indices_to_mask(b.ys));
    });
    return out;
}

AntichainRegularity antichain_regularity(const Graph& g, const VwcLabeling& lab) {
    SemiDigraph d = build_semidigraph(g, lab);
    if (d.n > kAntichainLimit)
        throw ResourceLimitError("antichain search supports at most " +
                                 std::to_string(kAntichainLimit) + " pairs");
    ComponentPartition part = strong_components(d);
    OmegaContext oc(d, part);
    AntichainContext ctx(d);
    std::vector<Mask> undirectedMasks;
    for (auto [i, j] : d.undirected) undirectedMasks.push_back(bit(i) | bit(j));
    auto excluded = [&](Mask om) {
        for (Mask e : undirectedMasks)
            if ((om & e) == e) return true;
        return false;
    };

    AntichainRegularity result;

    // Route one: antichains of the base semidirected graph.
    std::vector<int> current;
    std::function<void(int)> goBase = [&](int from) {
        Mask comps = 0;
        for (int v : current) comps |= bit(part.component_of[static_cast<std::size_t>(v)]);
        if (excluded(oc.omega_of_components(comps))) return;
        if (static_cast<int>(current.size()) > result.via_base) {
            result.via_base = static_cast<int>(current.size());
            result.witness = current;
        }
        for (int v = from; v < d.n; ++v) {
            bool ok = true;
            for (int u : current)
                if ((ctx.reach[static_cast<std::size_t>(u)] & bit(v)) ||
                    (ctx.reachInv[static_cast<std::size_t>(u)] & bit(v))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            goBase(v + 1);
            current.pop_back();
        }
    };
    goBase(0);

    // Route two: antichains of the contraction, closures still tested against
    // the base graph's undirected edges.
    int t = part.count();
    std::function<void(int)> goHat = [&](int from) {
        Mask comps = 0;
        for (int c : current) comps |= bit(c);
        if (excluded(oc.omega_of_components(comps))) return;
        result.via_reduction = std::max(result.via_reduction, static_cast<int>(current.size()));
        for (int c = from; c < t; ++c) {
            bool ok = true;
            for (int u : current)
                if ((oc.compUp[static_cast<std::size_t>(u)] & bit(c)) ||
                    (oc.compUp[static_cast<std::size_t>(c)] & bit(u))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(c);
            goHat(c + 1);
            current.pop_back();
        }
    };
    current.clear();
    goHat(0);

    if (result.via_base != result.via_reduction)
        throw std::logic_error("antichain formula disagrees between the semidirected graph and "
                               "its acyclic contraction");
    result.value = result.via_base;
    return result;
}

std::string to_edge_list(const SemiDigraph& d) {
    std::ostringstream out;
    for (int i = 0; i < d.n; ++i) out << (i + 1) << '\n';
    for (auto [i, j] : d.directed) out << (i + 1) << " > " << (j + 1) << '\n';
    for (auto [i, j] : d.undirected) out << (i + 1) << ' ' << (j + 1) << '\n';
    return out.str();
}

} // namespace vwc
