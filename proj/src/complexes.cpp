#include "vwc/complexes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace vwc {

namespace {

std::vector<VertexMask> maximalize(std::vector<VertexMask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexMask> out;
    for (VertexMask f : faces) {
        bool dominated = false;
        for (VertexMask g : faces)
            if (g != f && (f & g) == f) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), mask_sequence_less);
    return out;
}

} // namespace

SimplicialComplex complex_from_masks(std::vector<std::string> labels,
                                     std::vector<VertexMask> faces, bool shrink) {
    SimplicialComplex c;
    faces = maximalize(std::move(faces));
    if (shrink && !faces.empty()) {
        VertexMask used = 0;
        for (VertexMask f : faces) used |= f;
        std::vector<int> remap(labels.size(), -1);
        std::vector<std::string> newLabels;
        for (std::size_t v = 0; v < labels.size(); ++v)
            if ((used >> v) & 1) {
                remap[v] = static_cast<int>(newLabels.size());
                newLabels.push_back(labels[v]);
            }
        std::vector<VertexMask> newFaces;
        for (VertexMask f : faces) {
            VertexMask nf = 0;
            for (VertexMask m = f; m; m &= m - 1)
                nf |= VertexMask{1} << remap[static_cast<std::size_t>(std::countr_zero(m))];
            newFaces.push_back(nf);
        }
        labels = std::move(newLabels);
        faces = std::move(newFaces);
        std::sort(faces.begin(), faces.end(), mask_sequence_less);
    }
    c.labels_ = std::move(labels);
    c.facets_ = std::move(faces);
    return c;
}

SimplicialComplex SimplicialComplex::void_complex() { return {}; }

SimplicialComplex SimplicialComplex::irrelevant_complex() {
    return complex_from_masks({}, {0}, false);
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> ambient, const std::vector<std::vector<std::string>>& facets) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], static_cast<int>(i));
    std::vector<VertexMask> masks;
    for (const auto& f : facets) {
        VertexMask m = 0;
        for (const std::string& s : f) {
            auto it = index.find(s);
            int v;
            if (it == index.end()) {
                v = static_cast<int>(ambient.size());
                if (v >= Graph::kMaxVertices)
                    throw ResourceLimitError("complex exceeds the 64-vertex limit");
                ambient.push_back(s);
                index.emplace(s, v);
            } else {
                v = it->second;
            }
            m |= VertexMask{1} << v;
        }
        masks.push_back(m);
    }
    return complex_from_masks(std::move(ambient), std::move(masks), false);
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (VertexMask f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
    std::vector<std::vector<std::string>> out;
    for (VertexMask f : facets_) {
        std::vector<std::string> fl;
        for (int v : mask_to_indices(f)) fl.push_back(labels_[static_cast<std::size_t>(v)]);
        out.push_back(std::move(fl));
    }
    return out;
}

bool SimplicialComplex::is_face(VertexMask f) const {
    for (VertexMask g : facets_)
        if ((f & g) == f) return true;
    return false;
}

VertexMask SimplicialComplex::mask_of(const std::vector<std::string>& f) const {
    VertexMask m = 0;
    for (const std::string& s : f) {
        auto it = std::find(labels_.begin(), labels_.end(), s);
        if (it == labels_.end()) throw GraphError("unknown vertex label '" + s + "'");
        m |= VertexMask{1} << (it - labels_.begin());
    }
    return m;
}

bool SimplicialComplex::is_face(const std::vector<std::string>& f) const {
    for (const std::string& s : f)
        if (std::find(labels_.begin(), labels_.end(), s) == labels_.end()) return false;
    return is_face(mask_of(f));
}

std::vector<std::vector<VertexMask>> SimplicialComplex::faces_by_dimension() const {
    std::vector<std::vector<VertexMask>> out;
    if (is_void()) return out;
    std::unordered_set<VertexMask> seen;
    for (VertexMask f : facets_) {
        VertexMask sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    out.resize(static_cast<std::size_t>(dim() + 2));
    for (VertexMask f : seen) out[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

std::string SimplicialComplex::to_facet_list() const {
    std::ostringstream out;
    for (const auto& f : facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
    return out.str();
}

SimplicialComplex independence_complex(const Graph& g) {
    return complex_from_masks(g.labels(), maximal_independent_set_masks(g), false);
}

namespace {

SimplicialComplex link_or_deletion(const SimplicialComplex& c, const std::vector<std::string>& f,
                                   bool wantLink) {
    VertexMask fm = c.mask_of(f);
    if (!c.is_face(fm)) throw GraphError("not a face of the complex");
    std::vector<VertexMask> faces;
    for (VertexMask g : c.facet_masks()) {
        if (wantLink) {
            if ((g & fm) == fm) faces.push_back(g & ~fm);
        } else {
            faces.push_back(g & ~fm);
        }
    }
    return complex_from_masks(c.labels(), std::move(faces), true);
}

} // namespace

SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& f) {
    return link_or_deletion(c, f, true);
}

SimplicialComplex deletion(const SimplicialComplex& c, const std::vector<std::string>& f) {
    return link_or_deletion(c, f, false);
}

bool is_pure(const SimplicialComplex& c) {
    const auto& fs = c.facet_masks();
    for (const VertexMask f : fs)
        if (std::popcount(f) != std::popcount(fs.front())) return false;
    return true;
}

SimplicialComplex restriction_mask(const SimplicialComplex& c, VertexMask keep) {
    if (c.is_void()) return SimplicialComplex::void_complex();
    std::vector<std::string> labels;
    std::vector<int> remap(c.labels().size(), -1);
    for (std::size_t v = 0; v < c.labels().size(); ++v)
        if ((keep >> v) & 1) {
            remap[v] = static_cast<int>(labels.size());
            labels.push_back(c.labels()[v]);
        }
    std::vector<VertexMask> faces;
    for (VertexMask f : c.facet_masks()) {
        VertexMask nf = 0;
        for (VertexMask m = f & keep; m; m &= m - 1)
            nf |= VertexMask{1} << remap[static_cast<std::size_t>(std::countr_zero(m))];
        faces.push_back(nf);
    }
    return complex_from_masks(std::move(labels), std::move(faces), false);
}

SimplicialComplex restriction(const SimplicialComplex& c, const std::vector<std::string>& keep) {
    return restriction_mask(c, c.mask_of(keep));
}

namespace {

// Canonical facet-set encoding: vertices renamed by first occurrence over the
// sorted facet list, then re-sorted. Shared subproblems that differ only by
// labels hit the same memo entry.
std::string canonical_key(const std::vector<VertexMask>& facets, int nverts) {
    std::vector<int> rename(static_cast<std::size_t>(nverts), -1);
    int next = 0;
    std::vector<VertexMask> sorted = facets;
    std::sort(sorted.begin(), sorted.end(), mask_sequence_less);
    std::vector<VertexMask> renamed;
    for (VertexMask f : sorted) {
        VertexMask nf = 0;
        for (VertexMask m = f; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (rename[static_cast<std::size_t>(v)] < 0) rename[static_cast<std::size_t>(v)] = next++;
            nf |= VertexMask{1} << rename[static_cast<std::size_t>(v)];
        }
        renamed.push_back(nf);
    }
    std::sort(renamed.begin(), renamed.end());
    std::string key;
    key.reserve(renamed.size() * 9);
    for (VertexMask f : renamed) {
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((f >> (8 * b)) & 0xff));
        key.push_back('|');
    }
    return key;
}

struct VdSolver {
    VdMemo& memo;

    // Facets are masks over an implicit shrunk vertex set.
    struct Sub {
        std::vector<VertexMask> facets;
        int nverts;
    };

    static Sub shrink(const std::vector<VertexMask>& faces) {
        auto maxl = maximalize(faces);
        VertexMask used = 0;
        for (VertexMask f : maxl) used |= f;
        std::vector<int> remap(64, -1);
        int next = 0;
        for (VertexMask m = used; m; m &= m - 1)
            remap[static_cast<std::size_t>(std::countr_zero(m))] = next++;
        for (VertexMask& f : maxl) {
            VertexMask nf = 0;
            for (VertexMask m = f; m; m &= m - 1)
                nf |= VertexMask{1} << remap[static_cast<std::size_t>(std::countr_zero(m))];
            f = nf;
        }
        return {std::move(maxl), next};
    }

    // Dominance heuristic: shed first a vertex x whose closed missing-pair
    // neighborhood contains that of some other vertex y.
    static int hint(const Sub& s) {
        int n = s.nverts;
        if (n == 0) return -1;
        std::vector<VertexMask> missing(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                VertexMask pair = (VertexMask{1} << u) | (VertexMask{1} << v);
                bool face = false;
                for (VertexMask f : s.facets)
                    if ((pair & f) == pair) {
                        face = true;
                        break;
                    }
                if (!face) {
                    missing[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
                    missing[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
                }
            }
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                if (x == y) continue;
                VertexMask closedY = missing[static_cast<std::size_t>(y)] | (VertexMask{1} << y);
                VertexMask closedX = missing[static_cast<std::size_t>(x)] | (VertexMask{1} << x);
                if ((closedY & ~closedX) == 0) return x;
            }
        return -1;
    }

    bool decide(const Sub& s) {
        if (s.facets.empty()) return true;  // void complex
        if (s.facets.size() == 1) return true; // simplex (irrelevant included)
        std::string key = canonical_key(s.facets, s.nverts);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        bool ok = false;
        std::vector<int> candidates;
        int h = hint(s);
        if (h >= 0) candidates.push_back(h);
        for (int v = 0; v < s.nverts; ++v)
            if (v != h) candidates.push_back(v);
        for (int v : candidates) {
            if (try_shed(s, v)) {
                ok = true;
                break;
            }
        }
        memo.emplace(std::move(key), ok);
        return ok;
    }

    // 0 = success; 1 = deletion has a non-facet facet; 2 = subproblem failed.
    int shed_outcome(const Sub& s, int v) {
        VertexMask vbit = VertexMask{1} << v;
        std::vector<VertexMask> linkFaces, delFaces;
        for (VertexMask f : s.facets) {
            if (f & vbit) linkFaces.push_back(f & ~vbit);
            delFaces.push_back(f & ~vbit);
        }
        auto delMax = maximalize(delFaces);
        for (VertexMask f : delMax) {
            bool isFacet = std::find(s.facets.begin(), s.facets.end(), f) != s.facets.end();
            if (!isFacet) return 1;
        }
        if (!decide(shrink(linkFaces))) return 2;
        if (!decide(shrink(delMax))) return 2;
        return 0;
    }

    bool try_shed(const Sub& s, int v) { return shed_outcome(s, v) == 0; }
};

std::unique_ptr<SheddingTree> build_tree(VdSolver& solver, const VdSolver::Sub& s,
                                         const std::vector<std::string>& labels,
                                         const std::vector<int>& toAmbient) {
    if (s.facets.size() <= 1) return nullptr;
    std::vector<int> candidates;
    int h = VdSolver::hint(s);
    if (h >= 0) candidates.push_back(h);
    for (int v = 0; v < s.nverts; ++v)
        if (v != h) candidates.push_back(v);
    for (int v : candidates) {
        if (solver.shed_outcome(s, v) != 0) continue;
        VertexMask vbit = VertexMask{1} << v;
        std::vector<VertexMask> linkFaces, delFaces;
        for (VertexMask f : s.facets) {
            if (f & vbit) linkFaces.push_back(f & ~vbit);
            delFaces.push_back(f & ~vbit);
        }
        auto node = std::make_unique<SheddingTree>();
        node->vertex = labels[static_cast<std::size_t>(toAmbient[static_cast<std::size_t>(v)])];
        auto rebase = [&](const std::vector<VertexMask>& faces) {
            auto sub = VdSolver::shrink(faces);
            VertexMask used = 0;
            for (VertexMask f : maximalize(faces)) used |= f;
            std::vector<int> map;
            for (VertexMask m = used; m; m &= m - 1)
                map.push_back(toAmbient[static_cast<std::size_t>(std::countr_zero(m))]);
            return std::pair{std::move(sub), std::move(map)};
        };
        auto [linkSub, linkMap] = rebase(linkFaces);
        auto [delSub, delMap] = rebase(delFaces);
        node->link = build_tree(solver, linkSub, labels, linkMap);
        node->del = build_tree(solver, delSub, labels, delMap);
        return node;
    }
    return nullptr;
}

} // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& c, VdMemo* memo) {
    VdMemo local;
    VdMemo& m = memo ? *memo : local;
    VdSolver solver{m};
    VdSolver::Sub top{c.facet_masks(), c.vertex_count()};
    VdResult result;
    result.decomposable = solver.decide(top);
    if (result.decomposable && top.facets.size() > 1) {
        std::vector<int> identity;
        for (int v = 0; v < c.vertex_count(); ++v) identity.push_back(v);
        result.tree = build_tree(solver, top, c.labels(), identity);
    }
    if (!result.decomposable) {
        for (int v = 0; v < c.vertex_count(); ++v) {
            int outcome = solver.shed_outcome(top, v);
            result.exhausted.push_back(
                c.labels()[static_cast<std::size_t>(v)] +
                (outcome == 1 ? ": deletion gains a non-facet facet" : ": subproblem fails"));
        }
    }
    return result;
}

const char* to_string(Shellability s) {
    switch (s) {
    case Shellability::Shellable: return "shellable";
    case Shellability::NotShellable: return "not_shellable";
    case Shellability::NotPure: return "not_pure";
    case Shellability::Undecided: return "undecided";
    }
    return "unknown";
}

namespace {

// A facet F may extend a placed set P iff every placed facet differs from F
// by at least one vertex that some placed facet pins down as a singleton
// difference. The extendability of a state depends on P as a set only, so
// failed states are memoized.
struct ShellSearch {
    const std::vector<VertexMask>& facets;
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order;

    bool can_place(int j, const std::vector<int>& placed) const {
        VertexMask fj = facets[static_cast<std::size_t>(j)];
        VertexMask singles = 0;
        for (int l : placed) {
            VertexMask diff = fj & ~facets[static_cast<std::size_t>(l)];
            if (std::popcount(diff) == 1) singles |= diff;
        }
        for (int l : placed) {
            VertexMask diff = fj & ~facets[static_cast<std::size_t>(l)];
            if ((diff & singles) == 0) return false;
        }
        return true;
    }

    bool extend(std::uint64_t placedMask, std::vector<int>& placed) {
        if (placed.size() == facets.size()) return true;
        if (dead.contains(placedMask)) return false;
        for (int j = 0; j < static_cast<int>(facets.size()); ++j) {
            if ((placedMask >> j) & 1) continue;
            if (!placed.empty() && !can_place(j, placed)) continue;
            placed.push_back(j);
            if (extend(placedMask | (std::uint64_t{1} << j), placed)) return true;
            placed.pop_back();
        }
        dead.insert(placedMask);
        return false;
    }
};

} // namespace

ShellingResult is_pure_shellable(const SimplicialComplex& c, std::size_t max_facets) {
    ShellingResult r;
    if (c.is_void()) {
        r.status = Shellability::Shellable;
        r.note = "void complex, shellable by convention";
        return r;
    }
    if (!is_pure(c)) {
        r.status = Shellability::NotPure;
        r.note = "not pure";
        return r;
    }
    const auto& fs = c.facet_masks();
    if (fs.size() > max_facets) {
        r.status = Shellability::Undecided;
        r.note = "facet count " + std::to_string(fs.size()) + " exceeds the search limit " +
                 std::to_string(max_facets);
        return r;
    }
    ShellSearch search{fs, {}, {}};
    std::vector<int> placed;
    if (search.extend(0, placed)) {
        r.status = Shellability::Shellable;
        for (int j : placed) {
            std::vector<std::string> f;
            for (int v : mask_to_indices(fs[static_cast<std::size_t>(j)]))
                f.push_back(c.labels()[static_cast<std::size_t>(v)]);
            r.order.push_back(std::move(f));
        }
    } else {
        r.status = Shellability::NotShellable;
    }
    return r;
}

std::vector<VertexMask> minimalize_generators(std::vector<VertexMask> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<VertexMask> out;
    for (VertexMask g : gens) {
        bool divisible = false;
        for (VertexMask h : gens)
            if (h != g && (g & h) == h) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), mask_sequence_less);
    return out;
}

std::vector<std::vector<std::string>> SquarefreeMonomialIdeal::generator_supports() const {
    std::vector<std::vector<std::string>> out;
    for (VertexMask g : generators) {
        std::vector<std::string> s;
        for (int v : mask_to_indices(g)) s.push_back(variables[static_cast<std::size_t>(v)]);
        out.push_back(std::move(s));
    }
    return out;
}

SquarefreeMonomialIdeal cover_ideal(const Graph& g) {
    SquarefreeMonomialIdeal ideal;
    ideal.variables = g.labels();
    VertexMask all = g.all_vertices_mask();
    std::vector<VertexMask> gens;
    for (VertexMask s : maximal_independent_set_masks(g)) gens.push_back(all & ~s);
    ideal.generators = minimalize_generators(std::move(gens));
    return ideal;
}

namespace {

void hitting_sets_rec(const std::vector<VertexMask>& sets, VertexMask chosen,
                      std::size_t from, std::vector<VertexMask>& out) {
    // First set not yet hit.
    for (std::size_t i = from; i < sets.size(); ++i) {
        if (sets[i] & chosen) continue;
        for (VertexMask m = sets[i]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            hitting_sets_rec(sets, chosen | (VertexMask{1} << v), i + 1, out);
        }
        return;
    }
    out.push_back(chosen);
}

} // namespace

std::vector<VertexMask> minimal_hitting_sets(const std::vector<VertexMask>& sets, int nvars) {
    (void)nvars;
    for (VertexMask s : sets)
        if (s == 0) return {}; // the empty set cannot be hit
    std::vector<VertexMask> out;
    hitting_sets_rec(sets, 0, 0, out);
    return minimalize_generators(std::move(out));
}

SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal) {
    for (VertexMask g : ideal.generators)
        if (g == 0) return SimplicialComplex::void_complex();
    int n = static_cast<int>(ideal.variables.size());
    VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    if (ideal.generators.empty())
        return complex_from_masks(ideal.variables, {all}, false);
    std::vector<VertexMask> facets;
    for (VertexMask t : minimal_hitting_sets(ideal.generators, n)) facets.push_back(all & ~t);
    return complex_from_masks(ideal.variables, std::move(facets), false);
}

bool cover_ideal_splitting_check(const Graph& g, const VwcLabeling& lab) {
    validate_labeling(g, lab);
    if (lab.size() == 0) throw PreconditionError("labeling has no pairs");
    if (!ascending_property_holds(g, lab))
        throw PreconditionError("labeling does not satisfy the ascending property");
    int x1 = lab.x(0), y1 = lab.y(0);
    if (g.degree(y1) != 1)
        throw PreconditionError("distinguished independent vertex must have degree 1");

    VertexMask all = g.all_vertices_mask();
    VertexMask nx1 = g.adjacency(x1);
    VertexMask primeMask = all & ~nx1 & ~(VertexMask{1} << x1);        // V minus N[x_1]
    VertexMask doubleMask = all & ~(VertexMask{1} << x1) & ~(VertexMask{1} << y1);

    Graph gPrime = induced_subgraph(g, primeMask);
    Graph gDouble = induced_subgraph(g, doubleMask);

    // Re-express cover-ideal generators of the subgraphs in g's vertex masks.
    auto gens_in_g = [&](const Graph& h) {
        std::vector<VertexMask> out;
        for (VertexMask s : cover_ideal(h).generators) {
            VertexMask m = 0;
            for (int v : mask_to_indices(s)) m |= VertexMask{1} << *g.index_of(h.label(v));
            out.push_back(m);
        }
        return out;
    };
    std::vector<VertexMask> primeGens = gens_in_g(gPrime);
    std::vector<VertexMask> doubleGens = gens_in_g(gDouble);

    VertexMask x1bit = VertexMask{1} << x1;
    VertexMask scale = nx1; // x_{i_1}..x_{i_k} y_1 y_{j_1}..y_{j_s} = N(x_1) as a mask

    std::vector<VertexMask> rhs;
    for (VertexMask m : doubleGens) rhs.push_back(x1bit | m);
    for (VertexMask m : primeGens) rhs.push_back(scale | m);
    bool identityOne = minimalize_generators(std::move(rhs)) == cover_ideal(g).generators;

    std::vector<VertexMask> intersection;
    for (VertexMask a : doubleGens)
        for (VertexMask b : primeGens) intersection.push_back(x1bit | a | scale | b);
    std::vector<VertexMask> expected;
    for (VertexMask b : primeGens) expected.push_back(x1bit | scale | b);
    bool identityTwo =
        minimalize_generators(std::move(intersection)) == minimalize_generators(std::move(expected));

    return identityOne && identityTwo;
}

} // namespace vwc
