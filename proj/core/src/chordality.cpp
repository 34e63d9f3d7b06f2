#include "ridgechord/chordality.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ridgechord/constructions.hpp"

namespace ridgechord {

namespace {

void require_ridge(const SimplicialComplex& cx, Face r, const char* op) {
    if (!cx.is_pure()) throw std::invalid_argument(std::string(op) + ": complex is not pure");
    if (r.dim() != cx.dimension() - 1 || !cx.contains_face(r))
        throw std::invalid_argument(std::string(op) + ": " + r.to_string() + " is not a ridge");
}

bool is_clique_of(const SimplicialComplex& cx, Face vertex_set) {
    const int d1 = cx.dimension() + 1;
    if (vertex_set.size() <= cx.dimension()) return true;  // vacuous
    std::unordered_set<std::uint64_t> facet_set;
    for (Face f : cx.facets()) facet_set.insert(f.bits());
    std::vector<int> vs = vertex_set.vertices();
    const int m = static_cast<int>(vs.size());
    std::vector<int> idx(static_cast<std::size_t>(d1));
    for (int i = 0; i < d1; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Face s;
        for (int i : idx) s = s.with(vs[static_cast<std::size_t>(i)]);
        if (!facet_set.count(s.bits())) return false;
        int i = d1 - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - d1 + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d1; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace

bool free_in_clique_complex(const SimplicialComplex& cx, Face r) {
    const SimplicialComplex cl = clique_complex(cx);
    int strictly_containing = 0;
    for (Face f : cl.facets())
        if (r.proper_subset_of(f) && ++strictly_containing > 1) break;
    return strictly_containing == 1;
}

bool is_simplicial_ridge(const SimplicialComplex& cx, Face r, bool cross_check) {
    require_ridge(cx, r, "is_simplicial_ridge");
    const bool fast = is_clique_of(cx, star_vertices(cx, r));
    if (cross_check) {
        const bool via_closure = free_in_clique_complex(cx, r);
        if (fast != via_closure)
            throw std::logic_error("is_simplicial_ridge: clique test and clique-closure freeness disagree on " +
                                   r.to_string());
    }
    return fast;
}

SimplicialComplex delete_ridge(const SimplicialComplex& cx, Face r) {
    require_ridge(cx, r, "delete_ridge");
    std::vector<Face> kept;
    for (Face f : cx.facets())
        if (!r.subset_of(f)) kept.push_back(f);
    return SimplicialComplex::from_maximal_facets(cx.ground_set_size(), std::move(kept));
}

bool replay_elimination(const SimplicialComplex& cx, const std::vector<EliminationStep>& steps) {
    SimplicialComplex cur = cx;
    for (const EliminationStep& st : steps) {
        if (cur.is_void()) return false;
        if (st.ridge.dim() != cur.dimension() - 1 || !cur.contains_face(st.ridge)) return false;
        if (star_vertices(cur, st.ridge) != st.star_vertex_set) return false;
        if (!is_clique_of(cur, st.star_vertex_set)) return false;
        cur = delete_ridge(cur, st.ridge);
    }
    return cur.is_void();
}

namespace {

struct ChordalSearch {
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead;

    bool run(const SimplicialComplex& cx, std::vector<EliminationStep>& path) {
        if (cx.is_void()) return true;
        if (++nodes > budget) {
            exhausted_budget = true;
            return false;
        }
        auto key = cx.canonical_key();
        if (dead.count(key)) return false;
        for (Face r : ridges(cx)) {
            Face sv = star_vertices(cx, r);
            if (!is_clique_of(cx, sv)) continue;
            path.push_back({r, sv});
            if (run(delete_ridge(cx, r), path)) return true;
            if (exhausted_budget) return false;
            path.pop_back();
        }
        dead.insert(std::move(key));
        return false;
    }
};

}  // namespace

EliminationTrace is_ridge_chordal(const SimplicialComplex& cx, SearchBudget budget) {
    if (!cx.is_pure()) throw std::invalid_argument("is_ridge_chordal: complex is not pure");
    EliminationTrace trace;
    if (cx.is_void()) {
        trace.verdict = Verdict::Yes;
        return trace;
    }
    if (cx.dimension() < 0) {
        // the empty complex {∅} has a facet but no ridge to delete
        trace.verdict = Verdict::No;
        return trace;
    }
    ChordalSearch search;
    search.budget = budget.max_nodes;
    std::vector<EliminationStep> path;
    const bool found = search.run(cx, path);
    trace.explored_states = search.nodes;
    if (found) {
        if (!replay_elimination(cx, path))
            throw std::logic_error("is_ridge_chordal: produced a trace that fails replay");
        trace.verdict = Verdict::Yes;
        trace.steps = std::move(path);
    } else {
        trace.verdict = search.exhausted_budget ? Verdict::Unknown : Verdict::No;
    }
    return trace;
}

bool graph_chordality_oracle(const SimplicialComplex& graph) {
    if (!graph.is_pure() || graph.dimension() != 1)
        throw std::invalid_argument("graph_chordality_oracle: input is not a pure 1-complex");
    const std::vector<int> verts = graph.support().vertices();
    const int m = static_cast<int>(verts.size());
    std::unordered_map<int, int> index;
    for (int i = 0; i < m; ++i) index[verts[static_cast<std::size_t>(i)]] = i;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (Face e : graph.facets()) {
        std::vector<int> uv = e.vertices();
        int a = index[uv[0]], b = index[uv[1]];
        adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }

    // Maximum cardinality search, choosing the smallest label among ties.
    std::vector<int> weight(static_cast<std::size_t>(m), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(m), false);
    std::vector<int> order;  // reverse elimination order
    for (int step = 0; step < m; ++step) {
        int best = -1;
        for (int i = 0; i < m; ++i)
            if (!numbered[static_cast<std::size_t>(i)] &&
                (best == -1 || weight[static_cast<std::size_t>(i)] > weight[static_cast<std::size_t>(best)]))
                best = i;
        numbered[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        for (int i = 0; i < m; ++i)
            if (!numbered[static_cast<std::size_t>(i)] &&
                (adj[static_cast<std::size_t>(best)] >> i) & 1u)
                ++weight[static_cast<std::size_t>(i)];
    }

    // Perfect elimination check: earlier-numbered neighbors of each vertex
    // must form a clique; it suffices to check against the latest of them.
    std::vector<int> rank(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = m - 1; i >= 0; --i) {
        int v = order[static_cast<std::size_t>(i)];
        std::uint64_t earlier = 0;
        for (int j = 0; j < m; ++j)
            if (((adj[static_cast<std::size_t>(v)] >> j) & 1u) &&
                rank[static_cast<std::size_t>(j)] < i)
                earlier |= std::uint64_t{1} << j;
        if (earlier == 0) continue;
        int latest = -1;
        for (int j = 0; j < m; ++j)
            if (((earlier >> j) & 1u) &&
                (latest == -1 || rank[static_cast<std::size_t>(j)] > rank[static_cast<std::size_t>(latest)]))
                latest = j;
        std::uint64_t rest = earlier & ~(std::uint64_t{1} << latest);
        if ((rest & ~adj[static_cast<std::size_t>(latest)]) != 0) return false;
    }
    return true;
}

}  // namespace ridgechord
