#include "ridgechord/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ridgechord {

namespace {

constexpr std::size_t kCliqueEnumerationCap = 8'000'000;

template <typename Fn>
void for_each_card_subset(int n, int c, Fn&& fn) {
    // c-subsets of {1..n} as bitmasks, ascending
    if (c < 0 || c > n) return;
    if (c == 0) {
        fn(Face{});
        return;
    }
    std::uint64_t v = (c == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
    while (true) {
        fn(Face::from_bits(v));
        if (v == 0) break;
        std::uint64_t low = v & (~v + 1);
        std::uint64_t r = v + low;
        v = (((r ^ v) >> 2) / low) | r;
        if (n < 64 && v >= (std::uint64_t{1} << n)) break;
        if (n == 64 && v < r) break;
    }
}

}  // namespace

SimplicialComplex clique_complex(const SimplicialComplex& cx) {
    if (!cx.is_pure()) throw std::invalid_argument("clique_complex: complex is not pure");
    const int d = cx.dimension();
    if (d < 0) throw std::invalid_argument("clique_complex: complex has no vertices");
    const int n = cx.ground_set_size();

    std::unordered_set<std::uint64_t> facet_set;
    for (Face f : cx.facets()) facet_set.insert(f.bits());

    // All cliques of size >= d+1, generated once each by extending with a
    // vertex above the current maximum. Prefixes of cliques are cliques, so
    // this reaches everything.
    std::unordered_set<std::uint64_t> cliques;
    std::vector<Face> frontier;
    for (Face f : cx.facets()) {
        cliques.insert(f.bits());
        frontier.push_back(f);
    }
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (Face c : frontier) {
            for (int v = c.max_vertex() + 1; v <= n; ++v) {
                Face cand = c.with(v);
                if (cliques.count(cand.bits())) continue;
                bool ok = true;
                // (d+1)-subsets of cand containing v <-> d-subsets of c
                std::vector<int> cv = c.vertices();
                // choose d elements of c, add v
                std::vector<int> idx(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
                const int m = static_cast<int>(cv.size());
                if (d == 0) {
                    ok = facet_set.count(Face::of({v}).bits()) != 0;
                } else {
                    while (ok) {
                        Face s = Face::of({v});
                        for (int i : idx) s = s.with(cv[static_cast<std::size_t>(i)]);
                        if (!facet_set.count(s.bits())) ok = false;
                        int i = d - 1;
                        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - d + i) --i;
                        if (i < 0) break;
                        ++idx[static_cast<std::size_t>(i)];
                        for (int j = i + 1; j < d; ++j)
                            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                    }
                }
                if (ok) {
                    cliques.insert(cand.bits());
                    next.push_back(cand);
                    if (cliques.size() > kCliqueEnumerationCap)
                        throw std::runtime_error("clique_complex: clique closure too large");
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<Face> result;
    for (std::uint64_t bits : cliques) {
        Face c = Face::from_bits(bits);
        bool maximal = true;
        for (int v = 1; v <= n && maximal; ++v)
            if (!c.has_vertex(v) && cliques.count(c.with(v).bits())) maximal = false;
        if (maximal) result.push_back(c);
    }
    // d-subsets of the ground set contained in no facet are maximal faces of
    // the closure as well (every set of size <= d is vacuously a clique).
    for_each_card_subset(n, d, [&](Face s) {
        if (!cx.contains_face(s)) result.push_back(s);
    });
    return SimplicialComplex::from_facets(n, std::move(result));
}

SimplicialComplex alexander_dual(const SimplicialComplex& cx) {
    const int n = cx.ground_set_size();
    const Face ground = full_face(n);
    std::vector<Face> duals;
    for (Face nf : minimal_nonfaces(cx)) duals.push_back(ground.minus(nf));
    return SimplicialComplex::from_facets(n, std::move(duals));
}

const std::vector<Face>& dual_c2_shelling_facets() {
    static const std::vector<Face> order = {
        Face::of({4, 5, 6, 7}), Face::of({3, 5, 6, 7}), Face::of({2, 4, 6, 7}),
        Face::of({1, 4, 6, 7}), Face::of({1, 3, 6, 7}), Face::of({1, 2, 6, 7}),
        Face::of({3, 4, 5, 7}), Face::of({1, 3, 5, 7}), Face::of({1, 2, 5, 7}),
        Face::of({2, 3, 5, 7}), Face::of({2, 3, 4, 7}), Face::of({1, 2, 4, 7}),
        Face::of({3, 4, 5, 6}), Face::of({2, 3, 4, 6}), Face::of({2, 3, 5, 6}),
        Face::of({1, 2, 5, 6}), Face::of({1, 3, 4, 6}), Face::of({1, 2, 4, 6}),
        Face::of({1, 2, 3, 6}), Face::of({1, 3, 4, 5}), Face::of({1, 2, 4, 5}),
        Face::of({1, 2, 3, 4}),
    };
    return order;
}

SimplicialComplex derive_c2() {
    std::unordered_set<std::uint64_t> listed;
    for (Face f : dual_c2_shelling_facets()) listed.insert(f.bits());
    const Face ground = full_face(7);
    std::vector<Face> triangles;
    for_each_card_subset(7, 3, [&](Face t) {
        if (!listed.count(ground.minus(t).bits())) triangles.push_back(t);
    });
    SimplicialComplex c2 = SimplicialComplex::from_facets(7, std::move(triangles));
    // Integrity self-test; failure means the embedded constant is corrupt.
    if (c2.facet_count() != 13 || !c2.is_pure() || c2.dimension() != 2 ||
        c2.support() != ground || free_ridges(c2).size() != 1)
        throw std::logic_error("derive_c2: embedded shelling data failed the integrity check");
    return c2;
}

Face c2_free_ridge() {
    return free_ridges(derive_c2()).front();
}

GluedFamily build_delta(int k, const SimplicialComplex& base, Face base_free_ridge) {
    if (k < 1) throw std::invalid_argument("build_delta: k must be >= 1");
    if (!base.is_pure() || base.dimension() < 1)
        throw std::invalid_argument("build_delta: base must be pure of dimension >= 1");
    const std::vector<Face> fr = free_ridges(base);
    if (std::find(fr.begin(), fr.end(), base_free_ridge) == fr.end())
        throw std::invalid_argument("build_delta: " + base_free_ridge.to_string() +
                                    " is not a free ridge of the base complex");

    const int d = base.dimension();
    const std::vector<int> ridge_verts = base_free_ridge.vertices();
    const std::vector<int> private_verts = base.support().minus(base_free_ridge).vertices();
    const int p = static_cast<int>(private_verts.size());
    const int n_out = d + p * k;
    if (n_out > kMaxGroundSize)
        throw std::invalid_argument("build_delta: glued family needs " + std::to_string(n_out) +
                                    " vertices, beyond the 64-vertex ground set");

    GluedFamily fam;
    fam.d = d;
    fam.k = k;
    for (int i = 1; i <= d; ++i) fam.shared_ridge = fam.shared_ridge.with(i);

    std::vector<Face> facets;
    for (int j = 0; j < k; ++j) {
        int map[kMaxGroundSize + 1] = {};
        for (std::size_t i = 0; i < ridge_verts.size(); ++i)
            map[ridge_verts[i]] = static_cast<int>(i) + 1;
        Face block;
        for (int i = 0; i < p; ++i) {
            int label = d + p * j + i + 1;
            map[private_verts[static_cast<std::size_t>(i)]] = label;
            block = block.with(label);
        }
        fam.copy_private_vertices.push_back(block);
        for (Face f : base.facets()) {
            Face g;
            for (int v : f.vertices()) g = g.with(map[v]);
            facets.push_back(g);
        }
    }
    fam.complex = SimplicialComplex::from_facets(n_out, std::move(facets));
    return fam;
}

SimplicialComplex simplex_skeleton(int n, int s) {
    if (n < 0 || s < 0 || s > n)
        throw std::invalid_argument("simplex_skeleton: need 0 <= s <= n");
    if (n + 1 > kMaxGroundSize)
        throw std::invalid_argument("simplex_skeleton: simplex too large");
    std::vector<Face> facets;
    for_each_card_subset(n + 1, s + 1, [&](Face f) { facets.push_back(f); });
    return SimplicialComplex::from_maximal_facets(n + 1, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       bool relabel_second) {
    int shift = 0;
    int n_out = std::max(a.ground_set_size(), b.ground_set_size());
    if (relabel_second) {
        shift = a.ground_set_size();
        n_out = a.ground_set_size() + b.ground_set_size();
    } else if (!a.support().intersect(b.support()).empty()) {
        throw std::invalid_argument("join: overlapping vertex supports (pass relabel_second)");
    }
    if (n_out > kMaxGroundSize) throw std::invalid_argument("join: ground set exceeds 64");
    std::vector<Face> facets;
    for (Face f : a.facets())
        for (Face g : b.facets())
            facets.push_back(f.unite(Face::from_bits(g.bits() << shift)));
    return SimplicialComplex::from_maximal_facets(n_out, std::move(facets));
}

SimplicialComplex boundary_of_simplex(Face vertices, int n) {
    if (vertices.empty())
        throw std::invalid_argument("boundary_of_simplex: empty vertex set");
    if (n == 0) n = vertices.max_vertex();
    std::vector<Face> facets;
    if (vertices.size() == 1) {
        facets.push_back(Face{});  // ∂(point) = {∅}
    } else {
        for (int v : vertices.vertices()) facets.push_back(vertices.without(v));
    }
    return SimplicialComplex::from_maximal_facets(n, std::move(facets));
}

Face relabel_face_down(Face f, Face removed, int n) {
    Face out;
    int next = 0;
    for (int v = 1; v <= n; ++v) {
        if (removed.has_vertex(v)) continue;
        ++next;
        if (f.has_vertex(v)) out = out.with(next);
    }
    return out;
}

Face relabel_face_up(Face f, Face removed, int n) {
    Face out;
    int small = 0;
    for (int v = 1; v <= n; ++v) {
        if (removed.has_vertex(v)) continue;
        ++small;
        if (f.has_vertex(small)) out = out.with(v);
    }
    return out;
}

SimplicialComplex relabel_complex_down(const SimplicialComplex& cx, Face removed) {
    const int n = cx.ground_set_size();
    if (!cx.support().intersect(removed).empty())
        throw std::invalid_argument("relabel_complex_down: removed vertices occur in the complex");
    std::vector<Face> facets;
    for (Face f : cx.facets()) facets.push_back(relabel_face_down(f, removed, n));
    return SimplicialComplex::from_maximal_facets(n - removed.size(), std::move(facets));
}

}  // namespace ridgechord
