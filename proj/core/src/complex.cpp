#include "ridgechord/complex.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ridgechord {

namespace {

/// Enumerate all subsets of `mask` with exactly `c` elements.
template <typename Fn>
void for_each_subset_of_size(std::uint64_t mask, int c, Fn&& fn) {
    std::vector<int> pos;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) pos.push_back(std::countr_zero(b));
    const int m = static_cast<int>(pos.size());
    if (c < 0 || c > m) return;
    if (c == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t s = 0;
        for (int i : idx) s |= std::uint64_t{1} << pos[static_cast<std::size_t>(i)];
        fn(s);
        int i = c - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - c + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Next c-subset of {0..n-1} in Gosper order; returns false when exhausted.
bool next_gosper(std::uint64_t& v, int n) {
    if (v == 0) return false;
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
    if (n == 64) return v >= r;  // wrapped
    return v < (std::uint64_t{1} << n);
}

}  // namespace

std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return a.bits() < b.bits(); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Sort by size descending so containment only needs to look at earlier kept faces.
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return a.size() > b.size(); });
    std::vector<Face> kept;
    kept.reserve(faces.size());
    for (Face f : faces) {
        bool dominated = false;
        for (Face k : kept) {
            if (f.subset_of(k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), FaceLexLess{});
    return kept;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> raw_facets) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground set size must be in 0..64");
    const Face ground = full_face(n);
    for (Face f : raw_facets) {
        if (!f.subset_of(ground))
            throw std::invalid_argument("facet " + f.to_string() +
                                        " has vertices outside {1.." + std::to_string(n) + "}");
    }
    return from_maximal_facets(n, maximalize(std::move(raw_facets)));
}

SimplicialComplex SimplicialComplex::from_maximal_facets(int n, std::vector<Face> facets) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground set size must be in 0..64");
    std::sort(facets.begin(), facets.end(), FaceLexLess{});
#ifndef NDEBUG
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            assert(i == j || !facets[i].subset_of(facets[j]));
#endif
    SimplicialComplex cx;
    cx.n_ = n;
    cx.facets_ = std::move(facets);
    cx.dim_ = -1;
    cx.pure_ = true;
    if (!cx.facets_.empty()) {
        int lo = kMaxGroundSize + 1, hi = -2;
        for (Face f : cx.facets_) {
            lo = std::min(lo, f.dim());
            hi = std::max(hi, f.dim());
        }
        cx.dim_ = hi;
        cx.pure_ = (lo == hi);
    }
    return cx;
}

bool SimplicialComplex::contains_face(Face sigma) const {
    for (Face f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int i) const {
    std::vector<Face> out;
    if (is_void() || i < -1 || i > dim_) return out;
    if (i == -1) {
        out.push_back(Face{});
        return out;
    }
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        for_each_subset_of_size(f.bits(), i + 1, [&](std::uint64_t s) { seen.insert(s); });
    }
    out.reserve(seen.size());
    for (std::uint64_t s : seen) out.push_back(Face::from_bits(s));
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

ComplexStats SimplicialComplex::stats() const {
    ComplexStats st;
    st.dimension = dim_;
    st.facet_count = facets_.size();
    st.vertex_count = support().size();
    for (int i = 0; i <= dim_; ++i) st.f_vector.push_back(faces_of_dim(i).size());
    return st;
}

Face SimplicialComplex::support() const {
    Face s;
    for (Face f : facets_) s = s.unite(f);
    return s;
}

std::vector<std::uint64_t> SimplicialComplex::canonical_key() const {
    std::vector<std::uint64_t> key;
    key.reserve(facets_.size() + 1);
    key.push_back(static_cast<std::uint64_t>(n_));
    for (Face f : facets_) key.push_back(f.bits());
    std::sort(key.begin() + 1, key.end());
    return key;
}

std::uint64_t SimplicialComplex::digest() const {
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint64_t w : canonical_key()) {
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::vector<Face> ridges(const SimplicialComplex& cx) {
    if (!cx.is_pure()) throw std::invalid_argument("ridges: complex is not pure");
    if (cx.dimension() < 0) return {};
    return cx.faces_of_dim(cx.dimension() - 1);
}

namespace {
void require_face(const SimplicialComplex& cx, Face sigma, const char* op) {
    if (!cx.contains_face(sigma))
        throw std::invalid_argument(std::string(op) + ": " + sigma.to_string() +
                                    " is not a face of the complex");
}
}  // namespace

SimplicialComplex link(const SimplicialComplex& cx, Face sigma) {
    require_face(cx, sigma, "link");
    std::vector<Face> res;
    for (Face f : cx.facets())
        if (sigma.subset_of(f)) res.push_back(f.minus(sigma));
    return SimplicialComplex::from_maximal_facets(cx.ground_set_size(), maximalize(std::move(res)));
}

SimplicialComplex deletion(const SimplicialComplex& cx, Face sigma) {
    require_face(cx, sigma, "deletion");
    if (sigma.empty())
        return SimplicialComplex::void_complex(cx.ground_set_size());
    std::vector<Face> res;
    for (Face f : cx.facets()) {
        if (!sigma.subset_of(f)) {
            res.push_back(f);
        } else {
            for (int v : sigma.vertices()) res.push_back(f.without(v));
        }
    }
    return SimplicialComplex::from_maximal_facets(cx.ground_set_size(), maximalize(std::move(res)));
}

SimplicialComplex star(const SimplicialComplex& cx, Face sigma) {
    require_face(cx, sigma, "star");
    std::vector<Face> res;
    for (Face f : cx.facets())
        if (sigma.subset_of(f)) res.push_back(f);
    return SimplicialComplex::from_maximal_facets(cx.ground_set_size(), std::move(res));
}

Face star_vertices(const SimplicialComplex& cx, Face sigma) {
    require_face(cx, sigma, "star_vertices");
    Face s;
    for (Face f : cx.facets())
        if (sigma.subset_of(f)) s = s.unite(f);
    return s;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx) {
    std::vector<Face> out;
    if (cx.is_void()) {
        out.push_back(Face{});  // ∅ itself is not a face
        return out;
    }
    const int n = cx.ground_set_size();
    const int maxcard = std::min(n, cx.dimension() + 2);
    for (int c = 1; c <= maxcard; ++c) {
        std::uint64_t s = (c == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
        bool more = true;
        while (more) {
            Face f = Face::from_bits(s);
            if (!cx.contains_face(f)) {
                bool minimal = true;
                for (std::uint64_t b = s; b != 0 && minimal; b &= b - 1) {
                    Face sub = Face::from_bits(s & ~(b & (~b + 1)));
                    if (!cx.contains_face(sub)) minimal = false;
                }
                if (minimal) out.push_back(f);
            }
            more = next_gosper(s, n);
        }
    }
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

std::vector<Face> free_faces(const SimplicialComplex& cx) {
    std::unordered_map<std::uint64_t, int> containing;
    for (Face f : cx.facets()) {
        const int m = f.size();
        for (int c = 0; c < m; ++c) {
            for_each_subset_of_size(f.bits(), c, [&](std::uint64_t s) { ++containing[s]; });
        }
    }
    std::vector<Face> out;
    for (auto [bits, cnt] : containing)
        if (cnt == 1) out.push_back(Face::from_bits(bits));
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

std::vector<Face> free_ridges(const SimplicialComplex& cx) {
    if (!cx.is_pure()) throw std::invalid_argument("free_ridges: complex is not pure");
    std::unordered_map<std::uint64_t, int> count;
    for (Face f : cx.facets())
        for (int v : f.vertices()) ++count[f.without(v).bits()];
    std::vector<Face> out;
    for (auto [bits, cnt] : count)
        if (cnt == 1) out.push_back(Face::from_bits(bits));
    std::sort(out.begin(), out.end(), FaceLexLess{});
    return out;
}

}  // namespace ridgechord
