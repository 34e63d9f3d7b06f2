#ifndef RIDGECHORD_COMPLEX_HPP
#define RIDGECHORD_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ridgechord/face.hpp"

namespace ridgechord {

struct ComplexStats {
    int dimension = -1;           // -1 for the void and the empty complex
    std::size_t facet_count = 0;  // 0 distinguishes void from empty ({} vs {∅})
    std::vector<std::size_t> f_vector;  // f_vector[i] = number of i-dimensional faces
    int vertex_count = 0;
};

/// A simplicial complex over the ground set {1..n}, represented by its
/// inclusion-maximal faces (facets), kept sorted in face-lex order.
///
/// Two degenerate values are distinct on purpose: the void complex has no
/// facets at all, while the empty complex has the single facet ∅. Both are
/// pure. Recursive checkers rely on the distinction for their base cases.
///
/// Values are immutable after construction; all operations build new values,
/// so complexes can be shared freely across threads.
class SimplicialComplex {
public:
    /// Canonicalizing constructor: drops duplicate and non-maximal input
    /// sets, sorts, and computes purity. Vertices must lie in {1..n}.
    static SimplicialComplex from_facets(int n, std::vector<Face> raw_facets);

    /// Complex generated by the given facets, which the caller promises are
    /// already an antichain. Only canonical sorting is performed (checked in
    /// debug builds).
    static SimplicialComplex from_maximal_facets(int n, std::vector<Face> facets);

    static SimplicialComplex void_complex(int n) { return from_maximal_facets(n, {}); }
    static SimplicialComplex empty_complex(int n) { return from_maximal_facets(n, {Face{}}); }
    static SimplicialComplex simplex(int n, Face vertices) {
        return from_maximal_facets(n, {vertices});
    }

    int ground_set_size() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    bool is_pure() const { return pure_; }

    /// -1 for both the void complex and the empty complex; otherwise the
    /// largest facet dimension.
    int dimension() const { return dim_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
    /// A complex with at most one facet is (the face poset of) a simplex.
    bool is_simplex() const { return facets_.size() <= 1; }
    bool is_full_simplex() const {
        return facets_.size() == 1 && facets_[0] == full_face(n_);
    }

    /// Membership: σ is a face iff it is contained in some facet.
    bool contains_face(Face sigma) const;

    /// All i-dimensional faces, deduplicated, in face-lex order. Out-of-range
    /// i gives the empty set; i = -1 gives {∅} for any nonvoid complex.
    std::vector<Face> faces_of_dim(int i) const;

    ComplexStats stats() const;

    /// Distinct vertices that occur in some facet.
    Face support() const;

    /// Canonical key (sorted facet bitmasks); equal complexes over equal
    /// ground sets have equal keys. Used for memoization and digests.
    std::vector<std::uint64_t> canonical_key() const;
    std::uint64_t digest() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    SimplicialComplex() = default;

    int n_ = 0;
    std::vector<Face> facets_;
    bool pure_ = true;
    int dim_ = -1;
};

/// Keep only inclusion-maximal faces of the given family, sorted face-lex.
std::vector<Face> maximalize(std::vector<Face> faces);

/// All (d-1)-dimensional faces of a pure d-dimensional complex.
/// Rejects non-pure input.
std::vector<Face> ridges(const SimplicialComplex& cx);

/// link: facets are the residues F \ σ over facets F ⊇ σ.
SimplicialComplex link(const SimplicialComplex& cx, Face sigma);

/// deletion: maximal faces not containing σ. Ground set is kept unchanged
/// even if vertices disappear (Alexander duality needs a stable ground set).
SimplicialComplex deletion(const SimplicialComplex& cx, Face sigma);

/// star: complex generated by the facets containing σ.
SimplicialComplex star(const SimplicialComplex& cx, Face sigma);

/// Union of all facets containing σ, as a vertex set.
Face star_vertices(const SimplicialComplex& cx, Face sigma);

/// Inclusion-minimal subsets of {1..n} that are not faces. For the void
/// complex this is {∅}; unused ground-set vertices appear as singletons.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx);

/// Faces strictly contained in exactly one facet.
std::vector<Face> free_faces(const SimplicialComplex& cx);

/// Ridges contained in exactly one facet (pure input required).
std::vector<Face> free_ridges(const SimplicialComplex& cx);

}  // namespace ridgechord

#endif
