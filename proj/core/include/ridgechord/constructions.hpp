#ifndef RIDGECHORD_CONSTRUCTIONS_HPP
#define RIDGECHORD_CONSTRUCTIONS_HPP

#include <vector>

#include "ridgechord/complex.hpp"

namespace ridgechord {

/// Clique closure of a pure d-complex: faces are all V ⊆ {1..n} whose
/// (d+1)-subsets are all facets (vacuously every set of size ≤ d). The
/// result has the same d-faces as the input and contains every d-subset of
/// the ground set.
SimplicialComplex clique_complex(const SimplicialComplex& cx);

/// Combinatorial Alexander dual over the fixed ground set {1..n}: the faces
/// of the dual are the complements of the non-faces, so its facets are the
/// complements of the minimal non-faces. Involutive away from the full
/// simplex, whose dual is the void complex.
SimplicialComplex alexander_dual(const SimplicialComplex& cx);

/// The 22-facet shelling order embedded as a constant (facets of the
/// Alexander dual of the clique closure of the seed complex c2, on 7
/// vertices). Exported for auditing and reusable as a `check shelling`
/// order file.
const std::vector<Face>& dual_c2_shelling_facets();

/// Reconstructs the seed 2-complex c2 on 7 vertices from the embedded dual
/// shelling: its triangles are the 13 triples of {1..7} whose complements do
/// not occur in the 22-facet list. Construction doubles as a data-integrity
/// self-test: it aborts unless the result has 13 triangles, 7 vertices and
/// exactly one free ridge.
SimplicialComplex derive_c2();

/// The unique free ridge of derive_c2().
Face c2_free_ridge();

/// k copies of a pure d-complex glued along a designated free ridge,
/// canonically relabeled: the shared ridge becomes {1..d} and the j-th
/// copy's private vertices the next block of p = n_base - d labels,
/// {d + p(j-1) + 1 .. d + pj}.
struct GluedFamily {
    int d = 0;
    int k = 0;
    Face shared_ridge;
    std::vector<Face> copy_private_vertices;  // γ_j, pairwise disjoint
    SimplicialComplex complex;

    Face gamma(int j) const { return copy_private_vertices.at(static_cast<std::size_t>(j)); }
};

GluedFamily build_delta(int k, const SimplicialComplex& base, Face base_free_ridge);

/// The s-skeleton of the simplex on {1..n}: all (s+1)-subsets as facets.
SimplicialComplex simplex_skeleton(int n, int s);

/// Join of two complexes. Supports must be disjoint; with relabel_second,
/// the second complex is shifted above the first one's ground set.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       bool relabel_second = false);

/// Boundary of the simplex on the given vertex set, over ground set {1..n}
/// (n defaults to the largest vertex).
SimplicialComplex boundary_of_simplex(Face vertices, int n = 0);

/// Order-preserving relabeling helpers used when grafting certificates of a
/// smaller canonical family into a bigger one.
///
/// removed ⊆ {1..n}; the i-th smallest remaining vertex maps to/from i+1.
Face relabel_face_down(Face f, Face removed, int n);
Face relabel_face_up(Face f, Face removed, int n);
SimplicialComplex relabel_complex_down(const SimplicialComplex& cx, Face removed);

}  // namespace ridgechord

#endif
