#ifndef RIDGECHORD_CHORDALITY_HPP
#define RIDGECHORD_CHORDALITY_HPP

#include <cstdint>
#include <vector>

#include "ridgechord/complex.hpp"
#include "ridgechord/search.hpp"

namespace ridgechord {

/// True iff the vertices of the star of ridge r form a clique, i.e. r can be
/// eliminated next. With cross_check, the independently computed equivalent
/// condition "r is strictly contained in exactly one facet of the clique
/// closure" is evaluated too and disagreement throws.
bool is_simplicial_ridge(const SimplicialComplex& cx, Face r, bool cross_check = false);

/// Freeness of r in clique_complex(cx); the cross-check side above, exposed
/// so property tests can exercise both routes explicitly.
bool free_in_clique_complex(const SimplicialComplex& cx, Face r);

/// Clutter-style ridge deletion: the complex generated by the facets not
/// containing r. Ground set unchanged.
SimplicialComplex delete_ridge(const SimplicialComplex& cx, Face r);

struct EliminationStep {
    Face ridge;
    Face star_vertex_set;  // clique witness at deletion time
};

struct EliminationTrace {
    Verdict verdict = Verdict::Unknown;  // Yes = reducible to no facets
    std::vector<EliminationStep> steps;  // full elimination when verdict == Yes
    std::uint64_t explored_states = 0;
};

/// Replays the steps from cx: every step's ridge must be simplicial at its
/// turn and the final complex must have no facets.
bool replay_elimination(const SimplicialComplex& cx, const std::vector<EliminationStep>& steps);

/// Exhaustive backtracking over simplicial-ridge eliminations, memoizing
/// dead facet-set states. Greedy success ends the search; greedy failure is
/// never reported as a refutation — only exhaustion is. Traces are
/// replay-verified before return. Candidates in face-lex order.
EliminationTrace is_ridge_chordal(const SimplicialComplex& cx, SearchBudget budget = {});

/// Classical chordal-graph test (maximum cardinality search + simpliciality
/// check of the resulting elimination order), independent of the
/// is_ridge_chordal code path. Input must be pure 1-dimensional.
bool graph_chordality_oracle(const SimplicialComplex& graph);

}  // namespace ridgechord

#endif
