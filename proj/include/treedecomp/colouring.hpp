#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treedecomp/graph.hpp"
#include "treedecomp/pseudo_copy.hpp"
#include "treedecomp/tree.hpp"

namespace treedecomp {

inline bool compatible(Side v_side, Side t_side) { return v_side == t_side; }

// One failed equality d_j(v) = d_k(v) at a compatible pair (v, t).
struct EquitableViolation {
    int vertex;
    int tree_vertex;
    int colour_j;
    int colour_k;
    int degree_j;
    int degree_k;
};

// Empty list means the colouring is T-equitable.
std::vector<EquitableViolation> verify_equitable(const Graph& g, const LabelledTree& t,
                                                 const Colouring& col);

enum class SearchStatus { sat, unsat, budget_exhausted };

struct FindResult {
    SearchStatus status = SearchStatus::unsat;
    Colouring colouring;          // valid iff status == sat
    std::uint64_t nodes_visited = 0;
};

// Exact backtracking search for a T-equitable colouring. Edges are
// ordered by (min endpoint degree, id), colours tried in label order,
// branches pruned when a partial count exceeds the per-vertex balance
// ceiling deg(v)/|S(t)| of a compatible tree vertex. UNSAT is only
// reported after the space is exhausted.
FindResult find_equitable(const Graph& g, const LabelledTree& t, std::uint64_t node_budget);

// A host built as an edge-disjoint union of T-copies, with the induced
// colouring and the ground-truth decomposition.
struct SynthInstance {
    Graph graph;
    Colouring colouring;
    std::vector<PseudoCopy> planted;
};

// Plants `copies` random embeddings of T with T_A in an a_pool-sized
// class and T_B in a b_pool-sized class, resampling collisions so the
// host stays simple. Throws EmbeddingFailedError when the pools are too
// small for the retry budget.
SynthInstance synth_instance(const LabelledTree& t, int copies, int a_pool, int b_pool,
                             std::uint64_t seed);

}  // namespace treedecomp
