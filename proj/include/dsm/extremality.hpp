#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsm/matrix.hpp"

namespace dsm {

/// Bipartite graph G(M): row nodes x1..xn, column nodes y1..ym, one edge per
/// support cell. Extremality is exactly "every connected component is a tree".
struct BipartiteSupportGraph {
    int rows = 0;
    int cols = 0;
    SupportSet edges;
};

BipartiteSupportGraph support_graph(const UMatrix& M);

/// A support cycle as an alternating cell sequence
/// (r1,c1),(r2,c1),(r2,c2),...,(r1,ck): consecutive cells share a column then
/// a row, wrapping around; even length >= 4, no repeats. Normalized to start
/// at the smallest row index, moving first along that row's smaller column.
struct CycleWitness {
    std::vector<Cell> cells;

    /// 1-based rendering, e.g. "(2,2) (3,2) (3,3) (2,3)".
    std::string str() const;
};

/// Deterministic cycle search: depth-first from the smallest row node,
/// neighbors in ascending index order. Returns none iff the graph is acyclic.
std::optional<CycleWitness> find_cycle(const BipartiteSupportGraph& G);

/// Brualdi's criterion. Requires membership; throws std::invalid_argument
/// otherwise.
bool is_extremal(const UMatrix& M);

struct CycleSplit {
    Rational lambda;  // in (0, 1); M = lambda * plus + (1 - lambda) * minus
    UMatrix plus;
    UMatrix minus;
};

/// Cancels around a support cycle: alternating cells get +theta/-theta, with
/// theta the exact largest step in each direction. Both halves are members
/// with support strictly inside support(M). Throws std::invalid_argument when
/// w is not a support cycle of M or M is not a member.
CycleSplit split_on_cycle(const UMatrix& M, const CycleWitness& w);

/// Convex combination of extremal members reproducing the source exactly.
struct ConvexDecomposition {
    std::vector<std::pair<Rational, UMatrix>> terms;  // coefficients sum to 1
};

/// Recursive binary splitting along support cycles; terms with identical
/// matrices are merged. An extremal input yields the single term (1, M).
/// Requires membership.
ConvexDecomposition decompose(const UMatrix& M);

/// For a non-extremal member, a member whose support is strictly contained in
/// support(M); none when M is extremal. Requires membership.
std::optional<UMatrix> subsupport_witness(const UMatrix& M);

/// DOT rendering of the support graph, row nodes "x1..xn", column nodes
/// "y1..ym", edges labeled with entry values. If the graph has a cycle, its
/// edges are marked.
std::string to_dot(const UMatrix& M);

}  // namespace dsm
