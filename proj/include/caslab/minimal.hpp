#pragma once

#include "caslab/degree.hpp"
#include "caslab/report.hpp"

namespace caslab {

// d is minimal iff no strictly smaller effective degree reaches a
// Bruhat-larger-or-equal z element. Enumerates the full box below d.
bool is_minimal_degree(const Context& ctx, const Degree& d);

struct MinimalDegreeRecord {
    Degree degree;
    WeylElement z;
};

// All minimal degrees, complete within d <= d_X, ascending box order.
std::vector<MinimalDegreeRecord> enumerate_minimal_degrees(const Context& ctx);
const std::vector<Degree>& minimal_degrees(const Context& ctx); // cached degree list

// The unique minimal degree whose coset equals the longest element's coset.
// Found by monotone coordinate descent from a dominating degree (the plain
// breadth-first level search is far too slow past rank 6); minimality is
// asserted coordinate-wise, and the sweep checks re-verify box minimality
// exhaustively at desk ranks. The search is capped at coordinates
// 4 * rank and fails loudly beyond the cap.
Degree compute_d_x(const Context& ctx);

// The unique minimal e over Delta with z_d^P w_P Bruhat-below z_e^B.
// Search space bounded by d_{G/B}; breadth-first by coordinate sum with a
// uniqueness assertion on the found level. Requires d minimal.
Degree lifting(const Context& ctx, const Context& ctxB, const Degree& d);

// Lifting clauses checked for one d: e minimal over Delta, z_d^P w_P = z_e^B,
// z_e^B maximal in its coset, restriction of e equals d.
VerifyReport verify_lifting(const Context& ctx, const Context& ctxB, const Degree& d);

// z-monotonicity on minimal degrees, injectivity of d -> z_d^P, unique
// minimality of each d in its Bruhat up-set, and the d_X bound.
VerifyReport verify_uniqueness(const Context& ctx);

// Componentwise minimality biconditional over the full box below d_X.
VerifyReport verify_addition_minimal(const Context& ctx);

// For P-cosmall roots with pairwise totally disjoint supports: the sum of
// their degrees is minimal and the cascade of its lifting outside R_P^+ is
// exactly the given root set.
VerifyReport verify_splitting_family(const Context& ctx, const Context& ctxB,
                                     const std::vector<int>& roots);

// Maximal roots of d and of the outside part of its lifting coincide, for
// every minimal d.
VerifyReport verify_splitting_maxroots(const Context& ctx, const Context& ctxB);

// Sub-multisets of greedy entries of a minimal degree give minimal degrees.
VerifyReport verify_subsequence_closure(const Context& ctx);

} // namespace caslab
