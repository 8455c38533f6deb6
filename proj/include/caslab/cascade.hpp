#pragma once

#include "caslab/minimal.hpp"

namespace caslab {

// Generalized cascade of orthogonal roots of a minimal degree e over Delta:
// the set of roots occurring in greedy decompositions of e. Requires e
// minimal (entries are then distinct and reorder-unique); ascending table
// order. ctxB must be the parabolic-free context of the system.
std::vector<int> cascade_of(const Context& ctxB, const Degree& e);

// Chain cascade of phi: the cascade members >= phi, sorted descending;
// throws if they are not totally ordered (never expected).
std::vector<int> chain_cascade(const Context& ctxB, const std::vector<int>& cascade, int phi_idx);

// Cascade structure: chain cascades totally ordered, members B-cosmall and
// pairwise strongly orthogonal, and subsystem total disjointness for members
// without a common chain cascade.
VerifyReport verify_cascade_theorem(const Context& ctxB, const Degree& e);

// Component decomposition and the inductive step of the cascade.
VerifyReport verify_cascade_altdef(const Context& ctxB, const Degree& e);

// Ordinary product of the cascade reflections; equals z_e^B.
WeylElement cascade_product(const Context& ctxB, const Degree& e);
VerifyReport verify_product_formula(const Context& ctxB, const Degree& e);

// I(z_e^B) is the disjoint union of the I(s_alpha); also the variant with
// R_P^+ removed on both sides.
VerifyReport verify_inversion_partition(const Context& ctxB, const Degree& e, const Context& ctxP);

struct LengthAdditivity {
    int lhs_abs = 0, rhs_abs = 0; // l(z_e^B) vs sum of l(s_alpha)
    int lhs_rel = 0, rhs_rel = 0; // coset lengths relative to P
};
LengthAdditivity length_additivity(const Context& ctxB, const Degree& e, const Context& ctxP);
VerifyReport verify_length_additivity(const Context& ctxB, const Degree& e, const Context& ctxP);

// l(z_e^B) = (c1(G/B), e) - card(cascade).
VerifyReport verify_c1_length(const Context& ctxB, const Degree& e);

} // namespace caslab
