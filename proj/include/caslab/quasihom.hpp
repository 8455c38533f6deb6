#pragma once

#include "caslab/cascade.hpp"

namespace caslab {

enum class Assumption { LongRoots, CompleteFlag, CosmallSplit, None };
std::string assumption_str(Assumption a);

// Sum of (gamma, alpha^vee) over cascade members outside R_P^+ and
// gamma in R_P^+. Requires d minimal.
long long sigma_sum(const Context& ctx, const Context& ctxB, const Degree& d);
bool is_P_admissible(const Context& ctx, const Context& ctxB, const Degree& d);

// Negative roots -alpha-gamma outside R_P^- reachable from the cascade;
// returned as indices of the positive counterparts.
std::vector<int> tangent_directions(const Context& ctx, const Context& ctxB, const Degree& d);

// First satisfied clause in the order long-roots > complete-flag >
// cosmall-split; None otherwise.
Assumption assumption_status(const Context& ctx, const Context& ctxB, const Degree& d);
// All satisfied clauses.
std::vector<Assumption> assumption_clauses(const Context& ctx, const Context& ctxB,
                                           const Degree& d);

// Full combinatorial record for one (X, d).
struct Certificate {
    Degree degree;
    Degree lifting;               // over Delta
    std::vector<int> cascade_outside;
    long long sigma = 0;
    bool admissible = false;
    Assumption assumption = Assumption::None;
    std::vector<Assumption> clauses;
    long long lhs = 0;            // (c1(X), d) - l(z_d^P)
    long long c1_d = 0;
    int z_length = 0;
    int td_card = 0;
    bool inequality_ok = false;
    int dim_x = 0;
    long long dim_moduli = 0;
    long long dim_m2 = 0;
    WeylElement z;                // minimal coset representative
    std::vector<Degree> curve_degrees;
    bool degenerate = false;      // d = 0
};

// Fills every certificate field; throws if the dimension inequality fails
// although an assumption clause holds (that would falsify the theory).
Certificate certificate(const Context& ctx, const Context& ctxB, const Degree& d);

// Positivity of cascade members against inversion sets inside R_P^+, the
// at-most-one-positive-partner bound, and the forced positive partner when
// z_e^B is the maximal representative.
VerifyReport verify_positivity(const Context& ctxB, const Degree& e, const Context& ctxP);

// Type A only, z_e^B maximal representative: at most one negative partner
// per gamma, and the pairing sums lie in {0, 1}.
VerifyReport verify_type_a(const Context& ctxB, const Degree& e, const Context& ctxP);

// Admissibility statements: minimal degrees at P = B, splitting families,
// and all minimal degrees in type A. Non-admissible minimal degrees outside
// those classes are recorded as open cases.
VerifyReport verify_admissibility(const Context& ctx, const Context& ctxB);

// (alpha, gamma) pairs with pairing -1 inject into the tangent directions
// away from the negated cascade.
VerifyReport verify_tangent_injection(const Context& ctx, const Context& ctxB, const Degree& d);

// The exact identities tying (c1(X), d) - l(z_d^P) to cascade data, and the
// pair-count identity under an assumption clause.
VerifyReport verify_dimension_identities(const Context& ctx, const Context& ctxB, const Degree& d);

// Membership of -gamma and z^-1(-gamma) in R^+ cup R_P for gamma in R_P^+,
// and the conjugation identity z^-1 = w_P z w_P. Defined for every degree.
VerifyReport verify_root_membership(const Context& ctx, const Degree& d);

// Pairwise strong orthogonality of the diagonal-curve components and the
// degree sum; endpoint data lives in the certificate.
VerifyReport verify_diagonal_curve(const Context& ctx, const Context& ctxB, const Degree& d);

} // namespace caslab
