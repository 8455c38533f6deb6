#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "caslab/bigint.hpp"
#include "caslab/weyl.hpp"

namespace caslab {

// An effective class in H_2(G/P): non-negative coordinates over the free
// simple coroots (Delta minus Delta_P, ascending Bourbaki order). For P = B
// the vector runs over all of Delta.
using Degree = std::vector<int>;

bool deg_leq(const Degree& a, const Degree& b);
Degree deg_add(const Degree& a, const Degree& b);
Degree deg_sub(const Degree& a, const Degree& b); // requires b <= a
int deg_sum(const Degree& d);
bool deg_is_zero(const Degree& d);
std::string degree_str(const Degree& d); // "2,2,2"; "0" for rank-0 lattices
Degree parse_degree(const std::string& s, int expected_len);

// One (root system, parabolic subset) pair plus per-task caches. Contexts are
// cheap to build and meant to be used from a single task; the RootSystem they
// share is immutable and safe to share across threads.
struct Context {
    std::shared_ptr<const RootSystem> rs;
    uint32_t parabolic = 0;
    CosetContext coset;
    Bits outside;            // R^+ minus R_P^+
    std::vector<int> free_simples; // 0-based simple indices not in Delta_P

    // caches
    mutable std::map<Degree, std::vector<int>> greedy_cache;
    mutable std::map<Degree, WeylElement> z_cache;
    mutable std::map<Degree, BigUint> count_cache;
    mutable std::map<Degree, signed char> minimal_cache;
    mutable std::map<Degree, Degree> lift_cache;
    mutable std::optional<Degree> dx_cache;
    mutable std::optional<std::vector<Degree>> pi_cache;
    mutable BruhatCache bruhat_cache;

    int dim() const { return static_cast<int>(free_simples.size()); }
};

Context make_context(std::shared_ptr<const RootSystem> rs, uint32_t parabolic);

// d(alpha): the coroot of alpha reduced modulo the parabolic coroots.
// alpha must lie outside R_P^+.
Degree degree_of_root(const Context& ctx, int root_idx);

// Maximal elements (root order) of {alpha in R^+ \ R_P^+ : d(alpha) <= d},
// ascending table order.
std::vector<int> maximal_roots(const Context& ctx, const Degree& d);

// Canonical greedy decomposition: at every step the maximal root with least
// table index. Empty for d = 0.
std::vector<int> greedy_decomposition(const Context& ctx, const Degree& d);

// Every greedy decomposition, by branching over all maximal roots. Aborts
// with a runtime error once `guard` sequences have been produced.
std::vector<std::vector<int>> all_greedy_decompositions(const Context& ctx, const Degree& d,
                                                        uint64_t guard = 1000000);

// Number of greedy decompositions through the multinomial recursion over
// connected components (agrees with brute-force enumeration).
BigUint count_greedy(const Context& ctx, const Degree& d);

// z_d^P: Hecke product over a greedy decomposition and w_P, as the minimal
// coset representative.
WeylElement z_element(const Context& ctx, const Degree& d);
// The same product without the w_P factor; an involution.
WeylElement z_tilde_element(const Context& ctx, const Degree& d);

uint32_t naive_support(const Context& ctx, const Degree& d);    // over Delta
uint32_t extended_support(const Context& ctx, const Degree& d); // over Delta

// Partition of d along the Dynkin components of its extended support,
// ordered by least simple index. Sums to d.
std::vector<Degree> degree_components(const Context& ctx, const Degree& d);

// First entry of every greedy decomposition of a connected degree d != 0.
int alpha_of_connected(const Context& ctx, const Degree& d);

bool is_P_cosmall(const Context& ctx, int root_idx);
// For P-cosmall alpha: (alpha, gamma) = 0 for all gamma in R_P^+ \ I(s_alpha).
bool verify_pcosmall_orthogonality(const Context& ctx, int root_idx);

// Projection H_2(G/B) -> H_2(G/P): drop the Delta_P coordinates.
Degree restrict_degree(const Context& ctx_to, const Degree& deg_over_delta);
// A representative over all of Delta (zeros on Delta_P).
IntVec embed_degree(const Context& ctx, const Degree& d);

// (c1(X), d) evaluated through a representative of d over Delta.
long long c1_pairing(const Context& ctx, const Degree& d);
// Checks that c1_pairing does not depend on the representative.
bool c1_pairing_well_defined(const Context& ctx);

// All effective degrees <= bound, lexicographic odometer order.
std::vector<Degree> degree_box(const Degree& bound);

} // namespace caslab
