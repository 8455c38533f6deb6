#pragma once

#include <map>
#include <string>
#include <vector>

#include "caslab/rootsys.hpp"

namespace caslab {

// A Weyl group element, stored as its signed permutation of the positive-root
// table. perm[k] is the code of w(root k); the first `rank` entries (the
// simple roots) already determine w, the rest cache the full action so that
// inversion sets and lengths are free. length == number of negative entries.
struct WeylElement {
    std::vector<int16_t> perm;
    int len = 0;

    bool operator==(const WeylElement& o) const { return perm == o.perm; }
    bool operator!=(const WeylElement& o) const { return perm != o.perm; }
    bool operator<(const WeylElement& o) const { return perm < o.perm; }
    bool is_identity() const { return len == 0; }
};

WeylElement identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement reflection(const RootSystem& rs, int root_idx);

int apply(const WeylElement& w, int code); // signed root -> signed root
WeylElement mult_simple(const RootSystem& rs, const WeylElement& w, int i); // w * s_i
WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

Bits inversion_set(const RootSystem& rs, const WeylElement& w);
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w); // 0-based letters
std::string word_str(const RootSystem& rs, const WeylElement& w);          // "s2*s1", identity "e"
uint32_t element_support(const RootSystem& rs, const WeylElement& w);

// Longest element of the standard parabolic subgroup W_S, S a simple subset.
WeylElement longest_element(const RootSystem& rs, uint32_t subset);

struct CosetContext {
    uint32_t parabolic = 0;  // Delta_P as a simple-subset mask
    WeylElement w_p;         // longest element of W_P
    Bits rp;                 // R_P^+ inside the positive-root table
};
CosetContext make_coset_context(const RootSystem& rs, uint32_t parabolic);

WeylElement min_rep(const RootSystem& rs, const CosetContext& ctx, WeylElement w);
WeylElement max_rep(const RootSystem& rs, const CosetContext& ctx, const WeylElement& w);
int coset_length(const RootSystem& rs, const CosetContext& ctx, const WeylElement& w);

// Bruhat order via the lifting property; the optional cache persists answers
// across calls (single-task use).
using BruhatCache = std::map<std::pair<std::vector<int16_t>, std::vector<int16_t>>, bool>;
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                BruhatCache* cache = nullptr);

// Hecke (Demazure) product; absorbs length-decreasing letters.
WeylElement hecke(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

// Full group enumeration, guarded by the |W| cap (default 60000, overridable
// through the CASCADE_LAB_WCAP environment variable).
uint64_t weyl_cap();
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs);

} // namespace caslab
