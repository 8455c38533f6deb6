#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "caslab/bigint.hpp"
#include "caslab/bits.hpp"

namespace caslab {

using IntVec = std::vector<int>;

struct DynkinSpec {
    char series = 'A'; // one of A B C D E F G
    int rank = 1;
    bool operator==(const DynkinSpec& o) const { return series == o.series && rank == o.rank; }
    bool operator<(const DynkinSpec& o) const {
        return series != o.series ? series < o.series : rank < o.rank;
    }
};

// Parses "A3", "D4", "E6", "G2"; enforces the classical rank bounds
// (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2).
DynkinSpec parse_type(const std::string& s);
std::string type_name(const DynkinSpec& spec);

// |W| from the classical order formulas.
BigUint weyl_order(const DynkinSpec& spec);

// Signed root codes: +(idx+1) for a positive root, -(idx+1) for its negative,
// 0 for "not a root". idx indexes the positive-root table.
inline int sroot_index(int code) { return (code < 0 ? -code : code) - 1; }
inline int sroot_sign(int code) { return code < 0 ? -1 : 1; }

// Immutable table of an irreducible finite root system in Bourbaki numbering.
// Simple roots occupy table indices 0..rank-1 (in Bourbaki order); the rest
// of the positive roots follow sorted by height. All inner products are kept
// as integers scaled so that long roots have squared length 2*scale.
struct RootSystem {
    DynkinSpec spec;
    int rank = 0;
    int n_pos = 0;
    long long scale = 1;

    std::vector<IntVec> cartan;             // cartan[i][j] = (b_j, b_i^vee)
    std::vector<std::vector<long long>> gram; // scaled (b_i, b_j)

    std::vector<IntVec> roots;   // coefficients over simple roots
    std::vector<int> height;
    std::vector<IntVec> coroot;  // coefficients over simple coroots
    std::vector<long long> qnorm; // scaled (a, a)
    long long max_qnorm = 0;
    int highest = -1;            // index of the highest root

    std::map<IntVec, int> index; // positive coefficient vector -> table index
    std::vector<std::vector<int16_t>> simple_act; // simple_act[i][k] = code of s_i(root k)

    // 0 if v is not a root, else the signed code.
    int find_root(const IntVec& v) const;

    long long inner(const IntVec& a, const IntVec& b) const; // scaled (a, b)

    // (x, alpha^vee) for x an integer vector over the simple roots.
    int pair_coroot(const IntVec& x, int alpha_idx) const;
    // (x, b_i^vee) = sum_j x_j cartan[i][j].
    int pair_simple_coroot(const IntVec& x, int i) const;
    // (gamma, e) for e an integer vector over the simple coroots.
    long long pair_coroot_vec(const IntVec& gamma, const IntVec& e) const;

    bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
};

std::shared_ptr<const RootSystem> build_root_system(const DynkinSpec& spec);

// Simple-root subsets are bitmasks over 0-based simple indices.
uint32_t support_mask(const RootSystem& rs, int root_idx);
uint32_t orthogonal_simple_set(const RootSystem& rs, int root_idx);
bool is_strongly_orthogonal(const RootSystem& rs, int a_idx, int b_idx);
// Every root of S strongly orthogonal to every root of S'.
bool totally_disjoint(const RootSystem& rs, const std::vector<int>& s, const std::vector<int>& t);
bool is_locally_high(const RootSystem& rs, int root_idx);
bool is_long(const RootSystem& rs, int root_idx);

// All roots supported inside the simple subset `mask` (the subsystem
// generated by those simple roots).
std::vector<int> roots_supported_in(const RootSystem& rs, uint32_t mask);

// Dynkin-connected components of a simple subset, ordered by least index.
std::vector<uint32_t> connected_components_of_subset(const RootSystem& rs, uint32_t mask);

std::string root_str(const RootSystem& rs, int root_idx);   // "1,2,1,1"
std::string sroot_str(const RootSystem& rs, int code);      // "-1,2,1,1" style sign prefix
std::string simple_set_str(uint32_t mask);                  // "{1,3}" (Bourbaki 1-based)

} // namespace caslab
