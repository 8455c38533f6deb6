#include "caslab/degree.hpp"

#include "caslab/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace caslab {

bool deg_leq(const Degree& a, const Degree& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Degree deg_add(const Degree& a, const Degree& b) {
    Degree r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Degree deg_sub(const Degree& a, const Degree& b) {
    Degree r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) throw std::invalid_argument("degree subtraction left the effective cone");
    }
    return r;
}

int deg_sum(const Degree& d) {
    int s = 0;
    for (int c : d) s += c;
    return s;
}

bool deg_is_zero(const Degree& d) { return deg_sum(d) == 0; }

std::string degree_str(const Degree& d) {
    if (d.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

Degree parse_degree(const std::string& s, int expected_len) {
    Degree d;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("bad degree '" + s + "'");
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad degree '" + s + "'");
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("bad degree '" + s + "'");
        d.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(d.size()) != expected_len)
        throw std::invalid_argument("degree '" + s + "' has " + std::to_string(d.size()) +
                                    " coordinates, expected " + std::to_string(expected_len));
    return d;
}

Context make_context(std::shared_ptr<const RootSystem> rs, uint32_t parabolic) {
    Context ctx;
    ctx.rs = std::move(rs);
    ctx.parabolic = parabolic;
    ctx.coset = make_coset_context(*ctx.rs, parabolic);
    ctx.outside = Bits(ctx.rs->n_pos);
    for (int idx = 0; idx < ctx.rs->n_pos; ++idx)
        if (!ctx.coset.rp.test(idx)) ctx.outside.set(idx);
    for (int i = 0; i < ctx.rs->rank; ++i)
        if (!(parabolic >> i & 1)) ctx.free_simples.push_back(i);
    return ctx;
}

Degree degree_of_root(const Context& ctx, int root_idx) {
    if (ctx.coset.rp.test(root_idx))
        throw std::invalid_argument("degree_of_root: root lies in R_P^+");
    Degree d(ctx.dim());
    const IntVec& cv = ctx.rs->coroot[root_idx];
    for (int k = 0; k < ctx.dim(); ++k) d[k] = cv[ctx.free_simples[k]];
    return d;
}

std::vector<int> maximal_roots(const Context& ctx, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    std::vector<int> cand;
    for (int idx = 0; idx < rs.n_pos; ++idx)
        if (ctx.outside.test(idx) && deg_leq(degree_of_root(ctx, idx), d)) cand.push_back(idx);
    std::vector<int> out;
    for (int a : cand) {
        bool maximal = true;
        for (int b : cand) {
            if (a == b) continue;
            bool ge = true;
            for (int i = 0; i < rs.rank; ++i)
                if (rs.roots[b][i] < rs.roots[a][i]) { ge = false; break; }
            if (ge) { maximal = false; break; }
        }
        if (maximal) out.push_back(a);
    }
    return out;
}

std::vector<int> greedy_decomposition(const Context& ctx, const Degree& d) {
    auto it = ctx.greedy_cache.find(d);
    if (it != ctx.greedy_cache.end()) return it->second;
    std::vector<int> seq;
    Degree cur = d;
    while (!deg_is_zero(cur)) {
        auto mx = maximal_roots(ctx, cur);
        if (mx.empty()) throw std::logic_error("no maximal root for a nonzero degree");
        int a = mx.front(); // least table index
        Degree da = degree_of_root(ctx, a);
        if (deg_is_zero(da)) throw std::logic_error("greedy step made no progress");
        cur = deg_sub(cur, da);
        seq.push_back(a);
    }
    ctx.greedy_cache.emplace(d, seq);
    return seq;
}

namespace {

void all_greedy_rec(const Context& ctx, const Degree& d, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out, uint64_t guard) {
    if (deg_is_zero(d)) {
        out.push_back(prefix);
        if (out.size() > guard)
            throw ResourceError("greedy enumeration guard exceeded (" +
                                     std::to_string(guard) + " sequences)");
        return;
    }
    for (int a : maximal_roots(ctx, d)) {
        prefix.push_back(a);
        all_greedy_rec(ctx, deg_sub(d, degree_of_root(ctx, a)), prefix, out, guard);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> all_greedy_decompositions(const Context& ctx, const Degree& d,
                                                        uint64_t guard) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    all_greedy_rec(ctx, d, prefix, out, guard);
    return out;
}

uint32_t naive_support(const Context& ctx, const Degree& d) {
    uint32_t m = 0;
    for (int k = 0; k < ctx.dim(); ++k)
        if (d[k] > 0) m |= (1u << ctx.free_simples[k]);
    return m;
}

uint32_t extended_support(const Context& ctx, const Degree& d) {
    uint32_t m = 0;
    for (int a : greedy_decomposition(ctx, d)) m |= support_mask(*ctx.rs, a);
    return m;
}

std::vector<Degree> degree_components(const Context& ctx, const Degree& d) {
    auto comps = connected_components_of_subset(*ctx.rs, extended_support(ctx, d));
    std::vector<Degree> out(comps.size(), Degree(ctx.dim(), 0));
    for (int a : greedy_decomposition(ctx, d)) {
        uint32_t s = support_mask(*ctx.rs, a);
        for (size_t i = 0; i < comps.size(); ++i)
            if ((s & ~comps[i]) == 0) {
                out[i] = deg_add(out[i], degree_of_root(ctx, a));
                break;
            }
    }
    return out;
}

int alpha_of_connected(const Context& ctx, const Degree& d) {
    auto mx = maximal_roots(ctx, d);
    if (mx.size() != 1)
        throw std::logic_error("connected degree with " + std::to_string(mx.size()) +
                               " maximal roots");
    return mx.front();
}

BigUint count_greedy(const Context& ctx, const Degree& d) {
    if (deg_is_zero(d)) return BigUint::one();
    auto it = ctx.count_cache.find(d);
    if (it != ctx.count_cache.end()) return it->second;
    auto comps = degree_components(ctx, d);
    BigUint n;
    if (comps.size() == 1) {
        int a = alpha_of_connected(ctx, d);
        n = count_greedy(ctx, deg_sub(d, degree_of_root(ctx, a)));
    } else {
        std::vector<int> lens;
        n = BigUint::one();
        for (const auto& di : comps) {
            lens.push_back(static_cast<int>(greedy_decomposition(ctx, di).size()));
            n = n * count_greedy(ctx, di);
        }
        n = n * multinomial(lens);
    }
    ctx.count_cache.emplace(d, n);
    return n;
}

WeylElement z_element(const Context& ctx, const Degree& d) {
    auto it = ctx.z_cache.find(d);
    if (it != ctx.z_cache.end()) return it->second;
    const RootSystem& rs = *ctx.rs;
    WeylElement h = identity(rs);
    for (int a : greedy_decomposition(ctx, d)) h = hecke(rs, h, reflection(rs, a));
    h = hecke(rs, h, ctx.coset.w_p);
    WeylElement z = min_rep(rs, ctx.coset, h);
    ctx.z_cache.emplace(d, z);
    return z;
}

WeylElement z_tilde_element(const Context& ctx, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    WeylElement h = identity(rs);
    for (int a : greedy_decomposition(ctx, d)) h = hecke(rs, h, reflection(rs, a));
    return h;
}

bool is_P_cosmall(const Context& ctx, int root_idx) {
    if (ctx.coset.rp.test(root_idx))
        throw std::invalid_argument("is_P_cosmall: root lies in R_P^+");
    auto mx = maximal_roots(ctx, degree_of_root(ctx, root_idx));
    return std::find(mx.begin(), mx.end(), root_idx) != mx.end();
}

bool verify_pcosmall_orthogonality(const Context& ctx, int root_idx) {
    if (!is_P_cosmall(ctx, root_idx))
        throw std::invalid_argument("verify_pcosmall_orthogonality: root is not P-cosmall");
    const RootSystem& rs = *ctx.rs;
    WeylElement s = reflection(rs, root_idx);
    for (int g = 0; g < rs.n_pos; ++g) {
        if (!ctx.coset.rp.test(g)) continue;
        if (s.perm[g] < 0) continue; // gamma in I(s_alpha)
        if (rs.inner(rs.roots[root_idx], rs.roots[g]) != 0) return false;
    }
    return true;
}

Degree restrict_degree(const Context& ctx_to, const Degree& deg_over_delta) {
    if (static_cast<int>(deg_over_delta.size()) != ctx_to.rs->rank)
        throw std::invalid_argument("restrict_degree: expected a degree over all of Delta");
    Degree d(ctx_to.dim());
    for (int k = 0; k < ctx_to.dim(); ++k) d[k] = deg_over_delta[ctx_to.free_simples[k]];
    return d;
}

IntVec embed_degree(const Context& ctx, const Degree& d) {
    IntVec e(ctx.rs->rank, 0);
    for (int k = 0; k < ctx.dim(); ++k) e[ctx.free_simples[k]] = d[k];
    return e;
}

long long c1_pairing(const Context& ctx, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    IntVec rep = embed_degree(ctx, d);
    long long s = 0;
    for (int g = 0; g < rs.n_pos; ++g)
        if (ctx.outside.test(g)) s += rs.pair_coroot_vec(rs.roots[g], rep);
    return s;
}

bool c1_pairing_well_defined(const Context& ctx) {
    // Shift a representative by every parabolic simple coroot; the pairing
    // against c1(X) must not move.
    const RootSystem& rs = *ctx.rs;
    Degree d(ctx.dim(), 1);
    IntVec rep = embed_degree(ctx, d);
    long long base = c1_pairing(ctx, d);
    for (int i = 0; i < rs.rank; ++i) {
        if (!(ctx.parabolic >> i & 1)) continue;
        IntVec shifted = rep;
        shifted[i] += 1;
        long long s = 0;
        for (int g = 0; g < rs.n_pos; ++g)
            if (ctx.outside.test(g)) s += rs.pair_coroot_vec(rs.roots[g], shifted);
        if (s != base) return false;
    }
    return true;
}

std::vector<Degree> degree_box(const Degree& bound) {
    std::vector<Degree> out;
    Degree cur(bound.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return out;
}

} // namespace caslab
