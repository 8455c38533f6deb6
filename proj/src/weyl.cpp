#include "caslab/weyl.hpp"

#include "caslab/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace caslab {

namespace {

int recount(const std::vector<int16_t>& perm) {
    int c = 0;
    for (int16_t v : perm)
        if (v < 0) ++c;
    return c;
}

} // namespace

WeylElement identity(const RootSystem& rs) {
    WeylElement w;
    w.perm.resize(rs.n_pos);
    for (int k = 0; k < rs.n_pos; ++k) w.perm[k] = static_cast<int16_t>(k + 1);
    w.len = 0;
    return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    WeylElement w;
    w.perm = rs.simple_act[i];
    w.len = 1;
    return w;
}

WeylElement reflection(const RootSystem& rs, int root_idx) {
    WeylElement w;
    w.perm.resize(rs.n_pos);
    for (int k = 0; k < rs.n_pos; ++k) {
        IntVec v = rs.roots[k];
        int c = rs.pair_coroot(v, root_idx);
        for (int j = 0; j < rs.rank; ++j) v[j] -= c * rs.roots[root_idx][j];
        int code = rs.find_root(v);
        if (code == 0) throw std::logic_error("reflection left the root system");
        w.perm[k] = static_cast<int16_t>(code);
    }
    w.len = recount(w.perm);
    return w;
}

int apply(const WeylElement& w, int code) {
    int img = w.perm[sroot_index(code)];
    return sroot_sign(code) * img;
}

WeylElement mult_simple(const RootSystem& rs, const WeylElement& w, int i) {
    WeylElement r;
    r.perm.resize(w.perm.size());
    const auto& si = rs.simple_act[i];
    for (size_t k = 0; k < w.perm.size(); ++k) {
        int mid = si[k];
        r.perm[k] = static_cast<int16_t>(sroot_sign(mid) * w.perm[sroot_index(mid)]);
    }
    r.len = recount(r.perm);
    return r;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    (void)rs;
    WeylElement r;
    r.perm.resize(u.perm.size());
    for (size_t k = 0; k < u.perm.size(); ++k) {
        int mid = v.perm[k];
        r.perm[k] = static_cast<int16_t>(sroot_sign(mid) * u.perm[sroot_index(mid)]);
    }
    r.len = recount(r.perm);
    return r;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    (void)rs;
    WeylElement r;
    r.perm.resize(w.perm.size());
    for (size_t k = 0; k < w.perm.size(); ++k) {
        int img = w.perm[k];
        r.perm[sroot_index(img)] = static_cast<int16_t>(sroot_sign(img) * (static_cast<int>(k) + 1));
    }
    r.len = w.len;
    return r;
}

Bits inversion_set(const RootSystem& rs, const WeylElement& w) {
    Bits b(rs.n_pos);
    for (int k = 0; k < rs.n_pos; ++k)
        if (w.perm[k] < 0) b.set(k);
    return b;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> extracted;
    WeylElement v = w;
    while (v.len > 0) {
        int i = -1;
        for (int j = 0; j < rs.rank; ++j)
            if (v.perm[j] < 0) { i = j; break; }
        extracted.push_back(i);
        v = mult_simple(rs, v, i);
    }
    std::reverse(extracted.begin(), extracted.end());
    return extracted;
}

std::string word_str(const RootSystem& rs, const WeylElement& w) {
    auto word = reduced_word(rs, w);
    if (word.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += '*';
        s += 's' + std::to_string(word[k] + 1);
    }
    return s;
}

uint32_t element_support(const RootSystem& rs, const WeylElement& w) {
    // The letter set is the same for every reduced word.
    uint32_t m = 0;
    for (int i : reduced_word(rs, w)) m |= (1u << i);
    return m;
}

WeylElement longest_element(const RootSystem& rs, uint32_t subset) {
    WeylElement w = identity(rs);
    while (true) {
        int i = -1;
        for (int j = 0; j < rs.rank; ++j)
            if ((subset >> j & 1) && w.perm[j] > 0) { i = j; break; }
        if (i < 0) break;
        w = mult_simple(rs, w, i);
    }
    return w;
}

CosetContext make_coset_context(const RootSystem& rs, uint32_t parabolic) {
    if (parabolic >> rs.rank) throw std::invalid_argument("parabolic subset out of range");
    CosetContext c;
    c.parabolic = parabolic;
    c.w_p = longest_element(rs, parabolic);
    c.rp = Bits(rs.n_pos);
    for (int idx = 0; idx < rs.n_pos; ++idx)
        if ((support_mask(rs, idx) & ~parabolic) == 0) c.rp.set(idx);
    if (inversion_set(rs, c.w_p) != c.rp) throw std::logic_error("w_P inversion set is not R_P^+");
    return c;
}

WeylElement min_rep(const RootSystem& rs, const CosetContext& ctx, WeylElement w) {
    while (true) {
        int i = -1;
        for (int j = 0; j < rs.rank; ++j)
            if ((ctx.parabolic >> j & 1) && w.perm[j] < 0) { i = j; break; }
        if (i < 0) return w;
        w = mult_simple(rs, w, i);
    }
}

WeylElement max_rep(const RootSystem& rs, const CosetContext& ctx, const WeylElement& w) {
    return multiply(rs, min_rep(rs, ctx, w), ctx.w_p);
}

int coset_length(const RootSystem& rs, const CosetContext& ctx, const WeylElement& w) {
    int c = 0;
    for (int k = 0; k < rs.n_pos; ++k)
        if (w.perm[k] < 0 && !ctx.rp.test(k)) ++c;
    return c;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                BruhatCache* cache) {
    if (u.len > v.len) return false;
    if (u == v) return true;
    if (cache) {
        auto it = cache->find({u.perm, v.perm});
        if (it != cache->end()) return it->second;
    }
    // Lifting property along a right descent of v: with vs < v,
    // u <= v iff min(u, us) <= vs.
    WeylElement uu = u, vv = v;
    bool result;
    while (true) {
        if (uu.len > vv.len) { result = false; break; }
        if (uu == vv) { result = true; break; }
        if (vv.len == 0) { result = false; break; }
        int i = -1;
        for (int j = 0; j < rs.rank; ++j)
            if (vv.perm[j] < 0) { i = j; break; }
        vv = mult_simple(rs, vv, i);
        if (uu.perm[i] < 0) uu = mult_simple(rs, uu, i);
    }
    if (cache) cache->emplace(std::make_pair(u.perm, v.perm), result);
    return result;
}

WeylElement hecke(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    WeylElement r = u;
    for (int i : reduced_word(rs, v))
        if (r.perm[i] > 0) r = mult_simple(rs, r, i);
    return r;
}

uint64_t weyl_cap() {
    if (const char* env = std::getenv("CASCADE_LAB_WCAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 60000;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs) {
    BigUint order = weyl_order(rs.spec);
    if (BigUint(weyl_cap()) < order)
        throw ResourceError("|W(" + type_name(rs.spec) + ")| = " + order.str() +
                                 " exceeds the enumeration cap " + std::to_string(weyl_cap()) +
                                 " (set CASCADE_LAB_WCAP to raise it)");
    std::vector<WeylElement> out;
    std::set<std::vector<int16_t>> seen;
    std::vector<WeylElement> frontier{identity(rs)};
    seen.insert(frontier[0].perm);
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            out.push_back(w);
            for (int i = 0; i < rs.rank; ++i) {
                if (w.perm[i] < 0) continue; // only length-increasing steps
                WeylElement ws = mult_simple(rs, w, i);
                if (seen.insert(ws.perm).second) next.push_back(std::move(ws));
            }
        }
        frontier = std::move(next);
    }
    if (BigUint(out.size()) != order) throw std::logic_error("Weyl enumeration count mismatch");
    return out;
}

} // namespace caslab
