#include "caslab/minimal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace caslab {

bool is_minimal_degree(const Context& ctx, const Degree& d) {
    auto it = ctx.minimal_cache.find(d);
    if (it != ctx.minimal_cache.end()) return it->second != 0;
    WeylElement z = z_element(ctx, d);
    bool minimal = true;
    for (const Degree& dp : degree_box(d)) {
        if (dp == d) continue;
        if (bruhat_leq(*ctx.rs, z, z_element(ctx, dp), &ctx.bruhat_cache)) {
            minimal = false;
            break;
        }
    }
    ctx.minimal_cache.emplace(d, minimal ? 1 : 0);
    return minimal;
}

const std::vector<Degree>& minimal_degrees(const Context& ctx) {
    if (!ctx.pi_cache) {
        std::vector<Degree> pi;
        for (const Degree& d : degree_box(compute_d_x(ctx)))
            if (is_minimal_degree(ctx, d)) pi.push_back(d);
        ctx.pi_cache = std::move(pi);
    }
    return *ctx.pi_cache;
}

std::vector<MinimalDegreeRecord> enumerate_minimal_degrees(const Context& ctx) {
    std::vector<MinimalDegreeRecord> out;
    for (const Degree& d : minimal_degrees(ctx)) out.push_back({d, z_element(ctx, d)});
    return out;
}

Degree compute_d_x(const Context& ctx) {
    if (ctx.dx_cache) return *ctx.dx_cache;
    const RootSystem& rs = *ctx.rs;
    WeylElement target = min_rep(rs, ctx.coset, longest_element(rs, (1u << rs.rank) - 1));
    int k = ctx.dim();
    auto hits = [&](const Degree& d) { return z_element(ctx, d) == target; };

    Degree d(k, 0);
    if (k > 0) {
        int cap = 4 * rs.rank;
        int c = 1;
        while (!hits(Degree(k, c))) {
            c *= 2;
            if (c > cap)
                throw ResourceError("d_X search cap exceeded for " + type_name(rs.spec) +
                                         " (coordinates up to " + std::to_string(cap) + ")");
        }
        d.assign(k, c);
        // Coordinatewise descent; the hit region is upward closed in each
        // coordinate, so binary search applies. Iterate to a fixpoint.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < k; ++i) {
                int lo = 0, hi = d[i];
                while (lo < hi) {
                    int mid = (lo + hi) / 2;
                    Degree probe = d;
                    probe[i] = mid;
                    if (hits(probe)) hi = mid; else lo = mid + 1;
                }
                if (lo < d[i]) {
                    d[i] = lo;
                    moved = true;
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            if (d[i] == 0) continue;
            Degree probe = d;
            probe[i] -= 1;
            if (hits(probe)) throw std::logic_error("d_X descent did not reach a minimal element");
        }
    }
    if (!hits(d)) throw std::logic_error("d_X search failed");
    ctx.dx_cache = d;
    return d;
}

Degree lifting(const Context& ctx, const Context& ctxB, const Degree& d) {
    auto it = ctx.lift_cache.find(d);
    if (it != ctx.lift_cache.end()) return it->second;
    if (!is_minimal_degree(ctx, d)) throw std::invalid_argument("lifting: degree is not minimal");
    const RootSystem& rs = *ctx.rs;
    WeylElement target = multiply(rs, z_element(ctx, d), ctx.coset.w_p);

    auto box = degree_box(compute_d_x(ctxB));
    std::stable_sort(box.begin(), box.end(),
                     [](const Degree& a, const Degree& b) { return deg_sum(a) < deg_sum(b); });
    std::vector<Degree> found;
    int found_sum = -1;
    for (const Degree& e : box) {
        if (found_sum >= 0 && deg_sum(e) > found_sum) break;
        if (bruhat_leq(rs, target, z_element(ctxB, e), &ctxB.bruhat_cache)) {
            found.push_back(e);
            found_sum = deg_sum(e);
        }
    }
    if (found.empty()) throw std::logic_error("no lifting found below d_{G/B}");
    if (found.size() != 1)
        throw std::logic_error("lifting frontier not unique for d=" + degree_str(d));
    ctx.lift_cache.emplace(d, found.front());
    return found.front();
}

VerifyReport verify_lifting(const Context& ctx, const Context& ctxB, const Degree& d) {
    VerifyReport rep{"lifting"};
    const RootSystem& rs = *ctx.rs;
    Degree e = lifting(ctx, ctxB, d);
    if (!is_minimal_degree(ctxB, e))
        rep.fail("lifting of " + degree_str(d) + " is not minimal over Delta");
    WeylElement zeB = z_element(ctxB, e);
    if (multiply(rs, z_element(ctx, d), ctx.coset.w_p) != zeB)
        rep.fail("z_d^P w_P != z_e^B for d=" + degree_str(d));
    if (!ctx.coset.rp.subset_of(inversion_set(rs, zeB)))
        rep.fail("z_e^B is not the maximal coset representative for d=" + degree_str(d));
    if (restrict_degree(ctx, e) != d)
        rep.fail("restriction of the lifting differs from d=" + degree_str(d));
    return rep;
}

VerifyReport verify_uniqueness(const Context& ctx) {
    VerifyReport rep{"minimal-uniqueness"};
    const RootSystem& rs = *ctx.rs;
    Degree dx = compute_d_x(ctx);
    WeylElement target = z_element(ctx, dx);
    auto box = degree_box(dx);
    const auto& pi = minimal_degrees(ctx);

    // Monotonicity of z over the box (background for the d_X descent).
    for (const Degree& d2 : box)
        for (const Degree& d1 : degree_box(d2))
            if (!bruhat_leq(rs, z_element(ctx, d1), z_element(ctx, d2), &ctx.bruhat_cache)) {
                rep.fail("z not monotone: " + degree_str(d1) + " <= " + degree_str(d2));
                break;
            }

    // Bruhat comparability of z forces comparability of minimal degrees.
    for (const Degree& d1 : pi)
        for (const Degree& d2 : pi)
            if (bruhat_leq(rs, z_element(ctx, d1), z_element(ctx, d2), &ctx.bruhat_cache) &&
                !deg_leq(d1, d2))
                rep.fail("z order violated by minimal degrees " + degree_str(d1) + ", " +
                         degree_str(d2));

    // d -> z_d^P is injective on minimal degrees.
    std::map<std::vector<int16_t>, Degree> seen;
    for (const Degree& d : pi) {
        auto [it, fresh] = seen.emplace(z_element(ctx, d).perm, d);
        if (!fresh)
            rep.fail("z collision between minimal degrees " + degree_str(it->second) + " and " +
                     degree_str(d));
    }

    // Each minimal d is the unique minimal element of its Bruhat up-set.
    for (const Degree& d : pi) {
        WeylElement zd = z_element(ctx, d);
        std::vector<Degree> upset;
        for (const Degree& dp : box)
            if (bruhat_leq(rs, zd, z_element(ctx, dp), &ctx.bruhat_cache)) upset.push_back(dp);
        for (const Degree& dp : upset) {
            bool minimal = true;
            for (const Degree& dq : upset)
                if (dq != dp && deg_leq(dq, dp)) { minimal = false; break; }
            if (minimal && dp != d)
                rep.fail("up-set of " + degree_str(d) + " has a second minimal element " +
                         degree_str(dp));
        }
    }

    // d_X is minimal over its whole box, not just coordinatewise.
    for (const Degree& d : box)
        if (d != dx && z_element(ctx, d) == target)
            rep.fail("degree " + degree_str(d) + " below d_X already reaches the point coset");
    return rep;
}

VerifyReport verify_addition_minimal(const Context& ctx) {
    VerifyReport rep{"addition-minimal"};
    for (const Degree& d : degree_box(compute_d_x(ctx))) {
        bool parts = true;
        for (const Degree& di : degree_components(ctx, d))
            if (!is_minimal_degree(ctx, di)) { parts = false; break; }
        if (parts != is_minimal_degree(ctx, d))
            rep.fail("component minimality biconditional fails at " + degree_str(d));
    }
    return rep;
}

namespace {

std::vector<int> support_indices(const RootSystem& rs, int root_idx) {
    // Simple roots sit at table indices 0..rank-1.
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.roots[root_idx][i] > 0) out.push_back(i);
    return out;
}

} // namespace

VerifyReport verify_splitting_family(const Context& ctx, const Context& ctxB,
                                     const std::vector<int>& roots) {
    const RootSystem& rs = *ctx.rs;
    for (int a : roots)
        if (!is_P_cosmall(ctx, a))
            throw std::invalid_argument("splitting family: root " + root_str(rs, a) +
                                        " is not P-cosmall");
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (!totally_disjoint(rs, support_indices(rs, roots[i]),
                                  support_indices(rs, roots[j])))
                throw std::invalid_argument("splitting family: supports not totally disjoint");

    VerifyReport rep{"splitting"};
    Degree d(ctx.dim(), 0);
    for (int a : roots) d = deg_add(d, degree_of_root(ctx, a));
    if (!is_minimal_degree(ctx, d)) {
        rep.fail("sum of P-cosmall degrees is not minimal: " + degree_str(d));
        return rep;
    }
    Degree e = lifting(ctx, ctxB, d);
    std::set<int> outside;
    for (int a : greedy_decomposition(ctxB, e))
        if (!ctx.coset.rp.test(a)) outside.insert(a);
    if (outside != std::set<int>(roots.begin(), roots.end()))
        rep.fail("cascade outside R_P^+ differs from the splitting family for d=" +
                 degree_str(d));
    return rep;
}

VerifyReport verify_splitting_maxroots(const Context& ctx, const Context& ctxB) {
    VerifyReport rep{"splitting"};
    for (const Degree& d : minimal_degrees(ctx)) {
        Degree e = lifting(ctx, ctxB, d);
        Degree ehat(ctx.rs->rank, 0);
        for (int a : greedy_decomposition(ctxB, e))
            if (!ctx.coset.rp.test(a)) ehat = deg_add(ehat, degree_of_root(ctxB, a));
        auto mx_d = maximal_roots(ctx, d);
        auto mx_e = maximal_roots(ctxB, ehat);
        if (mx_d != mx_e)
            rep.fail("maximal roots of d and of the outside lifting part differ at d=" +
                     degree_str(d));
    }
    return rep;
}

VerifyReport verify_subsequence_closure(const Context& ctx) {
    VerifyReport rep{"minimal-subsequence"};
    for (const Degree& d : minimal_degrees(ctx)) {
        auto entries = greedy_decomposition(ctx, d);
        size_t r = entries.size();
        if (r > 12) continue; // desk-scale guard
        std::set<Degree> tried;
        for (uint32_t mask = 0; mask < (1u << r); ++mask) {
            Degree s(ctx.dim(), 0);
            for (size_t i = 0; i < r; ++i)
                if (mask >> i & 1) s = deg_add(s, degree_of_root(ctx, entries[i]));
            if (!tried.insert(s).second) continue;
            if (!is_minimal_degree(ctx, s))
                rep.fail("greedy sub-multiset of " + degree_str(d) +
                         " gives non-minimal degree " + degree_str(s));
        }
    }
    return rep;
}

} // namespace caslab
