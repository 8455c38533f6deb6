#include "caslab/quasihom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace caslab {

std::string assumption_str(Assumption a) {
    switch (a) {
        case Assumption::LongRoots: return "long-roots";
        case Assumption::CompleteFlag: return "complete-flag";
        case Assumption::CosmallSplit: return "cosmall-split";
        case Assumption::None: return "none";
    }
    return "none";
}

namespace {

std::vector<int> cascade_outside(const Context& ctx, const Context& ctxB, const Degree& d) {
    Degree e = lifting(ctx, ctxB, d);
    std::vector<int> out;
    for (int a : cascade_of(ctxB, e))
        if (!ctx.coset.rp.test(a)) out.push_back(a);
    return out;
}

std::vector<int> rp_roots(const Context& ctx) {
    return ctx.coset.rp.indices();
}

std::vector<int> support_indices(const RootSystem& rs, int root_idx) {
    std::vector<int> out;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.roots[root_idx][i] > 0) out.push_back(i);
    return out;
}

} // namespace

long long sigma_sum(const Context& ctx, const Context& ctxB, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    long long s = 0;
    for (int a : cascade_outside(ctx, ctxB, d))
        for (int g : rp_roots(ctx)) s += rs.pair_coroot(rs.roots[g], a);
    return s;
}

bool is_P_admissible(const Context& ctx, const Context& ctxB, const Degree& d) {
    return sigma_sum(ctx, ctxB, d) >= 0;
}

std::vector<int> tangent_directions(const Context& ctx, const Context& ctxB, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    std::set<int> td;
    auto gammas = rp_roots(ctx);
    gammas.push_back(-1); // stands for gamma = 0
    for (int a : cascade_outside(ctx, ctxB, d)) {
        for (int g : gammas) {
            IntVec v = rs.roots[a];
            if (g >= 0)
                for (int i = 0; i < rs.rank; ++i) v[i] += rs.roots[g][i];
            int code = rs.find_root(v); // alpha + gamma; the direction is its negative
            if (code > 0 && ctx.outside.test(sroot_index(code))) td.insert(sroot_index(code));
        }
    }
    return {td.begin(), td.end()};
}

std::vector<Assumption> assumption_clauses(const Context& ctx, const Context& ctxB,
                                           const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    std::vector<Assumption> out;
    auto outside = cascade_outside(ctx, ctxB, d);

    bool all_long = true;
    for (int a : outside)
        if (!is_long(rs, a)) { all_long = false; break; }
    if (all_long) out.push_back(Assumption::LongRoots);

    if (ctx.parabolic == 0) out.push_back(Assumption::CompleteFlag);

    bool split = true;
    Degree sum(ctx.dim(), 0);
    for (int a : outside) {
        if (!is_P_cosmall(ctx, a)) { split = false; break; }
        sum = deg_add(sum, degree_of_root(ctx, a));
    }
    if (split)
        for (size_t i = 0; i < outside.size() && split; ++i)
            for (size_t j = i + 1; j < outside.size() && split; ++j)
                if (!totally_disjoint(rs, support_indices(rs, outside[i]),
                                      support_indices(rs, outside[j])))
                    split = false;
    if (split && sum == d) out.push_back(Assumption::CosmallSplit);
    return out;
}

Assumption assumption_status(const Context& ctx, const Context& ctxB, const Degree& d) {
    auto clauses = assumption_clauses(ctx, ctxB, d);
    return clauses.empty() ? Assumption::None : clauses.front();
}

Certificate certificate(const Context& ctx, const Context& ctxB, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    Certificate c;
    c.degree = d;
    c.degenerate = deg_is_zero(d);
    c.lifting = lifting(ctx, ctxB, d);
    c.cascade_outside = cascade_outside(ctx, ctxB, d);
    c.sigma = sigma_sum(ctx, ctxB, d);
    c.admissible = c.sigma >= 0;
    c.clauses = assumption_clauses(ctx, ctxB, d);
    c.assumption = c.clauses.empty() ? Assumption::None : c.clauses.front();
    c.z = z_element(ctx, d);
    c.z_length = c.z.len;
    c.c1_d = c1_pairing(ctx, d);
    c.lhs = c.c1_d - c.z_length;
    c.td_card = static_cast<int>(tangent_directions(ctx, ctxB, d).size());
    c.inequality_ok = c.lhs <= c.td_card;
    c.dim_x = ctx.outside.count();
    c.dim_moduli = c.dim_x + c.c1_d;
    c.dim_m2 = c.lhs;
    for (int a : c.cascade_outside) c.curve_degrees.push_back(degree_of_root(ctx, a));
    Degree sum(ctx.dim(), 0);
    for (const Degree& cd : c.curve_degrees) sum = deg_add(sum, cd);
    if (sum != d) throw std::logic_error("curve degrees do not sum to d=" + degree_str(d));
    if (c.assumption != Assumption::None && !c.inequality_ok)
        throw std::logic_error("dimension inequality fails under an assumption clause at d=" +
                               degree_str(d) + " (" + type_name(rs.spec) + ")");
    return c;
}

VerifyReport verify_positivity(const Context& ctxB, const Degree& e, const Context& ctxP) {
    VerifyReport rep{"positivity"};
    const RootSystem& rs = *ctxB.rs;
    auto casc = cascade_of(ctxB, e);
    std::vector<int> inside, outside;
    for (int a : casc) (ctxP.coset.rp.test(a) ? inside : outside).push_back(a);

    // (i) gamma in I(z_ehat^B) pairs non-negatively with every outside member
    Degree ehat(rs.rank, 0);
    for (int a : inside) ehat = deg_add(ehat, degree_of_root(ctxB, a));
    Bits inv_hat = inversion_set(rs, z_element(ctxB, ehat));
    for (int g = 0; g < rs.n_pos; ++g) {
        if (!inv_hat.test(g)) continue;
        for (int a : outside)
            if (rs.inner(rs.roots[a], rs.roots[g]) < 0)
                rep.fail("negative pairing against I(z_ehat^B): e=" + degree_str(e) +
                         ", gamma=" + root_str(rs, g) + ", alpha=" + root_str(rs, a));
    }

    // (ii) each gamma in R_P^+ has at most one positive partner outside
    for (int g : ctxP.coset.rp.indices()) {
        int pos = 0;
        for (int a : outside)
            if (rs.inner(rs.roots[a], rs.roots[g]) > 0) ++pos;
        if (pos > 1)
            rep.fail("gamma=" + root_str(rs, g) + " has " + std::to_string(pos) +
                     " positive partners (e=" + degree_str(e) + ")");
    }

    // (iii) with z_e^B maximal: a negative pairing forces a unique positive one
    if (ctxP.coset.rp.subset_of(inversion_set(rs, z_element(ctxB, e)))) {
        for (int g : ctxP.coset.rp.indices()) {
            bool has_neg = false;
            int pos = 0;
            for (int a : outside) {
                long long ip = rs.inner(rs.roots[a], rs.roots[g]);
                if (ip < 0) has_neg = true;
                if (ip > 0) ++pos;
            }
            if (has_neg && pos != 1)
                rep.fail("no unique positive partner for gamma=" + root_str(rs, g) + " (e=" +
                         degree_str(e) + ")");
        }
    }
    return rep;
}

VerifyReport verify_type_a(const Context& ctxB, const Degree& e, const Context& ctxP) {
    const RootSystem& rs = *ctxB.rs;
    if (rs.spec.series != 'A') throw std::invalid_argument("verify_type_a: type is not A");
    if (!ctxP.coset.rp.subset_of(inversion_set(rs, z_element(ctxB, e))))
        throw std::invalid_argument("verify_type_a: z_e^B is not the maximal representative");
    VerifyReport rep{"type-a"};
    std::vector<int> outside;
    for (int a : cascade_of(ctxB, e))
        if (!ctxP.coset.rp.test(a)) outside.push_back(a);
    for (int g : ctxP.coset.rp.indices()) {
        int neg = 0;
        long long sum = 0;
        for (int a : outside) {
            int p = rs.pair_coroot(rs.roots[g], a);
            if (p < 0) ++neg;
            sum += p;
        }
        if (neg > 1)
            rep.fail("gamma=" + root_str(rs, g) + " has " + std::to_string(neg) +
                     " negative partners in type A (e=" + degree_str(e) + ")");
        if (sum != 0 && sum != 1)
            rep.fail("pairing sum " + std::to_string(sum) + " outside {0,1} for gamma=" +
                     root_str(rs, g) + " (e=" + degree_str(e) + ")");
    }
    return rep;
}

VerifyReport verify_admissibility(const Context& ctx, const Context& ctxB) {
    VerifyReport rep{"admissibility"};
    const RootSystem& rs = *ctx.rs;
    for (const Degree& d : minimal_degrees(ctx)) {
        long long s = sigma_sum(ctx, ctxB, d);
        if (ctx.parabolic == 0 && s != 0) {
            rep.fail("sigma nonzero at P=B for d=" + degree_str(d));
            continue;
        }
        if (s >= 0) continue;
        if (rs.spec.series == 'A') {
            rep.fail("non-admissible minimal degree in type A: " + degree_str(d));
        } else if (assumption_status(ctx, ctxB, d) == Assumption::CosmallSplit) {
            rep.fail("non-admissible splitting-family degree: " + degree_str(d));
        } else {
            rep.open_case("expected-negative sigma=" + std::to_string(s) + " at d=" +
                          degree_str(d));
        }
    }
    return rep;
}

VerifyReport verify_tangent_injection(const Context& ctx, const Context& ctxB, const Degree& d) {
    VerifyReport rep{"tangent-injection"};
    const RootSystem& rs = *ctx.rs;
    auto outside = cascade_outside(ctx, ctxB, d);
    std::set<int> outside_set(outside.begin(), outside.end());
    auto td = tangent_directions(ctx, ctxB, d);
    std::set<int> td_set(td.begin(), td.end());
    std::set<int> images;
    for (int a : outside) {
        for (int g : rp_roots(ctx)) {
            if (rs.pair_coroot(rs.roots[g], a) != -1) continue;
            IntVec v = rs.roots[a];
            for (int i = 0; i < rs.rank; ++i) v[i] += rs.roots[g][i];
            int code = rs.find_root(v);
            if (code <= 0 || !ctx.outside.test(sroot_index(code))) {
                rep.fail("image -alpha-gamma is not a tangent direction: alpha=" +
                         root_str(rs, a) + ", gamma=" + root_str(rs, g));
                continue;
            }
            int idx = sroot_index(code);
            if (!td_set.count(idx))
                rep.fail("image misses the tangent set: alpha=" + root_str(rs, a) + ", gamma=" +
                         root_str(rs, g));
            if (outside_set.count(idx))
                rep.fail("image hits the negated cascade: alpha=" + root_str(rs, a) +
                         ", gamma=" + root_str(rs, g));
            if (!images.insert(idx).second)
                rep.fail("injection collision at direction -" + root_str(rs, idx) + " (d=" +
                         degree_str(d) + ")");
        }
    }
    return rep;
}

VerifyReport verify_dimension_identities(const Context& ctx, const Context& ctxB,
                                         const Degree& d) {
    VerifyReport rep{"dimension-identities"};
    const RootSystem& rs = *ctx.rs;
    Degree e = lifting(ctx, ctxB, d);
    auto casc = cascade_of(ctxB, e);
    std::vector<int> inside, outside;
    for (int a : casc) (ctx.coset.rp.test(a) ? inside : outside).push_back(a);

    long long len_z = z_element(ctx, d).len;
    long long c1_e = c1_pairing(ctxB, e);
    long long c1_d = c1_pairing(ctx, d);
    long long sigma = sigma_sum(ctx, ctxB, d);
    long long card_rp = ctx.coset.rp.count();

    if (len_z != c1_e - static_cast<long long>(casc.size()) - card_rp)
        rep.fail("l(z_d^P) identity fails at d=" + degree_str(d));

    Bits inv_inside(rs.n_pos);
    for (int a : inside) inv_inside |= inversion_set(rs, reflection(rs, a));
    if (c1_e - c1_d != sigma + inv_inside.count() + static_cast<long long>(inside.size()))
        rep.fail("c1 difference identity fails at d=" + degree_str(d));
    if (sigma >= 0 && c1_e - c1_d < 0)
        rep.fail("admissible degree with negative c1 difference at d=" + degree_str(d));

    Bits inv_outside_rp(rs.n_pos);
    for (int a : outside)
        inv_outside_rp |= (inversion_set(rs, reflection(rs, a)) & ctx.coset.rp);
    if (c1_d - len_z !=
        -sigma + inv_outside_rp.count() + static_cast<long long>(outside.size()))
        rep.fail("partition form of the dimension identity fails at d=" + degree_str(d));

    long long pair_sum = 0;
    long long neg_pairs = 0;
    for (int a : outside) {
        Bits inv_a = inversion_set(rs, reflection(rs, a));
        for (int g : ctx.coset.rp.indices()) {
            int p = rs.pair_coroot(rs.roots[g], a);
            if (!inv_a.test(g)) pair_sum += p;
            if (p == -1) ++neg_pairs;
        }
    }
    if (c1_d - len_z != -pair_sum + static_cast<long long>(outside.size()))
        rep.fail("pairing form of the dimension identity fails at d=" + degree_str(d));

    auto clauses = assumption_clauses(ctx, ctxB, d);
    if (!clauses.empty()) {
        if (clauses.front() == Assumption::LongRoots) {
            for (int a : outside) {
                for (int g = 0; g < rs.n_pos; ++g) {
                    if (g == a) continue;
                    int p = rs.pair_coroot(rs.roots[g], a);
                    if (p < -1 || p > 1)
                        rep.fail("long-root pairing outside {-1,0,1}: alpha=" + root_str(rs, a) +
                                 ", gamma=" + root_str(rs, g));
                }
            }
        }
        if (-pair_sum != neg_pairs)
            rep.fail("negative-pair count identity fails at d=" + degree_str(d));
    }
    return rep;
}

VerifyReport verify_root_membership(const Context& ctx, const Degree& d) {
    VerifyReport rep{"root-membership"};
    const RootSystem& rs = *ctx.rs;
    WeylElement z = z_element(ctx, d);
    WeylElement zi = inverse(rs, z);
    if (zi != multiply(rs, multiply(rs, ctx.coset.w_p, z), ctx.coset.w_p))
        rep.fail("z^-1 != w_P z w_P at d=" + degree_str(d));
    // R(P) = R^+ cup R_P: a signed root lies in it iff positive or in R_P.
    auto in_rp_closure = [&](int code) {
        return code > 0 || ctx.coset.rp.test(sroot_index(code));
    };
    for (int g : ctx.coset.rp.indices()) {
        if (!in_rp_closure(-(g + 1)))
            rep.fail("-gamma escapes R^+ cup R_P at gamma=" + root_str(rs, g));
        if (!in_rp_closure(apply(zi, -(g + 1))))
            rep.fail("z^-1(-gamma) escapes R^+ cup R_P at gamma=" + root_str(rs, g) + ", d=" +
                     degree_str(d));
    }
    return rep;
}

VerifyReport verify_diagonal_curve(const Context& ctx, const Context& ctxB, const Degree& d) {
    VerifyReport rep{"diagonal-curve"};
    const RootSystem& rs = *ctx.rs;
    auto outside = cascade_outside(ctx, ctxB, d);
    for (size_t i = 0; i < outside.size(); ++i)
        for (size_t j = i + 1; j < outside.size(); ++j)
            if (!is_strongly_orthogonal(rs, outside[i], outside[j]))
                rep.fail("curve components not strongly orthogonal at d=" + degree_str(d));
    Degree sum(ctx.dim(), 0);
    for (int a : outside) sum = deg_add(sum, degree_of_root(ctx, a));
    if (sum != d) rep.fail("component degrees do not sum to d=" + degree_str(d));
    return rep;
}

} // namespace caslab
