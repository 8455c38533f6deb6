#include <doctest.h>

#include <algorithm>

#include "caslab/quasihom.hpp"

using namespace caslab;

namespace {

struct Lab {
    std::shared_ptr<const RootSystem> rs;
    Context ctxP, ctxB;
};

Lab lab(const std::string& type, uint32_t parabolic) {
    auto rs = build_root_system(parse_type(type));
    return {rs, make_context(rs, parabolic), make_context(rs, 0)};
}

} // namespace

TEST_CASE("sigma and admissibility") {
    auto a3 = lab("A3", 0);
    for (const Degree& e : minimal_degrees(a3.ctxB)) {
        CHECK(sigma_sum(a3.ctxB, a3.ctxB, e) == 0);
        CHECK(is_P_admissible(a3.ctxB, a3.ctxB, e));
    }
    auto a2 = lab("A2", 0b10u);
    CHECK(sigma_sum(a2.ctxP, a2.ctxB, {1}) == 1);
    auto d4 = lab("D4", 0b10u);
    CHECK(sigma_sum(d4.ctxP, d4.ctxB, {2, 2, 2}) == -2);
    CHECK_FALSE(is_P_admissible(d4.ctxP, d4.ctxB, {2, 2, 2}));
}

TEST_CASE("tangent directions") {
    auto a2b = lab("A2", 0);
    auto td = tangent_directions(a2b.ctxP, a2b.ctxB, {1, 1});
    CHECK(td == std::vector<int>{a2b.rs->highest});

    auto a2 = lab("A2", 0b10u);
    CHECK(tangent_directions(a2.ctxP, a2.ctxB, {1}).size() == 1);

    auto a3 = lab("A3", 0b1u);
    auto td3 = tangent_directions(a3.ctxP, a3.ctxB, {2, 1});
    CHECK(td3.size() == 3);
    // -theta, -b2, -(b1+b2)
    std::vector<int> expect = {1, sroot_index(a3.rs->find_root({1, 1, 0})), a3.rs->highest};
    std::sort(expect.begin(), expect.end());
    CHECK(td3 == expect);
}

TEST_CASE("assumption clauses") {
    auto a3 = lab("A3", 0b1u);
    for (const Degree& d : minimal_degrees(a3.ctxP))
        CHECK(assumption_status(a3.ctxP, a3.ctxB, d) == Assumption::LongRoots);

    auto g2 = lab("G2", 0);
    for (const Degree& e : minimal_degrees(g2.ctxB)) {
        Assumption a = assumption_status(g2.ctxB, g2.ctxB, e);
        CHECK(a != Assumption::None);
        if (!deg_is_zero(e) && e == compute_d_x(g2.ctxB))
            CHECK(a == Assumption::CompleteFlag); // short cascade member blocks clause one
    }

    auto a2 = lab("A2", 0b10u);
    auto clauses = assumption_clauses(a2.ctxP, a2.ctxB, {1});
    CHECK(assumption_status(a2.ctxP, a2.ctxB, {1}) == Assumption::LongRoots);
    CHECK(std::find(clauses.begin(), clauses.end(), Assumption::CosmallSplit) != clauses.end());

    auto g2p = lab("G2", 0b10u);
    CHECK(assumption_status(g2p.ctxP, g2p.ctxB, compute_d_x(g2p.ctxP)) == Assumption::None);
}

TEST_CASE("pinned certificates") {
    auto a2 = lab("A2", 0b10u);
    Certificate c = certificate(a2.ctxP, a2.ctxB, {1});
    CHECK(c.lhs == 1);
    CHECK(c.td_card == 1);
    CHECK(c.dim_moduli == 5);
    CHECK(c.dim_x == 2);
    CHECK(c.inequality_ok);
    CHECK(c.sigma == 1);
    CHECK(c.admissible);

    auto a3 = lab("A3", 0b1u);
    c = certificate(a3.ctxP, a3.ctxB, {2, 1});
    CHECK(c.lhs == 3);
    CHECK(c.td_card == 3);
    CHECK(c.dim_moduli == 13);
    CHECK(c.lifting == Degree{1, 2, 1});

    auto a2b = lab("A2", 0);
    c = certificate(a2b.ctxB, a2b.ctxB, {1, 1});
    CHECK(c.lhs == 1);
    CHECK(c.td_card == 1);
    CHECK(c.dim_x == 3);
    CHECK(c.c1_d == 4);
    CHECK(c.z_length == 3);
    CHECK(c.dim_moduli == c.dim_x + c.c1_d);
    CHECK(c.dim_m2 == c.lhs);

    auto d4 = lab("D4", 0b10u);
    c = certificate(d4.ctxP, d4.ctxB, {2, 2, 2});
    CHECK(c.sigma == -2);
    CHECK_FALSE(c.admissible);
    CHECK(c.assumption == Assumption::LongRoots); // simply laced
    CHECK(c.inequality_ok);

    Certificate zero = certificate(a2.ctxP, a2.ctxB, {0});
    CHECK(zero.degenerate);
    CHECK(zero.lhs == 0);
    CHECK(zero.td_card == 0);
    CHECK(zero.cascade_outside.empty());
}

TEST_CASE("positivity against the parabolic inversion sets") {
    auto a3 = lab("A3", 0b1u);
    for (const Degree& e : minimal_degrees(a3.ctxB))
        CHECK(verify_positivity(a3.ctxB, e, a3.ctxP).ok);
    // at P = B everything is vacuous
    for (const Degree& e : minimal_degrees(a3.ctxB))
        CHECK(verify_positivity(a3.ctxB, e, a3.ctxB).ok);

    auto d4 = lab("D4", 0b10u);
    CHECK(verify_positivity(d4.ctxB, {2, 2, 2, 2}, d4.ctxP).ok);
    // gamma = b2 pairs negatively with three cascade members and positively
    // with the highest root
    int neg = 0, pos = 0;
    for (int a : cascade_of(d4.ctxB, {2, 2, 2, 2})) {
        long long ip = d4.rs->inner(d4.rs->roots[a], d4.rs->roots[1]);
        if (ip < 0) ++neg;
        if (ip > 0) ++pos;
    }
    CHECK(neg == 3);
    CHECK(pos == 1);
}

TEST_CASE("type A pairing bounds") {
    auto a3 = lab("A3", 0b1u);
    Degree e = lifting(a3.ctxP, a3.ctxB, {2, 1});
    auto rep = verify_type_a(a3.ctxB, e, a3.ctxP);
    CHECK(rep.ok);

    auto a2 = lab("A2", 0b10u);
    CHECK(verify_type_a(a2.ctxB, lifting(a2.ctxP, a2.ctxB, {1}), a2.ctxP).ok);
    // vacuous at P = B
    CHECK(verify_type_a(a2.ctxB, {1, 1}, a2.ctxB).ok);

    auto b3 = lab("B3", 0b1u);
    CHECK_THROWS_AS(verify_type_a(b3.ctxB, compute_d_x(b3.ctxB), b3.ctxP),
                    std::invalid_argument);
}

TEST_CASE("admissibility statements") {
    for (const auto& name : {"A2", "A3", "A4"}) {
        auto rs = build_root_system(parse_type(name));
        auto ctxB = make_context(rs, 0);
        for (uint32_t mask = 0; mask < (1u << rs->rank); ++mask) {
            auto rep = verify_admissibility(make_context(rs, mask), ctxB);
            CHECK(rep.ok);
            CHECK(rep.open_cases.empty()); // type A: everything admissible
        }
    }
    auto d4 = lab("D4", 0b10u);
    auto rep = verify_admissibility(d4.ctxP, d4.ctxB);
    CHECK(rep.ok);
    CHECK(!rep.open_cases.empty()); // the expected negative witness
}

TEST_CASE("injection into the tangent directions") {
    auto a2 = lab("A2", 0b10u);
    CHECK(verify_tangent_injection(a2.ctxP, a2.ctxB, {1}).ok); // empty domain

    auto a3 = lab("A3", 0b1u);
    CHECK(verify_tangent_injection(a3.ctxP, a3.ctxB, {2, 1}).ok);

    auto d4 = lab("D4", 0b10u);
    CHECK(verify_tangent_injection(d4.ctxP, d4.ctxB, {2, 2, 2}).ok);
    // the domain has three pairs with pairing -1
    int count = 0;
    for (int a : cascade_of(d4.ctxB, {2, 2, 2, 2}))
        if (d4.rs->pair_coroot(d4.rs->roots[1], a) == -1) ++count;
    CHECK(count == 3);
}

TEST_CASE("dimension identities") {
    auto a2 = lab("A2", 0b10u);
    CHECK(verify_dimension_identities(a2.ctxP, a2.ctxB, {1}).ok);
    // l(z) = (c1(G/B), e) - card(cascade) - card(R_P^+): 2 = 4 - 1 - 1
    CHECK(z_element(a2.ctxP, {1}).len == 2);
    CHECK(c1_pairing(a2.ctxB, {1, 1}) == 4);

    auto a3 = lab("A3", 0b1u);
    CHECK(verify_dimension_identities(a3.ctxP, a3.ctxB, {2, 1}).ok);
    for (const Degree& e : minimal_degrees(a3.ctxB))
        CHECK(verify_dimension_identities(a3.ctxB, a3.ctxB, e).ok);

    auto d4 = lab("D4", 0b10u);
    CHECK(verify_dimension_identities(d4.ctxP, d4.ctxB, {2, 2, 2}).ok);
    // non-admissible witness: the c1 difference goes negative
    CHECK(c1_pairing(d4.ctxB, {2, 2, 2, 2}) - c1_pairing(d4.ctxP, {2, 2, 2}) == -2);
}

TEST_CASE("root membership under the inverse of z") {
    auto a2 = lab("A2", 0b10u);
    CHECK(verify_root_membership(a2.ctxP, {1}).ok);
    WeylElement z = z_element(a2.ctxP, {1});
    CHECK(apply(inverse(*a2.rs, z), -2) == a2.rs->highest + 1); // z^-1(-b2) = theta

    for (const Degree& d : degree_box(compute_d_x(a2.ctxP)))
        CHECK(verify_root_membership(a2.ctxP, d).ok);
    auto d4 = lab("D4", 0b10u);
    CHECK(verify_root_membership(d4.ctxP, {2, 2, 2}).ok);
}

TEST_CASE("diagonal curve descriptors") {
    auto a2 = lab("A2", 0b10u);
    CHECK(verify_diagonal_curve(a2.ctxP, a2.ctxB, {1}).ok);
    auto a3 = lab("A3", 0);
    for (const Degree& e : minimal_degrees(a3.ctxB))
        CHECK(verify_diagonal_curve(a3.ctxB, a3.ctxB, e).ok);
    Certificate c = certificate(a3.ctxB, a3.ctxB, {1, 2, 1});
    Degree sum(3, 0);
    for (const auto& cd : c.curve_degrees) sum = deg_add(sum, cd);
    CHECK(sum == Degree{1, 2, 1});
}
