#include <doctest.h>

#include <cstdlib>
#include <set>

#include "caslab/report.hpp"
#include "caslab/weyl.hpp"

using namespace caslab;

namespace {

IntVec rv(std::initializer_list<int> v) { return IntVec(v); }

int idx_of(const RootSystem& rs, const IntVec& v) {
    int code = rs.find_root(v);
    REQUIRE(code > 0);
    return sroot_index(code);
}

uint32_t full(const RootSystem& rs) { return (1u << rs.rank) - 1; }

// Independent Bruhat oracle: u lies below v iff u is a product of a subword
// of one fixed reduced word of v.
bool bruhat_oracle(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    std::set<std::vector<int16_t>> below{identity(rs).perm};
    for (int i : reduced_word(rs, v)) {
        std::set<std::vector<int16_t>> next = below;
        for (const auto& perm : below) {
            WeylElement w{perm, 0};
            next.insert(mult_simple(rs, w, i).perm);
        }
        below = std::move(next);
    }
    return below.count(u.perm) > 0;
}

// Hecke fold along the word extracted from the opposite side, as a second
// route to the product.
WeylElement hecke_via_other_word(const RootSystem& rs, const WeylElement& u,
                                 const WeylElement& v) {
    std::vector<int> extracted;
    WeylElement w = v;
    while (w.len > 0) {
        int i = -1;
        for (int j = rs.rank - 1; j >= 0; --j)
            if (w.perm[j] < 0) { i = j; break; } // largest descent instead of least
        extracted.push_back(i);
        w = mult_simple(rs, w, i);
    }
    std::reverse(extracted.begin(), extracted.end());
    WeylElement r = u;
    for (int i : extracted)
        if (r.perm[i] > 0) r = mult_simple(rs, r, i);
    return r;
}

} // namespace

TEST_CASE("reflections and linear action") {
    auto a2 = build_root_system(parse_type("A2"));
    WeylElement s1 = simple_reflection(*a2, 0);
    CHECK(apply(s1, 2) == 3); // s1(b2) = b1 + b2
    WeylElement st = reflection(*a2, a2->highest);
    CHECK(st.len == 3);
    CHECK(inversion_set(*a2, st).count() == 3);
    CHECK(apply(st, 1) == -2); // s_theta(b1) = -b2

    for (int i = 0; i < a2->rank; ++i) {
        WeylElement s = simple_reflection(*a2, i);
        CHECK(inversion_set(*a2, s).count() == 1);
        CHECK(inversion_set(*a2, s).test(i));
    }

    auto a3 = build_root_system(parse_type("A3"));
    CHECK(reflection(*a3, idx_of(*a3, rv({1, 1, 0}))).len == 3);
}

TEST_CASE("group law") {
    auto a2 = build_root_system(parse_type("A2"));
    WeylElement s1 = simple_reflection(*a2, 0), s2 = simple_reflection(*a2, 1);
    WeylElement lhs = multiply(*a2, multiply(*a2, s1, s2), s1);
    WeylElement rhs = multiply(*a2, multiply(*a2, s2, s1), s2);
    CHECK(lhs == rhs);
    CHECK(lhs == reflection(*a2, a2->highest));

    WeylElement wo = longest_element(*a2, full(*a2));
    CHECK(multiply(*a2, wo, wo).is_identity());
    for (const auto& w : enumerate_weyl(*a2)) {
        CHECK(multiply(*a2, w, inverse(*a2, w)).is_identity());
        for (int a = 0; a < a2->n_pos; ++a)
            CHECK(apply(inverse(*a2, w), apply(w, a + 1)) == a + 1);
    }
}

TEST_CASE("longest elements") {
    auto a2 = build_root_system(parse_type("A2"));
    CHECK(longest_element(*a2, full(*a2)).len == 3);
    CHECK(longest_element(*a2, 0b10u) == simple_reflection(*a2, 1));
    CHECK(longest_element(*a2, 0).is_identity());
    auto d4 = build_root_system(parse_type("D4"));
    CHECK(longest_element(*d4, full(*d4)).len == 12);
}

TEST_CASE("coset representatives") {
    auto a2 = build_root_system(parse_type("A2"));
    CosetContext p2 = make_coset_context(*a2, 0b10u); // Delta_P = {2}
    WeylElement st = reflection(*a2, a2->highest);
    WeylElement mn = min_rep(*a2, p2, st);
    CHECK(mn.len == 2);
    CHECK(word_str(*a2, mn) == "s2*s1");
    CHECK(inversion_set(*a2, mn).test(0));
    CHECK(inversion_set(*a2, mn).test(2));
    CHECK(max_rep(*a2, p2, st) == st);

    CosetContext pb = make_coset_context(*a2, 0);
    for (const auto& w : enumerate_weyl(*a2)) {
        CHECK(min_rep(*a2, pb, w) == w);
        CHECK(max_rep(*a2, pb, w) == w);
    }
    CHECK(min_rep(*a2, p2, identity(*a2)).is_identity());
    CHECK(max_rep(*a2, p2, identity(*a2)) == p2.w_p);
    CHECK(mn.len + static_cast<int>(p2.rp.count()) == max_rep(*a2, p2, mn).len);
}

TEST_CASE("coset length counts inversions outside R_P^+") {
    for (const auto& name : {"A2", "A3", "B2", "B3", "G2"}) {
        auto rs = build_root_system(parse_type(name));
        auto group = enumerate_weyl(*rs);
        for (uint32_t mask = 0; mask < (1u << rs->rank); ++mask) {
            CosetContext cc = make_coset_context(*rs, mask);
            for (const auto& w : group) {
                Bits outside = andnot(inversion_set(*rs, w), cc.rp);
                CHECK(coset_length(*rs, cc, w) == outside.count());
                CHECK(coset_length(*rs, cc, w) == min_rep(*rs, cc, w).len);
            }
        }
    }
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
    for (const auto& name : {"A2", "B2", "G2", "A3", "B3"}) {
        auto rs = build_root_system(parse_type(name));
        auto group = enumerate_weyl(*rs);
        BruhatCache cache;
        for (const auto& u : group)
            for (const auto& v : group)
                CHECK(bruhat_leq(*rs, u, v, &cache) == bruhat_oracle(*rs, u, v));
        // antisymmetry
        for (const auto& u : group)
            for (const auto& v : group)
                if (bruhat_leq(*rs, u, v, &cache) && bruhat_leq(*rs, v, u, &cache)) CHECK(u == v);
        for (const auto& w : group) CHECK(bruhat_leq(*rs, identity(*rs), w));
    }
    auto a2 = build_root_system(parse_type("A2"));
    WeylElement s1 = simple_reflection(*a2, 0), s2 = simple_reflection(*a2, 1);
    CHECK(bruhat_leq(*a2, s1, multiply(*a2, s1, s2)));
    CHECK_FALSE(bruhat_leq(*a2, s1, s2));
}

TEST_CASE("Hecke product") {
    auto a2 = build_root_system(parse_type("A2"));
    WeylElement s1 = simple_reflection(*a2, 0), s2 = simple_reflection(*a2, 1);
    CHECK(hecke(*a2, s1, s1) == s1);
    WeylElement st = reflection(*a2, a2->highest);
    CHECK(hecke(*a2, st, s2) == st); // s_theta(b2) < 0, absorb

    auto a3 = build_root_system(parse_type("A3"));
    WeylElement t1 = simple_reflection(*a3, 0), t3 = simple_reflection(*a3, 2);
    CHECK(hecke(*a3, t1, t3) == multiply(*a3, t1, t3));

    for (const auto& name : {"A2", "B2", "G2", "A3"}) {
        auto rs = build_root_system(parse_type(name));
        auto group = enumerate_weyl(*rs);
        for (const auto& u : group)
            for (const auto& v : group) {
                WeylElement uv = hecke(*rs, u, v);
                CHECK(uv == hecke_via_other_word(*rs, u, v));
                CHECK(bruhat_leq(*rs, u, uv));
                CHECK(bruhat_leq(*rs, v, uv));
            }
        // associativity on a deterministic slice of triples
        for (size_t i = 0; i < group.size(); i += 3)
            for (size_t j = 0; j < group.size(); j += 3)
                for (size_t k = 0; k < group.size(); k += 3)
                    CHECK(hecke(*rs, hecke(*rs, group[i], group[j]), group[k]) ==
                          hecke(*rs, group[i], hecke(*rs, group[j], group[k])));
    }
}

TEST_CASE("disjoint supports multiply without absorption") {
    for (const auto& name : {"A2", "A3", "B3"}) {
        auto rs = build_root_system(parse_type(name));
        auto group = enumerate_weyl(*rs);
        for (const auto& u : group)
            for (const auto& v : group)
                if ((element_support(*rs, u) & element_support(*rs, v)) == 0)
                    CHECK(hecke(*rs, u, v) == multiply(*rs, u, v));
    }
}

TEST_CASE("element support and words") {
    auto a2 = build_root_system(parse_type("A2"));
    CHECK(element_support(*a2, identity(*a2)) == 0);
    CHECK(element_support(*a2, reflection(*a2, a2->highest)) == 0b11u);
    CHECK(element_support(*a2, simple_reflection(*a2, 1)) == 0b10u);
    CHECK(word_str(*a2, identity(*a2)) == "e");
    for (const auto& w : enumerate_weyl(*a2))
        CHECK(static_cast<int>(reduced_word(*a2, w).size()) == w.len);
}

TEST_CASE("enumeration cap") {
    auto e7 = build_root_system(parse_type("E7")); // |W| = 2903040 > default cap
    CHECK_THROWS_AS(enumerate_weyl(*e7), ResourceError);
    CHECK(weyl_cap() == 60000);

    setenv("CASCADE_LAB_WCAP", "10", 1);
    CHECK(weyl_cap() == 10);
    auto a3 = build_root_system(parse_type("A3"));
    CHECK_THROWS_AS(enumerate_weyl(*a3), ResourceError);
    unsetenv("CASCADE_LAB_WCAP");
    CHECK(enumerate_weyl(*a3).size() == 24);
}
