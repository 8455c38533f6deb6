#include <doctest.h>

#include "caslab/cascade.hpp"

using namespace caslab;

namespace {

IntVec rv(std::initializer_list<int> v) { return IntVec(v); }

int idx_of(const RootSystem& rs, const IntVec& v) {
    int code = rs.find_root(v);
    REQUIRE(code > 0);
    return sroot_index(code);
}

struct Lab {
    std::shared_ptr<const RootSystem> rs;
    Context ctxB;
};

Lab lab(const std::string& type) {
    auto rs = build_root_system(parse_type(type));
    return {rs, make_context(rs, 0)};
}

std::vector<IntVec> cascade_roots(const Lab& l, const Degree& e) {
    std::vector<IntVec> out;
    for (int a : cascade_of(l.ctxB, e)) out.push_back(l.rs->roots[a]);
    return out;
}

} // namespace

TEST_CASE("cascades of small minimal degrees") {
    auto a3 = lab("A3");
    CHECK(cascade_of(a3.ctxB, {1, 2, 1}) ==
          std::vector<int>{1, a3.rs->highest}); // b2 and theta
    CHECK(cascade_of(a3.ctxB, {0, 0, 0}).empty());

    auto d4 = lab("D4");
    auto casc = cascade_of(d4.ctxB, {2, 2, 2, 2});
    CHECK(casc == std::vector<int>{0, 2, 3, d4.rs->highest});

    CHECK_THROWS_AS(cascade_of(lab("A2").ctxB, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cascade_of(make_context(a3.rs, 0b1u), {1, 1}), std::invalid_argument);
}

TEST_CASE("chain cascades") {
    auto a3 = lab("A3");
    auto casc = cascade_of(a3.ctxB, {1, 2, 1});
    CHECK(chain_cascade(a3.ctxB, casc, 1) == std::vector<int>{a3.rs->highest, 1});
    CHECK(chain_cascade(a3.ctxB, casc, 0) == std::vector<int>{a3.rs->highest});
    CHECK(chain_cascade(a3.ctxB, casc, a3.rs->highest) == std::vector<int>{a3.rs->highest});
}

TEST_CASE("cascade structure") {
    auto a3 = lab("A3");
    CHECK(verify_cascade_theorem(a3.ctxB, {1, 2, 1}).ok);
    CHECK(verify_cascade_altdef(a3.ctxB, {1, 2, 1}).ok);
    auto d4 = lab("D4");
    CHECK(verify_cascade_theorem(d4.ctxB, {2, 2, 2, 2}).ok);
    CHECK(verify_cascade_altdef(d4.ctxB, {1, 0, 1, 1}).ok);
    auto a2 = lab("A2");
    CHECK(verify_cascade_theorem(a2.ctxB, {1, 0}).ok); // singleton cascade
}

TEST_CASE("reflection product of the cascade") {
    auto a2 = lab("A2");
    CHECK(cascade_product(a2.ctxB, {1, 1}) == reflection(*a2.rs, a2.rs->highest));
    CHECK(verify_product_formula(a2.ctxB, {1, 1}).ok);

    auto a3 = lab("A3");
    WeylElement prod = cascade_product(a3.ctxB, {1, 2, 1});
    CHECK(prod.len == 6);
    CHECK(prod == longest_element(*a3.rs, 0b111u));
    CHECK(cascade_product(a3.ctxB, {0, 0, 0}).is_identity());
}

TEST_CASE("inversion partitions") {
    auto a3 = lab("A3");
    auto ctxB = a3.ctxB;
    CHECK(verify_inversion_partition(ctxB, {1, 2, 1}, ctxB).ok);
    // sizes 5 + 1 fill R^+
    CHECK(reflection(*a3.rs, a3.rs->highest).len + reflection(*a3.rs, 1).len == 6);

    auto p1 = make_context(a3.rs, 0b1u);
    CHECK(verify_inversion_partition(ctxB, {1, 2, 1}, p1).ok);
    CHECK(verify_inversion_partition(ctxB, {1, 0, 0}, p1).ok); // singleton
}

TEST_CASE("length additivity") {
    auto a3 = lab("A3");
    LengthAdditivity la = length_additivity(a3.ctxB, {1, 2, 1}, a3.ctxB);
    CHECK(la.lhs_abs == 6);
    CHECK(la.rhs_abs == 6);

    auto d4 = lab("D4");
    la = length_additivity(d4.ctxB, {2, 2, 2, 2}, d4.ctxB);
    CHECK(la.lhs_abs == 12);
    CHECK(la.rhs_abs == 9 + 1 + 1 + 1);
    CHECK(verify_length_additivity(d4.ctxB, {2, 2, 2, 2}, make_context(d4.rs, 0b10u)).ok);

    la = length_additivity(a3.ctxB, {0, 0, 0}, a3.ctxB);
    CHECK(la.lhs_abs == 0);
    CHECK(la.rhs_abs == 0);
}

TEST_CASE("length against the c1 pairing") {
    auto a2 = lab("A2");
    CHECK(c1_pairing(a2.ctxB, {1, 1}) == 4);
    CHECK(verify_c1_length(a2.ctxB, {1, 1}).ok); // 3 = 4 - 1
    auto a3 = lab("A3");
    CHECK(c1_pairing(a3.ctxB, {1, 2, 1}) == 8);
    CHECK(verify_c1_length(a3.ctxB, {1, 2, 1}).ok); // 6 = 8 - 2
    CHECK(verify_c1_length(a3.ctxB, {0, 0, 0}).ok);
}

TEST_CASE("classical cascades of the full flag degree") {
    // frozen fixtures from the classical tables
    auto check_fixture = [](const std::string& type, const Degree& dgb,
                            std::vector<IntVec> roots) {
        auto l = lab(type);
        CHECK(compute_d_x(l.ctxB) == dgb);
        auto got = cascade_roots(l, dgb);
        std::sort(got.begin(), got.end());
        std::sort(roots.begin(), roots.end());
        CHECK_MESSAGE(got == roots, type);
        CHECK(cascade_product(l.ctxB, dgb) ==
              longest_element(*l.rs, (1u << l.rs->rank) - 1));
    };
    check_fixture("A1", {1}, {rv({1})});
    check_fixture("A2", {1, 1}, {rv({1, 1})});
    check_fixture("A3", {1, 2, 1}, {rv({1, 1, 1}), rv({0, 1, 0})});
    check_fixture("G2", {2, 2}, {rv({3, 2}), rv({1, 0})});
    check_fixture("D4", {2, 2, 2, 2},
                  {rv({1, 2, 1, 1}), rv({1, 0, 0, 0}), rv({0, 0, 1, 0}), rv({0, 0, 0, 1})});
}
