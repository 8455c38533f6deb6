// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria marked with a budget also fail on overtime.

#include <chrono>
#include <functional>
#include <cstdio>
#include <map>
#include <set>

#include "caslab/harness.hpp"

using namespace caslab;

namespace {

struct World {
    std::map<std::string, Context> warmB;
    std::map<std::pair<std::string, uint32_t>, Bundle> bundles;

    Bundle& bundle(const std::string& type, uint32_t mask) {
        auto key = std::make_pair(type, mask);
        auto it = bundles.find(key);
        if (it != bundles.end()) return it->second;
        auto spec = parse_type(type);
        auto wi = warmB.find(type);
        if (wi == warmB.end()) {
            auto rs = build_root_system(spec);
            Context ctxB = make_context(rs, 0);
            compute_d_x(ctxB);
            minimal_degrees(ctxB);
            wi = warmB.emplace(type, std::move(ctxB)).first;
        }
        return bundles.emplace(key, make_bundle(spec, mask, &wi->second)).first->second;
    }
};

World world;

const std::vector<std::string> kRank5Types = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                              "B5", "C2", "C3", "C4", "C5", "D4", "D5", "F4",
                                              "G2"};
const std::vector<std::string> kRank4Types = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D4", "F4", "G2"};

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void absorb(const VerifyReport& rep, const std::string& where) {
        if (!rep.ok) {
            ok = false;
            if (notes.size() < 8) notes.push_back(where + ": " + rep.failures.front());
        }
    }
};

bool run_over_subsets(Criterion& c, const std::vector<std::string>& types,
                      const std::function<void(Criterion&, Bundle&)>& body) {
    for (const auto& type : types) {
        int rank = parse_type(type).rank;
        for (uint32_t mask = 0; mask < (1u << rank); ++mask) body(c, world.bundle(type, mask));
    }
    return c.ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria --------------------------------------------------------------

void criterion1(Criterion& c) {
    const std::vector<std::pair<int, uint64_t>> expect = {{2, 1},  {4, 6},  {4, 3},
                                                          {6, 30}, {6, 15}, {8, 210}};
    for (int p = 3; p <= 8; ++p) {
        Bundle& b = world.bundle("D" + std::to_string(p), 0);
        Degree dgb = compute_d_x(b.ctxB);
        int r = static_cast<int>(greedy_decomposition(b.ctxB, dgb).size());
        BigUint n = count_greedy(b.ctxB, dgb);
        c.require(r == expect[p - 3].first,
                  "D" + std::to_string(p) + ": r = " + std::to_string(r));
        c.require(n == BigUint(expect[p - 3].second), "D" + std::to_string(p) + ": N = " + n.str());
        if (p <= 6)
            c.require(all_greedy_decompositions(b.ctxB, dgb).size() == expect[p - 3].second,
                      "D" + std::to_string(p) + ": enumeration differs from the closed form");
    }
    bool table_ok = false;
    golden_counts(table_ok);
    c.require(table_ok, "closed-form table mismatch");
}

void criterion2(Criterion& c) {
    run_over_subsets(c, kRank5Types, [](Criterion& c, Bundle& b) {
        for (const Degree& e : minimal_degrees(b.ctxB)) {
            if (b.ctxP.parabolic == 0) {
                c.absorb(verify_cascade_theorem(b.ctxB, e), b.type);
                c.absorb(verify_cascade_altdef(b.ctxB, e), b.type);
                c.absorb(verify_product_formula(b.ctxB, e), b.type);
                c.absorb(verify_c1_length(b.ctxB, e), b.type);
            }
            c.absorb(verify_inversion_partition(b.ctxB, e, b.ctxP), b.type);
            c.absorb(verify_length_additivity(b.ctxB, e, b.ctxP), b.type);
        }
    });
}

void criterion3(Criterion& c) {
    auto rv = [](std::initializer_list<int> v) { return IntVec(v); };
    struct Fixture {
        std::string type;
        Degree dgb;
        std::vector<IntVec> cascade;
    };
    // classical cascades of orthogonal roots for the full flag degree
    const std::vector<Fixture> fixtures = {
        {"A1", {1}, {rv({1})}},
        {"A2", {1, 1}, {rv({1, 1})}},
        {"A3", {1, 2, 1}, {rv({1, 1, 1}), rv({0, 1, 0})}},
        {"A4", {1, 2, 2, 1}, {rv({1, 1, 1, 1}), rv({0, 1, 1, 0})}},
        {"A5", {1, 2, 3, 2, 1}, {rv({1, 1, 1, 1, 1}), rv({0, 1, 1, 1, 0}), rv({0, 0, 1, 0, 0})}},
        {"D4",
         {2, 2, 2, 2},
         {rv({1, 2, 1, 1}), rv({1, 0, 0, 0}), rv({0, 0, 1, 0}), rv({0, 0, 0, 1})}},
        {"D5",
         {2, 2, 4, 2, 2},
         {rv({1, 2, 2, 1, 1}), rv({1, 0, 0, 0, 0}), rv({0, 0, 1, 1, 1}), rv({0, 0, 1, 0, 0})}},
        {"G2", {2, 2}, {rv({3, 2}), rv({1, 0})}},
    };
    for (const auto& f : fixtures) {
        Bundle& b = world.bundle(f.type, 0);
        Degree dgb = compute_d_x(b.ctxB);
        c.require(dgb == f.dgb, f.type + ": d_{G/B} = " + degree_str(dgb));
        std::set<IntVec> got;
        for (int a : cascade_of(b.ctxB, dgb)) got.insert(b.rs->roots[a]);
        c.require(got == std::set<IntVec>(f.cascade.begin(), f.cascade.end()),
                  f.type + ": cascade differs from the classical fixture");
        c.require(cascade_product(b.ctxB, dgb) ==
                      longest_element(*b.rs, (1u << b.rs->rank) - 1),
                  f.type + ": cascade product is not the longest element");
    }
}

void criterion4(Criterion& c) {
    run_over_subsets(c, kRank4Types, [](Criterion& c, Bundle& b) {
        for (const auto& name : {"supports", "addition-greedy", "addition-tildez",
                                 "addition-minimal", "maxroots", "nd-count", "reordering"}) {
            CheckOutcome out = run_named_check(name, b);
            c.require(out.status == "pass",
                      b.type + "/" + simple_set_str(b.ctxP.parabolic) + " " + name + ": " +
                          (out.witness.is_null() ? out.status : out.witness.dump()));
        }
    });
}

void criterion5(Criterion& c) {
    run_over_subsets(c, kRank5Types, [](Criterion& c, Bundle& b) {
        for (const Degree& d : minimal_degrees(b.ctxP))
            c.absorb(verify_lifting(b.ctxP, b.ctxB, d),
                     b.type + "/" + simple_set_str(b.ctxP.parabolic));
        c.absorb(verify_uniqueness(b.ctxP), b.type + "/" + simple_set_str(b.ctxP.parabolic));
    });
}

void criterion6(Criterion& c) {
    run_over_subsets(c, kRank5Types, [](Criterion& c, Bundle& b) {
        std::string where = b.type + "/" + simple_set_str(b.ctxP.parabolic);
        for (const Degree& e : minimal_degrees(b.ctxB))
            c.absorb(verify_positivity(b.ctxB, e, b.ctxP), where);
        if (b.rs->spec.series == 'A')
            for (const Degree& d : minimal_degrees(b.ctxP))
                c.absorb(verify_type_a(b.ctxB, lifting(b.ctxP, b.ctxB, d), b.ctxP), where);
        VerifyReport adm = verify_admissibility(b.ctxP, b.ctxB);
        c.absorb(adm, where);
        // splitting families stay admissible
        for (const Degree& d : minimal_degrees(b.ctxP))
            if (assumption_status(b.ctxP, b.ctxB, d) == Assumption::CosmallSplit)
                c.require(is_P_admissible(b.ctxP, b.ctxB, d),
                          where + ": splitting degree " + degree_str(d) + " not admissible");
    });
}

void criterion7(Criterion& c) {
    run_over_subsets(c, kRank5Types, [](Criterion& c, Bundle& b) {
        std::string where = b.type + "/" + simple_set_str(b.ctxP.parabolic);
        for (const Degree& d : minimal_degrees(b.ctxP)) {
            Certificate cert = certificate(b.ctxP, b.ctxB, d);
            if (cert.assumption != Assumption::None)
                c.require(cert.inequality_ok, where + ": inequality fails at d=" + degree_str(d));
            c.absorb(verify_dimension_identities(b.ctxP, b.ctxB, d), where);
            c.absorb(verify_tangent_injection(b.ctxP, b.ctxB, d), where);
        }
        for (const Degree& d : degree_box(compute_d_x(b.ctxP)))
            c.absorb(verify_root_membership(b.ctxP, d), where);
    });
}

void criterion8(Criterion& c) {
    {
        Bundle& b = world.bundle("A2", 0b10u);
        Certificate cert = certificate(b.ctxP, b.ctxB, {1});
        c.require(cert.lhs == 1 && cert.td_card == 1 && cert.dim_moduli == 5,
                  "A2/{2}/1: (" + std::to_string(cert.lhs) + "," + std::to_string(cert.td_card) +
                      "," + std::to_string(cert.dim_moduli) + ")");
    }
    {
        Bundle& b = world.bundle("A3", 0b1u);
        Certificate cert = certificate(b.ctxP, b.ctxB, {2, 1});
        c.require(cert.lhs == 3 && cert.td_card == 3 && cert.dim_moduli == 13,
                  "A3/{1}/(2,1): (" + std::to_string(cert.lhs) + "," +
                      std::to_string(cert.td_card) + "," + std::to_string(cert.dim_moduli) + ")");
    }
    {
        Bundle& b = world.bundle("A2", 0);
        Certificate cert = certificate(b.ctxB, b.ctxB, {1, 1});
        // dim_moduli = dim_X + (c1, d) = 3 + 4; see the notes on the pinned
        // value for this row.
        c.require(cert.lhs == 1 && cert.td_card == 1, "A2/B/(1,1): lhs/td differ");
        c.require(cert.dim_moduli == cert.dim_x + cert.c1_d && cert.dim_moduli == 7,
                  "A2/B/(1,1): dim_moduli = " + std::to_string(cert.dim_moduli));
    }
    {
        Bundle& b = world.bundle("D4", 0b10u);
        Degree dx = compute_d_x(b.ctxP);
        c.require(dx == Degree{2, 2, 2}, "D4/{2}: d_X = " + degree_str(dx));
        c.require(sigma_sum(b.ctxP, b.ctxB, dx) == -2, "D4/{2}: sigma differs");
        c.require(!is_P_admissible(b.ctxP, b.ctxB, dx), "D4/{2}: admissible flag differs");
    }
}

} // namespace

int main() {
    struct Row {
        int id;
        std::string label;
        double budget; // seconds; 0 = none
        std::function<void(Criterion&)> fn;
    };
    const std::vector<Row> rows = {
        {1, "D-series counting table (r_p, N_p), p = 3..8, with brute force up to p = 6", 60,
         criterion1},
        {2, "cascade structure suite, rank <= 5 plus G2/F4, all parabolic subsets", 600,
         criterion2},
        {3, "classical cascade concordance at the full flag degree", 0, criterion3},
        {4, "addition-theorem suite on the full grid, rank <= 4, all parabolic subsets", 600,
         criterion4},
        {5, "lifting suite and uniqueness statements, rank <= 5 plus G2/F4", 0, criterion5},
        {6, "positivity, type A bounds, and admissibility statements", 0, criterion6},
        {7, "certificate inequality and its exact identities", 0, criterion7},
        {8, "pinned concrete certificates", 0, criterion8},
    };

    int failures = 0;
    std::map<int, bool> passed;
    for (const auto& row : rows) {
        Criterion c{row.id, row.label};
        auto t0 = std::chrono::steady_clock::now();
        row.fn(c);
        double el = seconds_since(t0);
        if (row.budget > 0 && el > row.budget) {
            c.ok = false;
            c.notes.push_back("overtime: " + std::to_string(el) + "s > " +
                              std::to_string(row.budget) + "s");
        }
        passed[row.id] = c.ok;
        failures += c.ok ? 0 : 1;
        std::printf("criterion %d [%s] %s (%.1fs)\n", row.id, c.ok ? "PASS" : "FAIL",
                    row.label.c_str(), el);
        for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    }

    // The geometric statement itself is out of computational reach; its
    // combinatorial content is exactly the suites above.
    bool c9 = passed[2] && passed[4] && passed[5] && passed[6] && passed[7];
    failures += c9 ? 0 : 1;
    std::printf("criterion 9 [%s] combinatorial content of the main statement "
                "(covered by criteria 2, 4, 5, 6, 7)\n",
                c9 ? "PASS" : "FAIL");
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
