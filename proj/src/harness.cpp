#include "caslab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace caslab {

namespace {

Json parabolic_json(uint32_t mask) {
    Json arr = Json::array();
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) arr.push_back(i + 1);
    return arr;
}

std::string parabolic_flag(uint32_t mask) {
    if (!mask) return "";
    std::string s = " --parabolic ";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    return s;
}

std::string repro_cmd(const Bundle& b, const std::string& check) {
    return "cascade-lab verify --type " + b.type + parabolic_flag(b.ctxP.parabolic) +
           " --checks " + check;
}

CheckOutcome from_report(const Bundle& b, const std::string& check, const VerifyReport& rep) {
    CheckOutcome out;
    if (!rep.ok) {
        out.status = "fail";
        out.witness = Json{{"detail", rep.failures.front()},
                           {"fail_count", rep.failures.size()},
                           {"repro", repro_cmd(b, check)}};
    } else if (!rep.open_cases.empty()) {
        out.status = "open-case";
        out.witness = Json{{"detail", rep.open_cases.front()},
                           {"open_count", rep.open_cases.size()},
                           {"repro", repro_cmd(b, check)}};
    } else {
        out.status = "pass";
        out.witness = nullptr;
    }
    return out;
}

bool is_greedy_sequence(const Context& ctx, Degree d, const std::vector<int>& seq) {
    for (int a : seq) {
        auto mx = maximal_roots(ctx, d);
        if (std::find(mx.begin(), mx.end(), a) == mx.end()) return false;
        d = deg_sub(d, degree_of_root(ctx, a));
    }
    return deg_is_zero(d);
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---- individual checks ----------------------------------------------------

VerifyReport check_reordering(const Bundle& b) {
    VerifyReport rep{"reordering"};
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        auto all = all_greedy_decompositions(b.ctxP, d);
        auto ref = sorted_copy(all.front());
        for (const auto& seq : all)
            if (sorted_copy(seq) != ref) {
                rep.fail("greedy decompositions of " + degree_str(d) +
                         " are not permutations of one multiset");
                break;
            }
    }
    return rep;
}

VerifyReport check_nd_count(const Bundle& b) {
    VerifyReport rep{"nd-count"};
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        BigUint formula = count_greedy(b.ctxP, d);
        BigUint brute(static_cast<uint64_t>(all_greedy_decompositions(b.ctxP, d).size()));
        if (formula != brute)
            rep.fail("count formula " + formula.str() + " != enumeration " + brute.str() +
                     " at d=" + degree_str(d));
    }
    return rep;
}

VerifyReport check_supports(const Bundle& b) {
    VerifyReport rep{"supports"};
    auto box = degree_box(compute_d_x(b.ctxP));
    for (const Degree& d2 : box) {
        uint32_t s2 = extended_support(b.ctxP, d2);
        for (const Degree& d1 : degree_box(d2))
            if ((extended_support(b.ctxP, d1) & ~s2) != 0) {
                rep.fail("extended support not monotone at " + degree_str(d1) + " <= " +
                         degree_str(d2));
                break;
            }
    }
    for (const Degree& d1 : box)
        for (const Degree& d2 : box) {
            uint32_t lhs = extended_support(b.ctxP, deg_add(d1, d2));
            uint32_t rhs = extended_support(b.ctxP, d1) | extended_support(b.ctxP, d2);
            if (lhs != rhs) {
                rep.fail("extended support addition fails at " + degree_str(d1) + " + " +
                         degree_str(d2));
                break;
            }
        }
    return rep;
}

VerifyReport check_maxroots(const Bundle& b) {
    VerifyReport rep{"maxroots"};
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        auto comps = degree_components(b.ctxP, d);
        auto mx = maximal_roots(b.ctxP, d);
        std::set<int> expect;
        for (const Degree& di : comps)
            if (!deg_is_zero(di)) expect.insert(alpha_of_connected(b.ctxP, di));
        if (std::set<int>(mx.begin(), mx.end()) != expect || mx.size() != expect.size())
            rep.fail("maximal roots differ from component heads at d=" + degree_str(d));
    }
    return rep;
}

void interleavings(const std::vector<std::vector<int>>& parts, std::vector<size_t> pos,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out, size_t cap) {
    if (out.size() >= cap) return;
    bool done = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (pos[i] < parts[i].size()) {
            done = false;
            cur.push_back(parts[i][pos[i]]);
            ++pos[i];
            interleavings(parts, pos, cur, out, cap);
            --pos[i];
            cur.pop_back();
        }
    }
    if (done) out.push_back(cur);
}

VerifyReport check_addition_greedy(const Bundle& b) {
    VerifyReport rep{"addition-greedy"};
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        auto comps = degree_components(b.ctxP, d);
        if (comps.size() < 2) continue;
        auto comp_masks = connected_components_of_subset(*b.rs, extended_support(b.ctxP, d));

        // every greedy decomposition of d splits componentwise into greedy
        // decompositions of the parts
        for (const auto& seq : all_greedy_decompositions(b.ctxP, d)) {
            std::vector<std::vector<int>> split(comps.size());
            for (int a : seq) {
                uint32_t s = support_mask(*b.rs, a);
                for (size_t i = 0; i < comp_masks.size(); ++i)
                    if ((s & ~comp_masks[i]) == 0) { split[i].push_back(a); break; }
            }
            size_t total = 0;
            for (size_t i = 0; i < comps.size(); ++i) {
                total += split[i].size();
                if (!is_greedy_sequence(b.ctxP, comps[i], split[i]))
                    rep.fail("componentwise split of a greedy decomposition is not greedy at d=" +
                             degree_str(d));
            }
            if (total != seq.size())
                rep.fail("greedy entry escapes all components at d=" + degree_str(d));
        }

        // interleavings of component decompositions are greedy for the sum
        std::vector<std::vector<int>> parts;
        for (const Degree& di : comps) parts.push_back(greedy_decomposition(b.ctxP, di));
        std::vector<std::vector<int>> shuffles;
        std::vector<int> cur;
        interleavings(parts, std::vector<size_t>(parts.size(), 0), cur, shuffles, 2000);
        for (const auto& seq : shuffles)
            if (!is_greedy_sequence(b.ctxP, d, seq)) {
                rep.fail("interleaving of component decompositions is not greedy at d=" +
                         degree_str(d));
                break;
            }
    }
    return rep;
}

VerifyReport check_addition_tildez(const Bundle& b) {
    VerifyReport rep{"addition-tildez"};
    const RootSystem& rs = *b.rs;
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        auto comps = degree_components(b.ctxP, d);
        if (comps.size() < 2) continue;
        WeylElement expect = z_tilde_element(b.ctxP, d);
        std::vector<int> order(comps.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::vector<std::vector<int>> orders;
        if (comps.size() <= 3) {
            do orders.push_back(order); while (std::next_permutation(order.begin(), order.end()));
        } else {
            orders.push_back(order);
            std::reverse(order.begin(), order.end());
            orders.push_back(order);
        }
        for (const auto& ord : orders) {
            WeylElement plain = identity(rs), hk = identity(rs);
            for (int i : ord) {
                WeylElement zi = z_tilde_element(b.ctxP, comps[i]);
                plain = multiply(rs, plain, zi);
                hk = hecke(rs, hk, zi);
            }
            if (plain != expect || hk != expect) {
                rep.fail("componentwise product of z-tilde differs at d=" + degree_str(d));
                break;
            }
        }
    }
    return rep;
}

VerifyReport check_tildez_involution(const Bundle& b) {
    VerifyReport rep{"tildez-involution"};
    const RootSystem& rs = *b.rs;
    for (const Degree& d : degree_box(compute_d_x(b.ctxP))) {
        WeylElement t = z_tilde_element(b.ctxP, d);
        if (!multiply(rs, t, t).is_identity())
            rep.fail("z-tilde is not an involution at d=" + degree_str(d));
    }
    return rep;
}

VerifyReport check_root_membership(const Bundle& b) {
    VerifyReport rep{"root-membership"};
    for (const Degree& d : degree_box(compute_d_x(b.ctxP)))
        rep.merge(verify_root_membership(b.ctxP, d));
    return rep;
}

VerifyReport check_pcosmall(const Bundle& b) {
    VerifyReport rep{"pcosmall"};
    const RootSystem& rs = *b.rs;
    for (int a = 0; a < rs.n_pos; ++a) {
        if (!b.ctxP.outside.test(a) || !is_P_cosmall(b.ctxP, a)) continue;
        if (!verify_pcosmall_orthogonality(b.ctxP, a))
            rep.fail("P-cosmall orthogonality fails at alpha=" + root_str(rs, a));
    }
    for (int a = 0; a < rs.n_pos; ++a)
        if (is_locally_high(rs, a) && !is_P_cosmall(b.ctxB, a))
            rep.fail("locally high root is not B-cosmall: " + root_str(rs, a));
    return rep;
}

VerifyReport check_lifting(const Bundle& b) {
    VerifyReport rep{"lifting"};
    for (const Degree& d : minimal_degrees(b.ctxP))
        rep.merge(verify_lifting(b.ctxP, b.ctxB, d));
    return rep;
}

VerifyReport check_splitting(const Bundle& b) {
    VerifyReport rep{"splitting"};
    rep.merge(verify_splitting_maxroots(b.ctxP, b.ctxB));
    const RootSystem& rs = *b.rs;
    std::vector<int> cosmall;
    for (int a = 0; a < rs.n_pos; ++a)
        if (b.ctxP.outside.test(a) && is_P_cosmall(b.ctxP, a)) cosmall.push_back(a);
    auto supp = [&](int a) {
        std::vector<int> out;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.roots[a][i] > 0) out.push_back(i);
        return out;
    };
    auto disjoint = [&](int a, int c) { return totally_disjoint(rs, supp(a), supp(c)); };
    for (size_t i = 0; i < cosmall.size(); ++i) {
        rep.merge(verify_splitting_family(b.ctxP, b.ctxB, {cosmall[i]}));
        for (size_t j = i + 1; j < cosmall.size(); ++j) {
            if (!disjoint(cosmall[i], cosmall[j])) continue;
            rep.merge(verify_splitting_family(b.ctxP, b.ctxB, {cosmall[i], cosmall[j]}));
            for (size_t k = j + 1; k < cosmall.size(); ++k)
                if (disjoint(cosmall[i], cosmall[k]) && disjoint(cosmall[j], cosmall[k]))
                    rep.merge(verify_splitting_family(b.ctxP, b.ctxB,
                                                      {cosmall[i], cosmall[j], cosmall[k]}));
        }
    }
    return rep;
}

VerifyReport check_cascade_structure(const Bundle& b) {
    VerifyReport rep{"cascade-structure"};
    for (const Degree& e : minimal_degrees(b.ctxB)) {
        rep.merge(verify_cascade_theorem(b.ctxB, e));
        rep.merge(verify_cascade_altdef(b.ctxB, e));
    }
    return rep;
}

VerifyReport check_product_formula(const Bundle& b) {
    VerifyReport rep{"product-formula"};
    for (const Degree& e : minimal_degrees(b.ctxB)) rep.merge(verify_product_formula(b.ctxB, e));
    return rep;
}

VerifyReport check_inversion_partition(const Bundle& b) {
    VerifyReport rep{"inversion-partition"};
    for (const Degree& e : minimal_degrees(b.ctxB))
        rep.merge(verify_inversion_partition(b.ctxB, e, b.ctxP));
    return rep;
}

VerifyReport check_length_additivity(const Bundle& b) {
    VerifyReport rep{"length-additivity"};
    for (const Degree& e : minimal_degrees(b.ctxB))
        rep.merge(verify_length_additivity(b.ctxB, e, b.ctxP));
    return rep;
}

VerifyReport check_c1_length(const Bundle& b) {
    VerifyReport rep{"c1-length"};
    for (const Degree& e : minimal_degrees(b.ctxB)) rep.merge(verify_c1_length(b.ctxB, e));
    return rep;
}

VerifyReport check_positivity(const Bundle& b) {
    VerifyReport rep{"positivity"};
    for (const Degree& e : minimal_degrees(b.ctxB))
        rep.merge(verify_positivity(b.ctxB, e, b.ctxP));
    return rep;
}

VerifyReport check_type_a(const Bundle& b) {
    VerifyReport rep{"type-a"};
    for (const Degree& d : minimal_degrees(b.ctxP))
        rep.merge(verify_type_a(b.ctxB, lifting(b.ctxP, b.ctxB, d), b.ctxP));
    return rep;
}

VerifyReport check_admissibility(const Bundle& b) {
    return verify_admissibility(b.ctxP, b.ctxB);
}

VerifyReport check_tangent_injection(const Bundle& b) {
    VerifyReport rep{"tangent-injection"};
    for (const Degree& d : minimal_degrees(b.ctxP))
        rep.merge(verify_tangent_injection(b.ctxP, b.ctxB, d));
    return rep;
}

VerifyReport check_dimension_identities(const Bundle& b) {
    VerifyReport rep{"dimension-identities"};
    for (const Degree& d : minimal_degrees(b.ctxP))
        rep.merge(verify_dimension_identities(b.ctxP, b.ctxB, d));
    return rep;
}

VerifyReport check_certificate(const Bundle& b) {
    VerifyReport rep{"certificate"};
    if (!c1_pairing_well_defined(b.ctxP)) rep.fail("(c1(X), -) depends on the representative");
    for (const Degree& d : minimal_degrees(b.ctxP)) {
        Certificate c = certificate(b.ctxP, b.ctxB, d);
        if (c.assumption != Assumption::None) {
            if (!c.inequality_ok)
                rep.fail("dimension inequality fails under an assumption at d=" + degree_str(d));
        } else if (!c.inequality_ok) {
            rep.open_case("inequality open without an assumption clause at d=" + degree_str(d) +
                          " (lhs=" + std::to_string(c.lhs) + ", td=" + std::to_string(c.td_card) +
                          ")");
        }
    }
    return rep;
}

VerifyReport check_diagonal_curve(const Bundle& b) {
    VerifyReport rep{"diagonal-curve"};
    for (const Degree& d : minimal_degrees(b.ctxP))
        rep.merge(verify_diagonal_curve(b.ctxP, b.ctxB, d));
    return rep;
}

VerifyReport check_minimal_uniqueness(const Bundle& b) { return verify_uniqueness(b.ctxP); }
VerifyReport check_addition_minimal_(const Bundle& b) { return verify_addition_minimal(b.ctxP); }
VerifyReport check_minimal_subsequence(const Bundle& b) {
    return verify_subsequence_closure(b.ctxP);
}

using CheckFn = std::function<VerifyReport(const Bundle&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"reordering", check_reordering},
        {"nd-count", check_nd_count},
        {"supports", check_supports},
        {"maxroots", check_maxroots},
        {"addition-greedy", check_addition_greedy},
        {"addition-tildez", check_addition_tildez},
        {"tildez-involution", check_tildez_involution},
        {"pcosmall", check_pcosmall},
        {"minimal-uniqueness", check_minimal_uniqueness},
        {"addition-minimal", check_addition_minimal_},
        {"minimal-subsequence", check_minimal_subsequence},
        {"lifting", check_lifting},
        {"splitting", check_splitting},
        {"cascade-structure", check_cascade_structure},
        {"product-formula", check_product_formula},
        {"inversion-partition", check_inversion_partition},
        {"length-additivity", check_length_additivity},
        {"c1-length", check_c1_length},
        {"positivity", check_positivity},
        {"type-a", check_type_a},
        {"admissibility", check_admissibility},
        {"tangent-injection", check_tangent_injection},
        {"dimension-identities", check_dimension_identities},
        {"certificate", check_certificate},
        {"diagonal-curve", check_diagonal_curve},
        {"root-membership", check_root_membership},
    };
    return reg;
}

} // namespace

Bundle make_bundle(const DynkinSpec& spec, uint32_t parabolic, const Context* seedB) {
    Bundle b;
    b.type = type_name(spec);
    if (seedB) {
        b.ctxB = *seedB; // copies the warmed caches
        b.rs = b.ctxB.rs;
    } else {
        b.rs = build_root_system(spec);
        b.ctxB = make_context(b.rs, 0);
    }
    b.ctxP = make_context(b.rs, parabolic);
    return b;
}

const std::vector<std::string>& harness_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

CheckOutcome run_named_check(const std::string& name, const Bundle& b) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        if (name == "type-a" && b.rs->spec.series != 'A')
            return {"skipped", Json{{"detail", "not applicable: type is not A"}}};
        try {
            return from_report(b, name, fn(b));
        } catch (const ResourceError& e) {
            return {"skipped",
                    Json{{"detail", std::string("cap: ") + e.what()},
                         {"repro", repro_cmd(b, name)}}};
        } catch (const std::exception& e) {
            return {"fail",
                    Json{{"detail", std::string("exception: ") + e.what()},
                         {"repro", repro_cmd(b, name)}}};
        }
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.types.empty()) throw std::invalid_argument("empty sweep grid: no types");
    std::vector<std::string> checks = cfg.checks.empty() ? harness_check_names() : cfg.checks;
    for (const auto& c : checks) {
        const auto& names = harness_check_names();
        if (std::find(names.begin(), names.end(), c) == names.end())
            throw std::invalid_argument("unknown check '" + c + "'");
    }

    struct Task {
        DynkinSpec spec;
        uint32_t parabolic;
        bool capped;
    };
    std::vector<Task> tasks;
    std::vector<DynkinSpec> capped_types, live_types;
    uint64_t wcap = weyl_cap();
    for (const auto& spec : cfg.types) {
        bool capped = BigUint(wcap) < weyl_order(spec);
        (capped ? capped_types : live_types).push_back(spec);
        if (cfg.all_subsets) {
            for (uint32_t m = 0; m < (1u << spec.rank); ++m) tasks.push_back({spec, m, capped});
        } else {
            if (cfg.listed_parabolic >> spec.rank)
                throw std::invalid_argument("parabolic index exceeds the rank of " +
                                            type_name(spec));
            tasks.push_back({spec, cfg.listed_parabolic, capped});
        }
    }

    // Warm one parabolic-free context per type; subset tasks copy its caches.
    std::map<std::string, Context> warm;
    for (const auto& spec : live_types) {
        auto rs = build_root_system(spec);
        warm.emplace(type_name(spec), make_context(rs, 0));
    }
    {
        std::vector<const Context*> todo;
        for (auto& [name, ctx] : warm) todo.push_back(&ctx);
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next++; i < todo.size(); i = next++) {
                compute_d_x(*todo[i]);
                minimal_degrees(*todo[i]);
            }
        };
        int jobs = std::max(1, cfg.jobs);
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<Json>> rows(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t t = next++; t < tasks.size(); t = next++) {
            const Task& task = tasks[t];
            std::string tname = type_name(task.spec);
            if (task.capped) {
                for (const auto& check : checks)
                    rows[t].push_back(Json{
                        {"check", check},
                        {"type", tname},
                        {"parabolic", parabolic_json(task.parabolic)},
                        {"status", "skipped"},
                        {"witness",
                         Json{{"detail", "cap: |W| = " + weyl_order(task.spec).str() +
                                             " exceeds " + std::to_string(wcap)}}}});
                continue;
            }
            Bundle b = make_bundle(task.spec, task.parabolic, &warm.at(tname));
            for (const auto& check : checks) {
                CheckOutcome out = run_named_check(check, b);
                rows[t].push_back(Json{{"check", check},
                                       {"type", tname},
                                       {"parabolic", parabolic_json(task.parabolic)},
                                       {"status", out.status},
                                       {"witness", out.witness}});
            }
        }
    };
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<Json> flat;
    for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    std::sort(flat.begin(), flat.end(), [](const Json& a, const Json& b) {
        auto key = [](const Json& j) {
            return std::make_tuple(j["type"].get<std::string>(), j["parabolic"].dump(),
                                   j["check"].get<std::string>());
        };
        return key(a) < key(b);
    });

    Json results = Json::array();
    std::map<std::string, int> by_status;
    std::map<std::string, std::map<std::string, int>> by_check;
    bool cap_skip = false;
    for (auto& r : flat) {
        std::string st = r["status"].get<std::string>();
        ++by_status[st];
        ++by_check[r["check"].get<std::string>()][st];
        if (st == "skipped" && !r["witness"].is_null() &&
            r["witness"].value("detail", std::string()).rfind("cap", 0) == 0)
            cap_skip = true;
        results.push_back(std::move(r));
    }

    Json cfg_json;
    {
        Json types = Json::array();
        for (const auto& s : cfg.types) types.push_back(type_name(s));
        cfg_json = Json{{"types", types},
                        {"parabolic_mode", cfg.all_subsets ? "all-subsets" : "listed"},
                        {"checks", checks},
                        {"weyl_cap", wcap}};
        if (!cfg.all_subsets) cfg_json["parabolic"] = parabolic_json(cfg.listed_parabolic);
    }
    Json summary = Json{{"by_status", by_status}, {"by_check", by_check}};
    SweepResult res;
    res.report = Json{{"config", cfg_json}, {"results", results}, {"summary", summary}};
    res.exit_code = (by_status["fail"] > 0 || cap_skip) ? 1 : 0;
    return res;
}

Json golden_counts(bool& ok) {
    ok = true;
    auto dfact = [](int n) { // n!! for odd n >= -1
        BigUint f = BigUint::one();
        for (int i = n; i >= 3; i -= 2) f.mul_small(static_cast<uint64_t>(i));
        return f;
    };
    Json rows = Json::array();
    std::map<int, BigUint> n_of;
    std::map<int, int> r_of;
    for (int p = 3; p <= 8; ++p) {
        auto rs = build_root_system({'D', p});
        Context ctx = make_context(rs, 0);
        Degree dgb = compute_d_x(ctx);
        int r = static_cast<int>(greedy_decomposition(ctx, dgb).size());
        BigUint n = count_greedy(ctx, dgb);
        int r_expect = (p % 2 == 1) ? p - 1 : p;
        BigUint n_expect = (p % 2 == 1) ? dfact(p - 2) : dfact(p - 1).mul_small(2);
        bool match = (r == r_expect) && (n == n_expect);
        if (p >= 5) match = match && (n == BigUint(static_cast<uint64_t>(r_of[p - 2] + 1)) * n_of[p - 2]);
        ok = ok && match;
        r_of[p] = r;
        n_of[p] = n;
        rows.push_back(Json{{"p", p},
                            {"d_GB", degree_str(dgb)},
                            {"r", r},
                            {"N", n.str()},
                            {"r_expected", r_expect},
                            {"N_expected", n_expect.str()},
                            {"match", match}});
    }
    return Json{{"series", "D"}, {"rows", rows}};
}

} // namespace caslab
