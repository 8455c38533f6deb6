#include "caslab/render.hpp"

#include <algorithm>
#include <sstream>

namespace caslab {

uint32_t parse_parabolic(const std::string& csv, int rank) {
    if (csv.empty()) return 0;
    uint32_t mask = 0;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --parabolic entry '" + tok + "'");
        }
        if (used != tok.size() || v < 1 || v > rank)
            throw std::invalid_argument("--parabolic index " + tok + " outside 1.." +
                                        std::to_string(rank));
        mask |= (1u << (v - 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return mask;
}

namespace {

Json vec_json(const IntVec& v) { return Json(v); }

Json root_list_json(const RootSystem& rs, const std::vector<int>& idxs) {
    Json arr = Json::array();
    for (int a : idxs) arr.push_back(vec_json(rs.roots[a]));
    return arr;
}

Json degree_list_json(const std::vector<Degree>& ds) {
    Json arr = Json::array();
    for (const auto& d : ds) arr.push_back(Json(d));
    return arr;
}

} // namespace

Json roots_json(const RootSystem& rs) {
    Json rows = Json::array();
    for (int idx = 0; idx < rs.n_pos; ++idx) {
        rows.push_back(Json{{"index", idx},
                            {"root", vec_json(rs.roots[idx])},
                            {"height", rs.height[idx]},
                            {"coroot", vec_json(rs.coroot[idx])},
                            {"long", is_long(rs, idx)},
                            {"locally_high", is_locally_high(rs, idx)}});
    }
    return Json{{"type", type_name(rs.spec)},
                {"rank", rs.rank},
                {"positive_roots", rs.n_pos},
                {"highest_root", vec_json(rs.roots[rs.highest])},
                {"cartan", Json(rs.cartan)},
                {"table", rows}};
}

Json weyl_json(const RootSystem& rs, uint32_t parabolic) {
    CosetContext ctx = make_coset_context(rs, parabolic);
    WeylElement wo = longest_element(rs, (1u << rs.rank) - 1);
    Json j{{"type", type_name(rs.spec)},
           {"rank", rs.rank},
           {"order", weyl_order(rs.spec).str()},
           {"longest_length", wo.len},
           {"longest_word", word_str(rs, wo)}};
    j["parabolic"] = Json::array();
    for (int i = 0; i < rs.rank; ++i)
        if (parabolic >> i & 1) j["parabolic"].push_back(i + 1);
    j["w_P_length"] = ctx.w_p.len;
    j["w_P_word"] = word_str(rs, ctx.w_p);
    j["card_RP_plus"] = ctx.rp.count();
    return j;
}

Json greedy_json(const Context& ctx, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    auto seq = greedy_decomposition(ctx, d);
    WeylElement z = z_element(ctx, d);
    WeylElement zt = z_tilde_element(ctx, d);
    Json comps = Json::array();
    for (const auto& c : degree_components(ctx, d)) comps.push_back(Json(c));
    return Json{{"type", type_name(rs.spec)},
                {"parabolic", weyl_json(rs, ctx.parabolic)["parabolic"]},
                {"degree", Json(d)},
                {"greedy", root_list_json(rs, seq)},
                {"count", count_greedy(ctx, d).str()},
                {"z_word", word_str(rs, z)},
                {"z_length", z.len},
                {"z_tilde_word", word_str(rs, zt)},
                {"naive_support", Json(simple_set_str(naive_support(ctx, d)))},
                {"extended_support", Json(simple_set_str(extended_support(ctx, d)))},
                {"components", comps}};
}

Json dx_json(const Context& ctx) {
    Degree dx = compute_d_x(ctx);
    return Json{{"type", type_name(ctx.rs->spec)},
                {"parabolic", weyl_json(*ctx.rs, ctx.parabolic)["parabolic"]},
                {"d_X", Json(dx)},
                {"z_word", word_str(*ctx.rs, z_element(ctx, dx))},
                {"z_length", z_element(ctx, dx).len}};
}

Json minimal_json(const Context& ctx, const Context& ctxB) {
    const RootSystem& rs = *ctx.rs;
    Json rows = Json::array();
    for (const Degree& d : minimal_degrees(ctx)) {
        WeylElement z = z_element(ctx, d);
        Degree e = lifting(ctx, ctxB, d);
        std::vector<int> outside;
        for (int a : cascade_of(ctxB, e))
            if (!ctx.coset.rp.test(a)) outside.push_back(a);
        rows.push_back(Json{{"degree", Json(d)},
                            {"r", greedy_decomposition(ctx, d).size()},
                            {"z_word", word_str(rs, z)},
                            {"z_length", z.len},
                            {"lifting", Json(e)},
                            {"cascade_outside", root_list_json(rs, outside)}});
    }
    return Json{{"type", type_name(rs.spec)},
                {"parabolic", weyl_json(rs, ctx.parabolic)["parabolic"]},
                {"d_X", Json(compute_d_x(ctx))},
                {"count", rows.size()},
                {"minimal_degrees", rows}};
}

Json lift_json(const Context& ctx, const Context& ctxB, const Degree& d) {
    const RootSystem& rs = *ctx.rs;
    Degree e = lifting(ctx, ctxB, d);
    VerifyReport rep = verify_lifting(ctx, ctxB, d);
    return Json{{"type", type_name(rs.spec)},
                {"parabolic", weyl_json(rs, ctx.parabolic)["parabolic"]},
                {"degree", Json(d)},
                {"lifting", Json(e)},
                {"z_e_word", word_str(rs, z_element(ctxB, e))},
                {"clauses_ok", rep.ok},
                {"cascade", root_list_json(rs, cascade_of(ctxB, e))}};
}

Json cascade_json(const Context& ctxB, const Degree& e, const Context& ctxP) {
    const RootSystem& rs = *ctxB.rs;
    auto casc = cascade_of(ctxB, e);
    Json chains = Json::array();
    for (int i = 0; i < rs.rank; ++i) {
        auto chain = chain_cascade(ctxB, casc, i);
        chains.push_back(Json{{"phi", vec_json(rs.roots[i])}, {"chain", root_list_json(rs, chain)}});
    }
    Json members = Json::array();
    for (int a : casc)
        members.push_back(Json{{"root", vec_json(rs.roots[a])},
                               {"long", is_long(rs, a)},
                               {"locally_high", is_locally_high(rs, a)},
                               {"reflection_length", reflection(rs, a).len}});
    LengthAdditivity la = length_additivity(ctxB, e, ctxP);
    Json checks{{"structure", verify_cascade_theorem(ctxB, e).ok},
                {"components", verify_cascade_altdef(ctxB, e).ok},
                {"product_formula", verify_product_formula(ctxB, e).ok},
                {"inversion_partition", verify_inversion_partition(ctxB, e, ctxP).ok},
                {"length_additivity", verify_length_additivity(ctxB, e, ctxP).ok},
                {"c1_length", verify_c1_length(ctxB, e).ok},
                {"positivity", verify_positivity(ctxB, e, ctxP).ok}};
    return Json{{"type", type_name(rs.spec)},
                {"degree", Json(e)},
                {"parabolic", weyl_json(rs, ctxP.parabolic)["parabolic"]},
                {"cascade", members},
                {"chain_cascades", chains},
                {"z_word", word_str(rs, z_element(ctxB, e))},
                {"z_length", z_element(ctxB, e).len},
                {"length_additivity", Json{{"absolute", Json{la.lhs_abs, la.rhs_abs}},
                                           {"relative", Json{la.lhs_rel, la.rhs_rel}}}},
                {"c1_pairing", c1_pairing(ctxB, e)},
                {"checks", checks}};
}

Json certificate_json(const Context& ctx, const Certificate& cert) {
    const RootSystem& rs = *ctx.rs;
    Json clauses = Json::array();
    for (Assumption a : cert.clauses) clauses.push_back(assumption_str(a));
    Json curve = Json::array();
    for (const auto& cd : cert.curve_degrees) curve.push_back(Json(cd));
    Json casc = Json::array();
    for (int a : cert.cascade_outside) casc.push_back(Json(rs.roots[a]));
    return Json{{"type", type_name(rs.spec)},
                {"parabolic", weyl_json(rs, ctx.parabolic)["parabolic"]},
                {"degree", Json(cert.degree)},
                {"degenerate", cert.degenerate},
                {"lifting", Json(cert.lifting)},
                {"cascade_outside", casc},
                {"sigma", cert.sigma},
                {"admissible", cert.admissible},
                {"assumption", assumption_str(cert.assumption)},
                {"assumption_clauses", clauses},
                {"c1_pairing", cert.c1_d},
                {"z_word", word_str(rs, cert.z)},
                {"z_length", cert.z_length},
                {"lhs", cert.lhs},
                {"td_card", cert.td_card},
                {"inequality_ok", cert.inequality_ok},
                {"dim_X", cert.dim_x},
                {"dim_moduli", cert.dim_moduli},
                {"dim_M2", cert.dim_m2},
                {"endpoints", Json{"e", word_str(rs, cert.z)}},
                {"curve_degrees", curve}};
}

namespace {

std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value(const Json& v, const std::string& indent, std::ostringstream& out);

void render_array_of_objects(const Json& arr, const std::string& indent,
                             std::ostringstream& out) {
    // aligned table over the union of keys
    std::vector<std::string> keys;
    for (const auto& row : arr)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                keys.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    cells.push_back(keys);
    for (const auto& row : arr) {
        std::vector<std::string> line;
        for (const auto& k : keys)
            line.push_back(row.contains(k) ? scalar_str(row[k]) : "");
        cells.push_back(line);
    }
    std::vector<size_t> width(keys.size(), 0);
    for (const auto& line : cells)
        for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (size_t r = 0; r < cells.size(); ++r) {
        out << indent;
        for (size_t i = 0; i < keys.size(); ++i) {
            out << cells[r][i] << std::string(width[i] - cells[r][i].size() + 2, ' ');
        }
        out << "\n";
        if (r == 0) {
            out << indent;
            for (size_t i = 0; i < keys.size(); ++i)
                out << std::string(width[i], '-') << "  ";
            out << "\n";
        }
    }
}

void render_value(const Json& v, const std::string& indent, std::ostringstream& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() ||
                (it.value().is_array() && !it.value().empty() && it.value()[0].is_object())) {
                out << indent << it.key() << ":\n";
                render_value(it.value(), indent + "  ", out);
            } else {
                out << indent << it.key() << ": " << scalar_str(it.value()) << "\n";
            }
        }
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        render_array_of_objects(v, indent, out);
    } else {
        out << indent << scalar_str(v) << "\n";
    }
}

} // namespace

std::string render_text(const Json& payload) {
    std::ostringstream out;
    render_value(payload, "", out);
    return out.str();
}

} // namespace caslab
