// cascade-lab: root-system combinatorics of minimal degrees, generalized
// cascades of orthogonal roots, liftings, and quasi-homogeneity certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "caslab/render.hpp"

using namespace caslab;

namespace {

struct CommonOpts {
    std::string type;
    std::string parabolic;
    std::string degree;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_parabolic = true,
                bool with_degree = false) {
    cmd->add_option("--type", o.type, "Dynkin type, e.g. A3, D4, E6")->required();
    if (with_parabolic)
        cmd->add_option("--parabolic", o.parabolic,
                        "comma list of Bourbaki indices of Delta_P (default: empty, P = B)");
    if (with_degree) cmd->add_option("--degree", o.degree, "comma list, or a keyword (dX, all)");
    cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "also write the payload to this file");
}

int emit(const Json& payload, const CommonOpts& o) {
    std::string body = o.format == "json" ? payload.dump(2) + "\n" : render_text(payload);
    std::cout << body;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw std::invalid_argument("cannot write --out file '" + o.out + "'");
        f << (o.format == "json" ? payload.dump(2) + "\n" : body);
    }
    return 0;
}

struct Lab {
    std::shared_ptr<const RootSystem> rs;
    Context ctxP, ctxB;
};

Lab make_lab(const CommonOpts& o) {
    Lab lab;
    lab.rs = build_root_system(parse_type(o.type));
    lab.ctxP = make_context(lab.rs, parse_parabolic(o.parabolic, lab.rs->rank));
    lab.ctxB = make_context(lab.rs, 0);
    return lab;
}

Degree resolve_degree(const Lab& lab, const Context& ctx, const std::string& s) {
    if (s == "dX" || s == "dx") return compute_d_x(ctx);
    if (s.empty()) throw std::invalid_argument("--degree is required here");
    return parse_degree(s, ctx.dim());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cascade-lab: curve-neighborhood combinatorics on G/P"};
    app.require_subcommand(1);

    CommonOpts roots_o, weyl_o, greedy_o, count_o, minimal_o, dx_o, lift_o, cascade_o, certify_o,
        verify_o, golden_o;

    auto* cmd_roots = app.add_subcommand("roots", "positive-root table");
    add_common(cmd_roots, roots_o, false);

    auto* cmd_weyl = app.add_subcommand("weyl", "Weyl group and coset data");
    add_common(cmd_weyl, weyl_o);

    auto* cmd_greedy = app.add_subcommand("greedy", "greedy decomposition and z of a degree");
    add_common(cmd_greedy, greedy_o, true, true);

    auto* cmd_count = app.add_subcommand("count-greedy", "number of greedy decompositions");
    add_common(cmd_count, count_o, true, true);

    auto* cmd_minimal = app.add_subcommand("minimal", "table of minimal degrees with liftings");
    add_common(cmd_minimal, minimal_o);

    auto* cmd_dx = app.add_subcommand("dx", "the minimal degree reaching the point coset");
    add_common(cmd_dx, dx_o);

    auto* cmd_lift = app.add_subcommand("lift", "lifting of a minimal degree");
    add_common(cmd_lift, lift_o, true, true);

    auto* cmd_cascade =
        app.add_subcommand("cascade", "generalized cascade of a minimal degree over Delta");
    add_common(cmd_cascade, cascade_o, true, true);

    auto* cmd_certify = app.add_subcommand("certify", "quasi-homogeneity certificates");
    add_common(cmd_certify, certify_o, true, true);

    auto* cmd_verify = app.add_subcommand("verify", "sweep the theorem checks over a grid");
    std::string v_types, v_checks;
    int v_max_rank = 0, v_jobs = 1;
    cmd_verify->add_option("--type", v_types, "comma list of Dynkin types");
    cmd_verify->add_option("--max-rank", v_max_rank,
                           "sweep all irreducible types up to this rank instead of --type");
    cmd_verify->add_option("--parabolic", verify_o.parabolic,
                           "restrict to one parabolic subset (default: all subsets)");
    cmd_verify->add_option("--checks", v_checks, "comma list of check names (default: all)");
    cmd_verify->add_option("--jobs", v_jobs, "worker count")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--format", verify_o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--out", verify_o.out, "write the JSON report to this file");

    auto* cmd_golden = app.add_subcommand("golden", "D-series greedy-count table");
    cmd_golden->add_option("--format", golden_o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_golden->add_option("--out", golden_o.out, "also write the payload to this file");

    try {
        app.parse(argc, argv);

        if (cmd_roots->parsed()) {
            auto rs = build_root_system(parse_type(roots_o.type));
            return emit(roots_json(*rs), roots_o);
        }
        if (cmd_weyl->parsed()) {
            auto rs = build_root_system(parse_type(weyl_o.type));
            return emit(weyl_json(*rs, parse_parabolic(weyl_o.parabolic, rs->rank)), weyl_o);
        }
        if (cmd_greedy->parsed()) {
            Lab lab = make_lab(greedy_o);
            return emit(greedy_json(lab.ctxP, resolve_degree(lab, lab.ctxP, greedy_o.degree)),
                        greedy_o);
        }
        if (cmd_count->parsed()) {
            Lab lab = make_lab(count_o);
            Degree d = count_o.degree.empty() ? compute_d_x(lab.ctxP)
                                              : resolve_degree(lab, lab.ctxP, count_o.degree);
            Json j{{"type", type_name(lab.rs->spec)},
                   {"parabolic", weyl_json(*lab.rs, lab.ctxP.parabolic)["parabolic"]},
                   {"degree", Json(d)},
                   {"count", count_greedy(lab.ctxP, d).str()}};
            return emit(j, count_o);
        }
        if (cmd_minimal->parsed()) {
            Lab lab = make_lab(minimal_o);
            return emit(minimal_json(lab.ctxP, lab.ctxB), minimal_o);
        }
        if (cmd_dx->parsed()) {
            Lab lab = make_lab(dx_o);
            return emit(dx_json(lab.ctxP), dx_o);
        }
        if (cmd_lift->parsed()) {
            Lab lab = make_lab(lift_o);
            return emit(lift_json(lab.ctxP, lab.ctxB, resolve_degree(lab, lab.ctxP, lift_o.degree)),
                        lift_o);
        }
        if (cmd_cascade->parsed()) {
            Lab lab = make_lab(cascade_o);
            Degree e = cascade_o.degree.empty() ? compute_d_x(lab.ctxB)
                                                : resolve_degree(lab, lab.ctxB, cascade_o.degree);
            return emit(cascade_json(lab.ctxB, e, lab.ctxP), cascade_o);
        }
        if (cmd_certify->parsed()) {
            Lab lab = make_lab(certify_o);
            if (certify_o.degree == "all") {
                Json arr = Json::array();
                for (const Degree& d : minimal_degrees(lab.ctxP))
                    arr.push_back(certificate_json(lab.ctxP, certificate(lab.ctxP, lab.ctxB, d)));
                return emit(Json{{"certificates", arr}}, certify_o);
            }
            Degree d = resolve_degree(lab, lab.ctxP, certify_o.degree);
            if (!is_minimal_degree(lab.ctxP, d))
                throw std::invalid_argument("--degree " + degree_str(d) +
                                            " is not a minimal degree; certificates require one");
            return emit(certificate_json(lab.ctxP, certificate(lab.ctxP, lab.ctxB, d)), certify_o);
        }
        if (cmd_verify->parsed()) {
            SweepConfig cfg;
            if (!v_types.empty()) {
                size_t pos = 0;
                while (pos <= v_types.size()) {
                    size_t comma = v_types.find(',', pos);
                    cfg.types.push_back(parse_type(v_types.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            } else if (v_max_rank > 0) {
                for (int n = 1; n <= v_max_rank; ++n) cfg.types.push_back({'A', n});
                for (int n = 2; n <= v_max_rank; ++n) cfg.types.push_back({'B', n});
                for (int n = 2; n <= v_max_rank; ++n) cfg.types.push_back({'C', n});
                for (int n = 4; n <= v_max_rank; ++n) cfg.types.push_back({'D', n});
                for (int n = 6; n <= std::min(v_max_rank, 8); ++n) cfg.types.push_back({'E', n});
                if (v_max_rank >= 4) cfg.types.push_back({'F', 4});
                if (v_max_rank >= 2) cfg.types.push_back({'G', 2});
            } else {
                throw std::invalid_argument("verify needs --type or --max-rank");
            }
            if (!verify_o.parabolic.empty()) {
                cfg.all_subsets = false;
                int min_rank = cfg.types.front().rank;
                for (const auto& s : cfg.types) min_rank = std::min(min_rank, s.rank);
                cfg.listed_parabolic = parse_parabolic(verify_o.parabolic, min_rank);
            }
            if (!v_checks.empty()) {
                size_t pos = 0;
                while (pos <= v_checks.size()) {
                    size_t comma = v_checks.find(',', pos);
                    cfg.checks.push_back(v_checks.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            cfg.jobs = v_jobs;
            SweepResult res = run_sweep(cfg);
            if (verify_o.format == "json") {
                std::cout << res.report.dump(2) << "\n";
            } else {
                Json summary{{"config", res.report["config"]}, {"summary", res.report["summary"]}};
                std::cout << render_text(summary);
                for (const auto& r : res.report["results"])
                    if (r["status"] != "pass")
                        std::cout << r["status"].get<std::string>() << "  " << r["check"].get<std::string>()
                                  << "  " << r["type"].get<std::string>() << " " << r["parabolic"].dump()
                                  << "  " << (r["witness"].is_null() ? "" : r["witness"].dump()) << "\n";
            }
            if (!verify_o.out.empty()) {
                std::ofstream f(verify_o.out);
                if (!f)
                    throw std::invalid_argument("cannot write --out file '" + verify_o.out + "'");
                f << res.report.dump(2) << "\n";
            }
            return res.exit_code;
        }
        if (cmd_golden->parsed()) {
            bool ok = false;
            Json table = golden_counts(ok);
            int rc = emit(table, golden_o);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
