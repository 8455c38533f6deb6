#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "caslab/render.hpp"

namespace py = pybind11;
using namespace caslab;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case Json::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = json_to_py(it.value());
            return d;
        }
        default: return py::none();
    }
}

uint32_t mask_of(int rank, const std::vector<int>& parabolic) {
    uint32_t m = 0;
    for (int i : parabolic) {
        if (i < 1 || i > rank)
            throw std::invalid_argument("parabolic index " + std::to_string(i) + " outside 1.." +
                                        std::to_string(rank));
        m |= (1u << (i - 1));
    }
    return m;
}

struct PyLab {
    std::shared_ptr<const RootSystem> rs;
    Context ctxP, ctxB;
};

PyLab lab(const std::string& type, const std::vector<int>& parabolic) {
    PyLab l;
    l.rs = build_root_system(parse_type(type));
    l.ctxP = make_context(l.rs, mask_of(l.rs->rank, parabolic));
    l.ctxB = make_context(l.rs, 0);
    return l;
}

py::object big_to_int(const BigUint& n) {
    return py::module_::import("builtins").attr("int")(n.str());
}

} // namespace

PYBIND11_MODULE(cascade_lab, m) {
    m.doc() = "Curve-neighborhood combinatorics on G/P: minimal degrees, cascades of "
              "orthogonal roots, liftings, quasi-homogeneity certificates.";

    m.def("positive_roots",
          [](const std::string& type) {
              auto rs = build_root_system(parse_type(type));
              return rs->roots;
          },
          py::arg("type"), "Positive roots as coefficient vectors over the simple roots.");

    m.def("cartan_matrix",
          [](const std::string& type) { return build_root_system(parse_type(type))->cartan; },
          py::arg("type"));

    m.def("highest_root",
          [](const std::string& type) {
              auto rs = build_root_system(parse_type(type));
              return rs->roots[rs->highest];
          },
          py::arg("type"));

    m.def("weyl_order",
          [](const std::string& type) { return big_to_int(weyl_order(parse_type(type))); },
          py::arg("type"));

    m.def("d_x",
          [](const std::string& type, const std::vector<int>& parabolic) {
              auto l = lab(type, parabolic);
              return compute_d_x(l.ctxP);
          },
          py::arg("type"), py::arg("parabolic") = std::vector<int>{},
          "Minimal degree whose z-coset is the longest element's coset.");

    m.def("minimal_degrees",
          [](const std::string& type, const std::vector<int>& parabolic) {
              auto l = lab(type, parabolic);
              return minimal_degrees(l.ctxP);
          },
          py::arg("type"), py::arg("parabolic") = std::vector<int>{});

    m.def("greedy",
          [](const std::string& type, const std::vector<int>& parabolic,
             const std::vector<int>& degree) {
              auto l = lab(type, parabolic);
              std::vector<IntVec> out;
              for (int a : greedy_decomposition(l.ctxP, degree)) out.push_back(l.rs->roots[a]);
              return out;
          },
          py::arg("type"), py::arg("parabolic"), py::arg("degree"));

    m.def("count_greedy",
          [](const std::string& type, const std::vector<int>& parabolic,
             const py::object& degree) {
              auto l = lab(type, parabolic);
              Degree d = degree.is_none() ? compute_d_x(l.ctxP) : degree.cast<Degree>();
              return big_to_int(count_greedy(l.ctxP, d));
          },
          py::arg("type"), py::arg("parabolic") = std::vector<int>{},
          py::arg("degree") = py::none());

    m.def("z_word",
          [](const std::string& type, const std::vector<int>& parabolic,
             const std::vector<int>& degree) {
              auto l = lab(type, parabolic);
              return word_str(*l.rs, z_element(l.ctxP, degree));
          },
          py::arg("type"), py::arg("parabolic"), py::arg("degree"));

    m.def("lifting",
          [](const std::string& type, const std::vector<int>& parabolic,
             const std::vector<int>& degree) {
              auto l = lab(type, parabolic);
              return lifting(l.ctxP, l.ctxB, degree);
          },
          py::arg("type"), py::arg("parabolic"), py::arg("degree"));

    m.def("cascade",
          [](const std::string& type, const std::vector<int>& degree) {
              auto l = lab(type, {});
              std::vector<IntVec> out;
              for (int a : cascade_of(l.ctxB, degree)) out.push_back(l.rs->roots[a]);
              return out;
          },
          py::arg("type"), py::arg("degree"),
          "Generalized cascade of orthogonal roots of a minimal degree over Delta.");

    m.def("certificate",
          [](const std::string& type, const std::vector<int>& parabolic,
             const std::vector<int>& degree) {
              auto l = lab(type, parabolic);
              return json_to_py(certificate_json(l.ctxP, certificate(l.ctxP, l.ctxB, degree)));
          },
          py::arg("type"), py::arg("parabolic"), py::arg("degree"));

    m.def("verify",
          [](const std::vector<std::string>& types, const py::object& parabolic,
             const std::vector<std::string>& checks, int jobs) {
              SweepConfig cfg;
              for (const auto& t : types) cfg.types.push_back(parse_type(t));
              if (!parabolic.is_none()) {
                  cfg.all_subsets = false;
                  int min_rank = 64;
                  for (const auto& s : cfg.types) min_rank = std::min(min_rank, s.rank);
                  cfg.listed_parabolic = mask_of(min_rank, parabolic.cast<std::vector<int>>());
              }
              cfg.checks = checks;
              cfg.jobs = jobs;
              SweepResult res = run_sweep(cfg);
              py::dict out;
              out["report"] = json_to_py(res.report);
              out["exit_code"] = res.exit_code;
              return out;
          },
          py::arg("types"), py::arg("parabolic") = py::none(),
          py::arg("checks") = std::vector<std::string>{}, py::arg("jobs") = 1);

    m.def("golden_counts", [] {
        bool ok = false;
        Json t = golden_counts(ok);
        py::dict out;
        out["table"] = json_to_py(t);
        out["ok"] = ok;
        return out;
    });
}
