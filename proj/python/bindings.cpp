#include "tempiric/figure.hpp"
#include "tempiric/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tempiric;

namespace {

IrrepLabel to_label(const std::vector<int> &parts) { return IrrepLabel{parts}; }

// Fractions cross the boundary as (numerator, denominator) strings.
std::pair<std::string, std::string> split_rational(const Rational &r) {
    return {boost::multiprecision::numerator(r).str(),
            boost::multiprecision::denominator(r).str()};
}

Rational bound_of(const std::string &text) {
    Rational b = parse_rational(text);
    if (b < 0)
        throw DomainError("bound must be nonnegative");
    return b;
}

KSum to_ksum(const std::vector<std::pair<std::vector<int>, long long>> &terms) {
    KSum v;
    for (const auto &[parts, c] : terms)
        v.add(to_label(parts), c);
    return v;
}

} // namespace

PYBIND11_MODULE(_tempiric, m) {
    m.doc() = "Exact tempiric multiplicity structure of rank-one groups";

    py::register_exception<Error>(m, "TempiricError", PyExc_ValueError);

    py::class_<GroupDatum>(m, "Group")
        .def_property_readonly("name",
                               [](const GroupDatum &d) { return d.name; })
        .def_property_readonly("equal_rank",
                               [](const GroupDatum &d) { return d.equal_rank; })
        .def("to_json", &serialize)
        .def("__eq__", [](const GroupDatum &a, const GroupDatum &b) {
            return a == b;
        })
        .def("__repr__", [](const GroupDatum &d) {
            return "<tempiric.Group " + d.name + ">";
        });

    m.def("builtin_names", &builtin_names);
    m.def("builtin", [](const std::string &n) { return builtin(n); });
    m.def("load", [](const std::string &text) { return load(text); });
    m.def("load_file", &load_file);

    m.def("vogan_norm", [](const GroupDatum &d, const std::vector<int> &tau) {
        return split_rational(vogan_norm(d, to_label(tau)));
    });
    m.def("enumerate_ktypes", [](const GroupDatum &d, const std::string &b) {
        std::vector<std::vector<int>> out;
        for (const auto &t : enumerate_ktypes(d, bound_of(b)))
            out.push_back(t.parts);
        return out;
    });
    m.def("ktype_dim", [](const GroupDatum &d, const std::vector<int> &tau) {
        return weyl_dim(d.k, to_label(tau));
    });
    m.def("tensor_decompose",
          [](const GroupDatum &d, const std::vector<int> &a,
             const std::vector<int> &b) {
              std::vector<std::pair<std::vector<int>, long long>> out;
              auto sum = tensor_decompose(d.k, to_label(a), to_label(b));
              for (const auto &[l, c] : sum)
                  out.emplace_back(l.parts, c);
              return out;
          });
    m.def("restrict", [](const GroupDatum &d, const std::vector<int> &tau) {
        std::vector<std::pair<std::vector<int>, long long>> out;
        MSum sum = restrict_decompose(d, to_label(tau));
        for (const auto &[l, c] : sum)
            out.emplace_back(l.parts, c);
        return out;
    });
    m.def("tempiric_table_json", [](const GroupDatum &d, const std::string &b) {
        return tempiric_table_json(d, bound_of(b)).dump();
    });
    m.def("ck_matrix_json", [](const GroupDatum &d, const std::string &b) {
        MultMatrix mm = mult_matrix(d, bound_of(b));
        return matrix_json(mm, invert_window(mm)).dump();
    });
    m.def("verify_json",
          [](const GroupDatum &d, const std::string &b, std::uint64_t seed) {
              return verification_json(run_verification(d, bound_of(b), seed))
                  .dump();
          },
          py::arg("group"), py::arg("bound"), py::arg("seed") = kDefaultSeed);
    m.def("dimension_identity",
          [](const GroupDatum &d,
             const std::vector<std::pair<std::vector<int>, long long>> &v1,
             const std::vector<std::pair<std::vector<int>, long long>> &v2) {
              auto r = dimension_identity_check(d, to_ksum(v1), to_ksum(v2));
              if (!r.passed())
                  throw InternalError(r.counterexample());
              return std::make_pair(r.values.at(0).second,
                                    r.values.at(1).second);
          });
    m.def("figure",
          [](const GroupDatum &d, int grid_bound, const std::string &format) {
              DiagramSpec spec = figure(d, grid_bound);
              if (format == "dot")
                  return render_dot(spec);
              if (format == "svg")
                  return render_svg(spec);
              if (format == "txt")
                  return render_text(spec);
              throw DomainError("unknown figure format '" + format + "'");
          },
          py::arg("group"), py::arg("grid_bound"), py::arg("format") = "txt");
    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
