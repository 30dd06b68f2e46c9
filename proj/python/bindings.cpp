#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hooklab/abacus.hpp"
#include "hooklab/genfun.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/verify.hpp"

namespace py = pybind11;
using namespace hooklab;

namespace {

py::object big_to_int(const mpz_class& value) {
    return py::module_::import("builtins").attr("int")(value.get_str());
}

py::object report_to_dict(const VerificationReport& report) {
    return py::module_::import("json").attr("loads")(report.to_json().dump());
}

std::vector<std::tuple<int, int, std::string>> series_terms(const QSeries& series) {
    std::vector<std::tuple<int, int, std::string>> out;
    for (const auto& term : series.terms())
        out.emplace_back(term.q_exp, term.x_exp, term.coeff.get_str());
    return out;
}

} // namespace

PYBIND11_MODULE(_hooklab, m) {
    m.doc() = "Exact hook statistics of self-conjugate partitions, the Littlewood "
              "t-core/t-quotient decomposition, and truncated q-series identities";

    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def(py::init([](const std::vector<int>& parts) { return Partition(parts); }),
             py::arg("parts"))
        .def(py::init([](const std::string& text) { return Partition::parse(text); }),
             py::arg("text"))
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("size", &Partition::size)
        .def("__len__", &Partition::length)
        .def("conjugate", &Partition::conjugate)
        .def("is_self_conjugate", &Partition::is_self_conjugate)
        .def("hook_lengths", &Partition::hook_lengths_desc)
        .def("hook_multiset", &Partition::hook_multiset)
        .def("n_hooks", &Partition::hook_count, py::arg("t"))
        .def("__str__", &Partition::to_string)
        .def("__repr__",
             [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
        .def("__hash__",
             [](const Partition& p) { return py::hash(py::str(p.to_string())); })
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::enum_<ScType>(m, "ScType").value("TYPE1", ScType::type1).value("TYPE2", ScType::type2);

    py::class_<ScSplit>(m, "ScSplit")
        .def_readonly("durfee", &ScSplit::durfee)
        .def_readonly("twin", &ScSplit::twin)
        .def_readonly("type", &ScSplit::type);

    m.def("sc_split", &sc_split, py::arg("partition"));
    m.def("sc_reassemble", &sc_reassemble, py::arg("split"));

    m.def("partitions", &all_partitions, py::arg("n"),
          "All partitions of n in reverse-lexicographic order");
    m.def("self_conjugate_partitions", &self_conjugate_partitions, py::arg("n"));
    m.def("count_distinct_odd",
          [](int n) { return big_to_int(count_distinct_odd(n)); }, py::arg("n"),
          "q*(n), the number of partitions of n into distinct odd parts (equals sc(n))");
    m.def("count_self_conjugate",
          [](int n) { return big_to_int(count_self_conjugate(n)); }, py::arg("n"));

    py::class_<LittlewoodImage>(m, "LittlewoodImage")
        .def_readonly("core", &LittlewoodImage::core)
        .def_readonly("quotient", &LittlewoodImage::quotient)
        .def_readonly("t", &LittlewoodImage::t);

    m.def("encode", [](const Partition& p) { return encode(p).to_string(); }, py::arg("partition"),
          "Canonical abacus word of a partition, e.g. '1100101.0101100'");
    m.def("decode", [](const std::string& word) { return decode(AbacusWord::parse(word)); },
          py::arg("word"));
    m.def("decompose", &decompose, py::arg("partition"), py::arg("t"));
    m.def("compose",
          [](const Partition& core, const std::vector<Partition>& quotient, int t) {
              return compose({core, quotient, t});
          },
          py::arg("core"), py::arg("quotient"), py::arg("t"));
    m.def("t_core", &t_core, py::arg("partition"), py::arg("t"));
    m.def("is_t_core", &is_t_core, py::arg("partition"), py::arg("t"));
    m.def("verify_sc_properties",
          [](const Partition& p, int t) { return report_to_dict(verify_sc_properties(p, t)); },
          py::arg("partition"), py::arg("t"));

    m.def("a_star_oracle", [](int t, int n) { return big_to_int(a_star_oracle(t, n)); },
          py::arg("t"), py::arg("n"));
    m.def("a_star_formula", [](int t, int n) { return big_to_int(a_star_formula(t, n)); },
          py::arg("t"), py::arg("n"));
    m.def("a_star_table", [](int n) {
        py::list rows;
        for (const auto& [label, value] : a_star_table(n))
            rows.append(py::make_tuple(label, big_to_int(value)));
        return rows;
    }, py::arg("n"));

    // Series are returned as sorted (q_exponent, x_exponent, coefficient) triples
    // with the exact coefficient rendered as a decimal string.
    m.def("sc_series", [](int qmax) { return series_terms(sc_series(qmax)); }, py::arg("qmax"));
    m.def("han_series", [](int t, int qmax) { return series_terms(han_rhs(t, qmax)); },
          py::arg("t"), py::arg("qmax"));
    m.def("sc_hook_series",
          [](int t, int qmax) {
              return series_terms(t % 2 == 0 ? thm11_even_rhs(t, qmax) : thm11_odd_rhs(t, qmax));
          },
          py::arg("t"), py::arg("qmax"),
          "Closed form for sum over self-conjugate partitions of x^{n_t} q^{|lambda|}");
    m.def("h_star_series", [](int qmax) { return series_terms(h_star(qmax)); }, py::arg("qmax"));
    m.def("gen1_series", [](int qmax) { return series_terms(gen1_series(qmax)); }, py::arg("qmax"));
    m.def("a_star_series", [](int t, int qmax) { return series_terms(a_star_series(t, qmax)); },
          py::arg("t"), py::arg("qmax"));
    m.def("sc_core_series", [](int t, int qmax) { return series_terms(gks_core_genfun(t, qmax)); },
          py::arg("t"), py::arg("qmax"));

    m.def("verify",
          [](const std::vector<std::string>& targets, std::optional<int> t,
             std::optional<int> qmax, int jobs) {
              SuiteOptions options;
              options.targets = targets;
              options.t = t;
              options.qmax = qmax;
              options.jobs = jobs;
              py::list reports;
              for (const auto& report : run_verification_suite(options))
                  reports.append(report_to_dict(report));
              return reports;
          },
          py::arg("targets") = std::vector<std::string>{"all"}, py::arg("t") = py::none(),
          py::arg("qmax") = py::none(), py::arg("jobs") = 1);
}
