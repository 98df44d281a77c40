#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "derangebij/inversion_sequence.hpp"
#include "derangebij/notation.hpp"
#include "derangebij/oracle.hpp"
#include "derangebij/permutation.hpp"
#include "derangebij/phi.hpp"
#include "derangebij/recurrences.hpp"

namespace py = pybind11;
using namespace derangebij;

namespace {

py::int_ to_python(BigInt const &v)
{
  return py::int_(py::str(v.str()));
}

CountMethod method_from(std::string const &name)
{
  if (name == "enumerate")
    return CountMethod::enumerate;
  if (name == "recurrence")
    return CountMethod::recurrence;
  if (name == "alternate")
    return CountMethod::alternate_recurrence;
  if (name == "formula")
    return CountMethod::formula;
  throw py::value_error("unknown method '" + name + "'");
}

py::dict report_dict(VerificationReport const &r)
{
  py::dict d;
  d["subject"] = r.subject;
  d["n_min"] = r.n_min;
  d["n_max"] = r.n_max;
  d["passed"] = r.passed;
  d["failures"] = r.failures;
  d["counterexamples"] = r.counterexamples;
  d["seconds"] = r.seconds;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Bijections between 000-avoiding inversion sequences and non-derangements";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
    .def(py::init<>())
    .def_static("parse", [](std::string const &s) { return parse_permutation(s); })
    .def_static("from_one_line", &Permutation::from_one_line)
    .def_static("from_cycles",
                [](std::vector<Cycle> const &c) { return Permutation::from_cycles(c); })
    .def_static("identity", &Permutation::identity)
    .def_property_readonly("size", &Permutation::size)
    .def("one_line", &Permutation::one_line)
    .def("cycles", [](Permutation const &p) { return p.cycles().cycles; })
    .def("fixed_points", [](Permutation const &p) { return fixed_points(p); })
    .def("is_derangement", [](Permutation const &p) { return is_derangement(p); })
    .def("inverse", [](Permutation const &p) { return inverse(p); })
    .def("__call__", &Permutation::operator())
    .def("__str__", [](Permutation const &p) { return to_cycle_string(p); })
    .def("__repr__",
         [](Permutation const &p) { return "Permutation('" + to_cycle_string(p) + "')"; })
    .def("__eq__", [](Permutation const &a, Permutation const &b) { return a == b; })
    .def("__hash__", &Permutation::hash);

  py::class_<MarkedPermutation>(m, "MarkedPermutation")
    .def(py::init<Permutation, Element>())
    .def_static("parse", [](std::string const &s) { return parse_marked(s); })
    .def_property_readonly("perm", &MarkedPermutation::perm)
    .def_property_readonly("mark", &MarkedPermutation::mark)
    .def("__str__", [](MarkedPermutation const &x) { return to_string(x); })
    .def("__repr__",
         [](MarkedPermutation const &x) { return "MarkedPermutation('" + to_string(x) + "')"; })
    .def("__eq__", [](MarkedPermutation const &a, MarkedPermutation const &b) { return a == b; });

  py::class_<InversionSequence>(m, "InversionSequence")
    .def(py::init<std::vector<unsigned>>())
    .def(py::init([](std::string const &s) { return parse_inversion_sequence(s); }))
    .def_property_readonly("entries", &InversionSequence::entries)
    .def("__len__", &InversionSequence::size)
    .def("__str__", [](InversionSequence const &e) { return to_string(e); })
    .def("__repr__",
         [](InversionSequence const &e) { return "InversionSequence('" + to_string(e) + "')"; })
    .def("__eq__", [](InversionSequence const &a, InversionSequence const &b) { return a == b; });
  py::implicitly_convertible<py::str, InversionSequence>();
  py::implicitly_convertible<py::list, InversionSequence>();

  py::class_<TaggedNonDerangement>(m, "TaggedNonDerangement")
    .def(py::init<unsigned, Permutation>(), py::arg("n"), py::arg("perm"))
    .def_property_readonly("n", &TaggedNonDerangement::n)
    .def_property_readonly("perm", &TaggedNonDerangement::perm)
    .def_property_readonly("summand", [](TaggedNonDerangement const &t) {
      return t.summand() == Summand::full ? "full" : "reduced";
    })
    .def("__eq__",
         [](TaggedNonDerangement const &a, TaggedNonDerangement const &b) { return a == b; })
    .def("__repr__", [](TaggedNonDerangement const &t) {
      return "TaggedNonDerangement(" + std::to_string(t.n()) + ", '" + to_cycle_string(t.perm()) +
             "')";
    });

  py::class_<SplitPair>(m, "SplitPair")
    .def(py::init<unsigned, Element, Permutation>(), py::arg("n"), py::arg("label"),
         py::arg("perm"))
    .def_readonly("n", &SplitPair::n)
    .def_readonly("label", &SplitPair::label)
    .def_readonly("perm", &SplitPair::perm)
    .def("__eq__", [](SplitPair const &a, SplitPair const &b) { return a == b; })
    .def("__repr__", [](SplitPair const &s) {
      return "SplitPair(" + std::to_string(s.label) + ", '" + to_cycle_string(s.perm) + "')";
    });

  m.def("avoids_000", &avoids_000);
  m.def("avoiders", &avoiders);
  m.def("encode_word", [](InversionSequence const &e) { return to_string(encode_word(e)); });
  m.def("decode_word", [](std::string const &w) { return decode_word(parse_rword(w)); });

  m.def("phi", &avoider_to_nonderangement);
  m.def("phi_cyclic", &avoider_to_nonderangement_cyclic);
  m.def("phi_inverse", &nonderangement_to_avoider);
  m.def("phi_trace", [](InversionSequence const &e) {
    py::list rows;
    for (auto const &s : trace_avoider_to_nonderangement(e)) {
      py::dict row;
      row["k"] = s.k;
      if (s.letter)
        row["w"] = *s.letter == RWord::kRepeat ? py::object(py::str("R"))
                                                : py::object(py::int_(*s.letter));
      else
        row["w"] = py::none();
      row["sigma"] = s.sigma;
      rows.append(row);
    }
    return rows;
  });
  m.def("ext", &pair_to_nonderangement, py::arg("a"), py::arg("e"));
  m.def("ext_inverse", &nonderangement_to_pair);

  m.def("derangement_split", &derangement_split);
  m.def("derangement_split_inverse", &derangement_split_inverse);
  m.def("varphi", &split_nonderangement);
  m.def("varphi_inverse", &join_nonderangement);
  m.def("varphi_alt", &split_nonderangement_alt);
  m.def("varphi_alt_inverse", &join_nonderangement_alt);
  m.def("theta", &to_marked);
  m.def("theta_inverse", &from_marked);

  m.def(
    "count_derangements",
    [](unsigned n, std::string const &method) {
      return to_python(count_derangements(n, method_from(method)));
    },
    py::arg("n"), py::arg("method") = "recurrence");
  m.def(
    "count_non_derangements",
    [](unsigned n, std::string const &method) {
      return to_python(count_non_derangements(n, method_from(method)));
    },
    py::arg("n"), py::arg("method") = "recurrence");
  m.def(
    "count_inv000",
    [](unsigned n, std::string const &method) {
      return to_python(count_inv000(n, method_from(method)));
    },
    py::arg("n"), py::arg("method") = "recurrence");

  m.def(
    "verify_bijection",
    [](std::string const &name, unsigned n_max, unsigned jobs) {
      VerificationReport r;
      {
        py::gil_scoped_release release;
        r = verify_bijection(name, n_max, {10, jobs});
      }
      return report_dict(r);
    },
    py::arg("name"), py::arg("n_max"), py::arg("jobs") = 1);
  m.def("verify_identity", [](std::string const &name, unsigned n_max) {
    return report_dict(verify_identity(name, n_max));
  });
}
