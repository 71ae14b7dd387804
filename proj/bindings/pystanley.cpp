#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stanley/decomposition.hpp"
#include "stanley/index_set.hpp"
#include "stanley/monomial.hpp"
#include "stanley/monomial_ideal.hpp"
#include "stanley/partition.hpp"
#include "stanley/random_instances.hpp"
#include "stanley/simplicial_complex.hpp"
#include "stanley/text_format.hpp"
#include "stanley/verify.hpp"

namespace py = pybind11;
using namespace stanley;

namespace {

std::string repr_indices(const IndexSet& s) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (int i : s) {
        if (!first) out << ", ";
        out << i;
        first = false;
    }
    out << "]";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(pystanley, m) {
    m.doc() = "Stanley decompositions of monomial ideals and interval "
              "partitions of simplicial complexes";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<IndexSet>(m, "IndexSet")
        .def(py::init<std::vector<int>>(), py::arg("indices"))
        .def_static("full", &IndexSet::full, py::arg("n"))
        .def("contains", &IndexSet::contains, py::arg("index"))
        .def("is_subset_of", &IndexSet::is_subset_of)
        .def("with_index", &IndexSet::with, py::arg("index"))
        .def("without_index", &IndexSet::without, py::arg("index"))
        .def("indices", &IndexSet::indices)
        .def("__len__", &IndexSet::size)
        .def("__contains__", &IndexSet::contains)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__",
             [](const IndexSet& s) { return "IndexSet(" + repr_indices(s) + ")"; });
    py::implicitly_convertible<py::list, IndexSet>();

    py::class_<Monomial>(m, "Monomial")
        .def(py::init<std::vector<int>>(), py::arg("exponents"))
        .def_static("unit", [](int arity) { return Monomial(arity); }, py::arg("arity"))
        .def_static("variable", &Monomial::variable, py::arg("index"), py::arg("arity"))
        .def_static("from_support", &Monomial::from_support, py::arg("support"),
                    py::arg("arity"))
        .def("arity", &Monomial::arity)
        .def("exponent", &Monomial::exponent, py::arg("index"))
        .def("exponents", &Monomial::exponents)
        .def("total_degree", &Monomial::total_degree)
        .def("is_unit", &Monomial::is_unit)
        .def("is_squarefree", &Monomial::is_squarefree)
        .def("support", &Monomial::support)
        .def("divides", &Monomial::divides)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Monomial& x) { return render_monomial(x); });

    m.def("minimalize", &minimalize, py::arg("monomials"),
          "Minimal generating set of the ideal the monomials generate.");

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init<int>(), py::arg("arity"))
        .def(py::init<int, std::vector<Monomial>>(), py::arg("arity"),
             py::arg("generators"))
        .def_static("zero", &MonomialIdeal::zero, py::arg("arity"))
        .def_static("unit", &MonomialIdeal::unit, py::arg("arity"))
        .def("arity", &MonomialIdeal::arity)
        .def("generators", &MonomialIdeal::generators)
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_unit", &MonomialIdeal::is_unit)
        .def("is_squarefree", &MonomialIdeal::is_squarefree)
        .def("contains", &MonomialIdeal::contains, py::arg("monomial"))
        .def("slice", &MonomialIdeal::slice, py::arg("k"))
        .def("alpha", &MonomialIdeal::alpha)
        .def("beta", &MonomialIdeal::beta)
        .def(py::self == py::self)
        .def("__repr__", [](const MonomialIdeal& ideal) {
            std::ostringstream out;
            out << "MonomialIdeal(arity=" << ideal.arity() << ", generators=[";
            bool first = true;
            for (const Monomial& g : ideal.generators()) {
                if (!first) out << ", ";
                out << render_monomial(g);
                first = false;
            }
            out << "])";
            return out.str();
        });

    m.def("reverse_variables", &reverse_variables, py::arg("ideal"),
          "The same ideal with the variable order reversed.");

    py::class_<StanleySpace>(m, "StanleySpace")
        .def(py::init<Monomial, IndexSet>(), py::arg("coefficient"),
             py::arg("variables"))
        .def("coefficient", &StanleySpace::coefficient)
        .def("variables", &StanleySpace::variables)
        .def("arity", &StanleySpace::arity)
        .def("contains", &StanleySpace::contains, py::arg("monomial"))
        .def("is_squarefree", &StanleySpace::is_squarefree)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const StanleySpace& s) { return render_space(s); });

    py::enum_<Target>(m, "Target")
        .value("Ideal", Target::Ideal)
        .value("Complement", Target::Complement);

    py::class_<StanleyDecomposition>(m, "StanleyDecomposition")
        .def(py::init<Target, MonomialIdeal, std::vector<StanleySpace>>(),
             py::arg("target"), py::arg("source"), py::arg("spaces"))
        .def("target", &StanleyDecomposition::target)
        .def("source", &StanleyDecomposition::source)
        .def("spaces", &StanleyDecomposition::spaces)
        .def("arity", &StanleyDecomposition::arity)
        .def("is_squarefree", &StanleyDecomposition::is_squarefree)
        .def("sdepth", &StanleyDecomposition::sdepth)
        .def(py::self == py::self)
        .def("__repr__", [](const StanleyDecomposition& d) {
            std::ostringstream out;
            out << "<StanleyDecomposition of "
                << (d.target() == Target::Ideal ? "ideal" : "complement") << ", "
                << d.spaces().size() << " spaces>";
            return out.str();
        });

    m.def("janet_ideal", &janet_ideal, py::arg("ideal"),
          "Stanley decomposition of the ideal itself.");
    m.def("janet_complement", &janet_complement, py::arg("ideal"),
          "Stanley decomposition of the ideal's complement.");

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init<int>(), py::arg("n_vertices"))
        .def(py::init<int, std::vector<Face>>(), py::arg("n_vertices"),
             py::arg("facets"))
        .def("n_vertices", &SimplicialComplex::n_vertices)
        .def("facets", &SimplicialComplex::facets)
        .def("is_void", &SimplicialComplex::is_void)
        .def("is_full_simplex", &SimplicialComplex::is_full_simplex)
        .def("has_face", &SimplicialComplex::has_face, py::arg("face"))
        .def("all_faces", &SimplicialComplex::all_faces)
        .def("deletion", &SimplicialComplex::deletion)
        .def("link", &SimplicialComplex::link)
        .def(py::self == py::self)
        .def("__repr__", [](const SimplicialComplex& c) {
            std::ostringstream out;
            out << "SimplicialComplex(n_vertices=" << c.n_vertices()
                << ", facets=[";
            bool first = true;
            for (const Face& f : c.facets()) {
                if (!first) out << ", ";
                out << repr_indices(f);
                first = false;
            }
            out << "])";
            return out.str();
        });

    m.def("stanley_reisner", &stanley_reisner, py::arg("complex"),
          "The ideal generated by the minimal non-faces.");
    m.def("reverse_vertices", &reverse_vertices, py::arg("complex"),
          "The same complex with the vertex labels reversed.");

    py::class_<Interval>(m, "Interval")
        .def(py::init<Face, Face>(), py::arg("lower"), py::arg("upper"))
        .def("lower", &Interval::lower)
        .def("upper", &Interval::upper)
        .def("rank", &Interval::rank)
        .def("contains", &Interval::contains, py::arg("face"))
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Interval& i) {
            return "Interval(lower=" + repr_indices(i.lower()) +
                   ", upper=" + repr_indices(i.upper()) + ")";
        });

    py::class_<Partition>(m, "Partition")
        .def(py::init<SimplicialComplex, std::vector<Interval>>(),
             py::arg("source"), py::arg("intervals"))
        .def("source", &Partition::source)
        .def("intervals", &Partition::intervals)
        .def("n_vertices", &Partition::n_vertices)
        .def(py::self == py::self)
        .def("__repr__", [](const Partition& p) {
            std::ostringstream out;
            out << "<Partition of " << p.n_vertices() << "-vertex complex, "
                << p.intervals().size() << " intervals>";
            return out.str();
        });

    m.def("janet_partition", &janet_partition, py::arg("complex"),
          "Interval partition of the complex's faces.");
    m.def("r_vector", &r_vector, py::arg("partition"),
          "Interval counts by rank.");

    py::class_<NiceReport>(m, "NiceReport")
        .def_readonly("nice", &NiceReport::nice)
        .def_readonly("non_facet_uppers", &NiceReport::non_facet_uppers)
        .def_readonly("uncovered_facets", &NiceReport::uncovered_facets);

    m.def("check_nice", &check_nice, py::arg("partition"),
          "Compares the upper endpoints with the source facets.");
    m.def("is_nice", &is_nice, py::arg("partition"));
    m.def("partition_to_spaces", &partition_to_spaces, py::arg("partition"),
          "The complement decomposition the partition induces.");

    py::class_<Failure>(m, "Failure")
        .def_readonly("witness", &Failure::witness)
        .def_readonly("observed", &Failure::observed)
        .def_readonly("expected", &Failure::expected)
        .def("__repr__", [](const Failure& f) {
            std::ostringstream out;
            out << "Failure(" << f.witness << ": observed " << f.observed
                << ", expected " << f.expected << ")";
            return out.str();
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("checked_count", &VerificationReport::checked_count)
        .def_readonly("failures", &VerificationReport::failures)
        .def("ok", &VerificationReport::ok)
        .def("__repr__", [](const VerificationReport& r) {
            std::ostringstream out;
            out << "<VerificationReport " << (r.ok() ? "ok" : "FAIL") << ", checked "
                << r.checked_count << ", " << r.failures.size() << " failures>";
            return out.str();
        });

    m.def("default_max_degree", &default_max_degree, py::arg("ideal"));
    m.def("verify_ideal_cover", &verify_ideal_cover, py::arg("ideal"),
          py::arg("decomposition"), py::arg("max_degree"));
    m.def("verify_complement_cover", &verify_complement_cover, py::arg("ideal"),
          py::arg("decomposition"), py::arg("max_degree"));
    m.def("verify_partition", &verify_partition, py::arg("complex"),
          py::arg("partition"));
    m.def("verify_correspondence", &verify_correspondence, py::arg("complex"),
          py::arg("max_degree") = -1);

    m.def("random_ideal", &random_ideal, py::arg("seed"), py::arg("arity"),
          py::arg("max_degree"), py::arg("max_generators"),
          py::arg("squarefree") = false);
    m.def("random_complex", &random_complex, py::arg("seed"),
          py::arg("n_vertices"), py::arg("max_facets"));

    m.def("parse_ideal", &parse_ideal, py::arg("text"));
    m.def("parse_complex", &parse_complex, py::arg("text"));
    m.def("parse_document", &parse_document, py::arg("text"));

    m.def("render_monomial", &render_monomial, py::arg("monomial"));
    m.def("render_face", &render_face, py::arg("face"), py::arg("n_vertices"));
    m.def("render_space", &render_space, py::arg("space"));
    m.def("render_interval", &render_interval, py::arg("interval"),
          py::arg("n_vertices"));
    m.def("render_ideal", &render_ideal, py::arg("ideal"));
    m.def("render_complex", &render_complex, py::arg("complex"));
    m.def("render_decomposition_text", &render_decomposition_text,
          py::arg("decomposition"));
    m.def("render_partition_text", &render_partition_text, py::arg("partition"));
    m.def("render_decomposition_json", &render_decomposition_json,
          py::arg("decomposition"));
    m.def("render_partition_json", &render_partition_json, py::arg("partition"));
}
