#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "stanley/decomposition.hpp"
#include "stanley/monomial_ideal.hpp"
#include "stanley/partition.hpp"
#include "stanley/simplicial_complex.hpp"

namespace stanley {

/// Error in an input document, with 1-based line and column of the offender.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Ideal documents:   header "vars n", then monomials separated by commas or
// newlines. A monomial is "1" or factors x<i> / x<i>^<e> joined by "*".
// Comments run from '#' to end of line; whitespace is insignificant. A
// header-only document is the zero ideal.
//
// Complex documents: header "vertices n", then facets separated by commas or
// newlines. A facet is "{}" or braces around vertices: a digit run "{124}"
// (single-digit vertices, only when n <= 9) or a comma list "{1,2,4}". When
// n > 9 a comma-less group must be a single vertex number; anything longer
// errors, asking for list style.

MonomialIdeal parse_ideal(const std::string& text);
SimplicialComplex parse_complex(const std::string& text);

/// A parsed input document of either kind, dispatched on the header keyword.
using InputDocument = std::variant<MonomialIdeal, SimplicialComplex>;
InputDocument parse_document(const std::string& text);

// Rendering. Canonical order throughout, so rendered documents are
// byte-stable and parse back to equal values (render/parse round-trip).

std::string render_monomial(const Monomial& m);
/// Digit-run style ("{124}") when n_vertices <= 9, list style otherwise.
std::string render_face(const Face& face, int n_vertices);
std::string render_space(const StanleySpace& space);
std::string render_interval(const Interval& interval, int n_vertices);

/// Document forms, re-parseable by the matching parser.
std::string render_ideal(const MonomialIdeal& ideal);
std::string render_complex(const SimplicialComplex& complex);

/// One space or interval per line.
std::string render_decomposition_text(const StanleyDecomposition& decomposition);
std::string render_partition_text(const Partition& partition);

/// Machine format: a single JSON object. Decompositions carry kind
/// ("decomposition"), target, arity, and spaces as {coeff, vars}; partitions
/// carry kind ("partition"), arity, intervals as {lower, upper}, r_vector,
/// and nice. All values are integral.
std::string render_decomposition_json(const StanleyDecomposition& decomposition);
std::string render_partition_json(const Partition& partition);

}  // namespace stanley
