#include "stanley/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace stanley {

namespace {

std::string located(int line, int column, const std::string& message) {
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << message;
    return out.str();
}

// Character cursor with 1-based line/column tracking. Whitespace is never
// significant; comments run from '#' to end of line.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    int line() const { return line_; }
    int column() const { return column_; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, column_, message);
    }

    std::string read_word() {
        std::string word;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            word.push_back(peek());
            advance();
        }
        return word;
    }

    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    std::string read_digits() {
        if (!at_digit()) fail("expected a number");
        std::string digits;
        while (at_digit()) {
            digits.push_back(peek());
            advance();
        }
        return digits;
    }

    int read_uint() {
        if (!at_digit()) fail("expected a number");
        long value = 0;
        while (at_digit()) {
            value = value * 10 + (peek() - '0');
            if (value > 100000000) fail("number too large");
            advance();
        }
        return static_cast<int>(value);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

int parse_header(Cursor& c, const std::string& keyword) {
    c.skip();
    if (c.eof()) c.fail("empty document");
    const int line = c.line();
    const int column = c.column();
    const std::string word = c.read_word();
    if (word != keyword) {
        throw ParseError(line, column, "expected '" + keyword + "' header");
    }
    c.skip();
    return c.read_uint();
}

Monomial parse_monomial(Cursor& c, int arity) {
    if (c.peek() == '1') {
        c.advance();
        if (c.at_digit() || (!c.eof() && c.peek() == '^')) {
            c.fail("malformed monomial");
        }
        c.skip();
        if (!c.eof() && c.peek() == '*') {
            c.fail("the unit monomial takes no factors");
        }
        return Monomial(arity);
    }
    std::vector<int> exponents(static_cast<std::size_t>(arity), 0);
    while (true) {
        if (c.eof() || c.peek() != 'x') c.fail("expected a monomial");
        c.advance();
        const int index_line = c.line();
        const int index_column = c.column();
        const int index = c.read_uint();
        if (index < 1 || index > arity) {
            throw ParseError(index_line, index_column, "variable index out of range");
        }
        int exponent = 1;
        if (!c.eof() && c.peek() == '^') {
            c.advance();
            const int exp_line = c.line();
            const int exp_column = c.column();
            exponent = c.read_uint();
            if (exponent < 1) {
                throw ParseError(exp_line, exp_column, "exponent must be at least 1");
            }
        }
        exponents[static_cast<std::size_t>(index - 1)] += exponent;
        c.skip();
        if (!c.eof() && c.peek() == '*') {
            c.advance();
            c.skip();
            continue;
        }
        break;
    }
    return Monomial(std::move(exponents));
}

void check_vertex(int vertex, int n, int line, int column) {
    if (vertex < 1 || vertex > n) {
        throw ParseError(line, column, "vertex out of range");
    }
}

// Digit strings too long for any valid vertex collapse to an out-of-range
// sentinel instead of overflowing.
long digits_value(const std::string& digits) {
    return digits.size() > 9 ? 1000000000L : std::stol(digits);
}

Face parse_facet(Cursor& c, int n) {
    if (c.eof() || c.peek() != '{') c.fail("expected a facet '{...}'");
    c.advance();
    c.skip();
    std::vector<int> vertices;
    if (!c.eof() && c.peek() == '}') {
        c.advance();
        return Face{};
    }
    const int first_line = c.line();
    const int first_column = c.column();
    std::string first = c.read_digits();
    c.skip();
    if (!c.eof() && c.peek() == ',') {
        // List style: numbers separated by commas.
        long value = digits_value(first);
        check_vertex(static_cast<int>(value), n, first_line, first_column);
        vertices.push_back(static_cast<int>(value));
        while (!c.eof() && c.peek() == ',') {
            c.advance();
            c.skip();
            const int line = c.line();
            const int column = c.column();
            const int vertex = c.read_uint();
            check_vertex(vertex, n, line, column);
            vertices.push_back(vertex);
            c.skip();
        }
    } else if (n <= 9) {
        // Digit-run style: each digit is one vertex.
        for (std::size_t i = 0; i < first.size(); ++i) {
            const int vertex = first[i] - '0';
            check_vertex(vertex, n, first_line, first_column + static_cast<int>(i));
        }
        for (char d : first) vertices.push_back(d - '0');
    } else {
        // Beyond 9 vertices a comma-less group must be a single vertex
        // number; digit runs would be ambiguous.
        long value = digits_value(first);
        if (value >= 1 && value <= n) {
            vertices.push_back(static_cast<int>(value));
        } else if (first.size() > 1) {
            throw ParseError(first_line, first_column,
                             "with more than 9 vertices, write facets in list "
                             "style {a,b,c}");
        } else {
            throw ParseError(first_line, first_column, "vertex out of range");
        }
    }
    if (c.eof() || c.peek() != '}') c.fail("expected ',' or '}'");
    c.advance();
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw ParseError(first_line, first_column, "duplicate vertex in facet");
        }
    }
    return Face(std::move(vertices));
}

// Shared item loop: items separated by commas and/or whitespace; a comma
// must sit between two items.
template <typename Item, typename ParseItem>
std::vector<Item> parse_items(Cursor& c, ParseItem parse_item) {
    std::vector<Item> items;
    bool after_comma = false;
    while (true) {
        c.skip();
        if (c.eof()) {
            if (after_comma) c.fail("expected an entry after ','");
            break;
        }
        if (c.peek() == ',') {
            if (items.empty() || after_comma) c.fail("expected an entry before ','");
            after_comma = true;
            c.advance();
            continue;
        }
        items.push_back(parse_item(c));
        after_comma = false;
    }
    return items;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(located(line, column, message)), line_(line), column_(column) {}

MonomialIdeal parse_ideal(const std::string& text) {
    Cursor c(text);
    const int arity = parse_header(c, "vars");
    std::vector<Monomial> generators = parse_items<Monomial>(
        c, [arity](Cursor& cur) { return parse_monomial(cur, arity); });
    return MonomialIdeal(arity, std::move(generators));
}

SimplicialComplex parse_complex(const std::string& text) {
    Cursor c(text);
    const int n = parse_header(c, "vertices");
    std::vector<Face> facets =
        parse_items<Face>(c, [n](Cursor& cur) { return parse_facet(cur, n); });
    return SimplicialComplex(n, std::move(facets));
}

InputDocument parse_document(const std::string& text) {
    Cursor probe(text);
    probe.skip();
    if (probe.eof()) probe.fail("empty document");
    const int line = probe.line();
    const int column = probe.column();
    const std::string word = probe.read_word();
    if (word == "vars") return parse_ideal(text);
    if (word == "vertices") return parse_complex(text);
    throw ParseError(line, column, "expected 'vars' or 'vertices' header");
}

std::string render_monomial(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= m.arity(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) out << "*";
        out << "x" << i;
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

std::string render_face(const Face& face, int n_vertices) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : face) {
        if (n_vertices <= 9) {
            out << v;
        } else {
            if (!first) out << ",";
            out << v;
        }
        first = false;
    }
    out << "}";
    return out.str();
}

std::string render_space(const StanleySpace& space) {
    std::ostringstream out;
    out << render_monomial(space.coefficient()) << " * K[";
    bool first = true;
    for (int v : space.variables()) {
        if (!first) out << ", ";
        out << "x" << v;
        first = false;
    }
    out << "]";
    return out.str();
}

std::string render_interval(const Interval& interval, int n_vertices) {
    return "[" + render_face(interval.lower(), n_vertices) + ", " +
           render_face(interval.upper(), n_vertices) + "]";
}

std::string render_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "vars " << ideal.arity() << "\n";
    for (const Monomial& g : ideal.generators()) {
        out << render_monomial(g) << "\n";
    }
    return out.str();
}

std::string render_complex(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "vertices " << complex.n_vertices() << "\n";
    for (const Face& f : complex.facets()) {
        out << render_face(f, complex.n_vertices()) << "\n";
    }
    return out.str();
}

std::string render_decomposition_text(const StanleyDecomposition& decomposition) {
    std::ostringstream out;
    for (const StanleySpace& s : decomposition.spaces()) {
        out << render_space(s) << "\n";
    }
    return out.str();
}

std::string render_partition_text(const Partition& partition) {
    std::ostringstream out;
    for (const Interval& iv : partition.intervals()) {
        out << render_interval(iv, partition.n_vertices()) << "\n";
    }
    return out.str();
}

std::string render_decomposition_json(const StanleyDecomposition& decomposition) {
    nlohmann::ordered_json doc;
    doc["kind"] = "decomposition";
    doc["target"] = decomposition.target() == Target::Ideal ? "ideal" : "complement";
    doc["arity"] = decomposition.arity();
    doc["spaces"] = nlohmann::ordered_json::array();
    for (const StanleySpace& s : decomposition.spaces()) {
        nlohmann::ordered_json entry;
        entry["coeff"] = s.coefficient().exponents();
        entry["vars"] = s.variables().indices();
        doc["spaces"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string render_partition_json(const Partition& partition) {
    nlohmann::ordered_json doc;
    doc["kind"] = "partition";
    doc["arity"] = partition.n_vertices();
    doc["intervals"] = nlohmann::ordered_json::array();
    for (const Interval& iv : partition.intervals()) {
        nlohmann::ordered_json entry;
        entry["lower"] = iv.lower().indices();
        entry["upper"] = iv.upper().indices();
        doc["intervals"].push_back(std::move(entry));
    }
    doc["r_vector"] = r_vector(partition);
    doc["nice"] = is_nice(partition);
    return doc.dump(2) + "\n";
}

}  // namespace stanley
