#include "stanley/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/partition.hpp"
#include "stanley/simplicial_complex.hpp"
#include "stanley/text_format.hpp"
#include "stanley/verify.hpp"

namespace stanley::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

InputDocument load_document(const std::string& path, bool reverse) {
    InputDocument doc = parse_document(read_file(path));
    if (reverse) {
        if (auto* ideal = std::get_if<MonomialIdeal>(&doc)) {
            return reverse_variables(*ideal);
        }
        return reverse_vertices(std::get<SimplicialComplex>(doc));
    }
    return doc;
}

const MonomialIdeal& need_ideal(const InputDocument& doc) {
    if (const auto* ideal = std::get_if<MonomialIdeal>(&doc)) return *ideal;
    throw std::invalid_argument("this command needs an ideal document ('vars' header)");
}

const SimplicialComplex& need_complex(const InputDocument& doc) {
    if (const auto* complex = std::get_if<SimplicialComplex>(&doc)) return *complex;
    throw std::invalid_argument(
        "this command needs a complex document ('vertices' header)");
}

std::string render_r_vector(const std::vector<int>& counts) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out << ", ";
        out << counts[i];
    }
    out << ")";
    return out.str();
}

int report_outcome(const VerificationReport& report, std::ostream& out) {
    if (report.ok()) {
        out << "ok: checked " << report.checked_count << " objects, 0 failures\n";
        return kOk;
    }
    out << "FAIL: checked " << report.checked_count << " objects, "
        << report.failures.size() << " failures\n";
    for (const Failure& f : report.failures) {
        out << "  " << f.witness << " (observed " << f.observed << ", expected "
            << f.expected << ")\n";
    }
    return kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stanley decompositions of monomial ideals and interval "
                 "partitions of simplicial complexes"};
    app.name("stanley");
    app.require_subcommand(1);

    std::string input;
    std::string target;
    std::string format = "text";
    std::string mode;
    int max_degree = -1;
    bool reverse = false;
    bool want_nice = false;
    bool want_r_vector = false;

    CLI::App* decompose =
        app.add_subcommand("decompose", "Decompose an ideal or its complement "
                                        "into Stanley spaces");
    decompose->add_option("--input", input, "ideal document")->required();
    decompose->add_option("--target", target, "what the spaces cover")
        ->required()
        ->check(CLI::IsMember({"ideal", "complement"}));
    decompose->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    decompose->add_flag("--reverse-vars", reverse,
                        "reverse the variable order before computing");

    CLI::App* partition =
        app.add_subcommand("partition", "Partition a complex's faces into intervals");
    partition->add_option("--input", input, "complex document")->required();
    partition->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    partition->add_flag("--check-nice", want_nice,
                        "report whether the upper endpoints are exactly the facets");
    partition->add_flag("--r-vector", want_r_vector,
                        "report interval counts by rank");
    partition->add_flag("--reverse-vars", reverse,
                        "reverse the vertex labels before computing");

    CLI::App* verify =
        app.add_subcommand("verify", "Check an engine's output by brute force");
    verify->add_option("--input", input, "ideal or complex document")->required();
    verify->add_option("--mode", mode, "which check to run")
        ->required()
        ->check(CLI::IsMember({"ideal", "complement", "partition", "correspondence"}));
    verify->add_option("--max-degree", max_degree,
                       "enumeration bound for cover checks (default: max "
                       "generator degree + arity + 1)");
    verify->add_flag("--reverse-vars", reverse,
                     "reverse the variable order before computing");

    CLI::App* info = app.add_subcommand("info", "Describe an input document");
    info->add_option("--input", input, "ideal or complex document")->required();

    try {
        // CLI11 consumes the argument vector back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (decompose->parsed()) {
            const InputDocument doc = load_document(input, reverse);
            const MonomialIdeal& ideal = need_ideal(doc);
            const StanleyDecomposition result =
                target == "ideal" ? janet_ideal(ideal) : janet_complement(ideal);
            out << (format == "json" ? render_decomposition_json(result)
                                     : render_decomposition_text(result));
            return kOk;
        }
        if (partition->parsed()) {
            const InputDocument doc = load_document(input, reverse);
            const Partition result = janet_partition(need_complex(doc));
            if (format == "json") {
                out << render_partition_json(result);
                return kOk;
            }
            out << render_partition_text(result);
            if (want_r_vector) {
                out << "r-vector: " << render_r_vector(r_vector(result)) << "\n";
            }
            if (want_nice) {
                const NiceReport nice = check_nice(result);
                out << "nice: " << (nice.nice ? "true" : "false") << "\n";
                for (const Face& f : nice.non_facet_uppers) {
                    out << "non-facet upper: "
                        << render_face(f, result.n_vertices()) << "\n";
                }
                for (const Face& f : nice.uncovered_facets) {
                    out << "uncovered facet: "
                        << render_face(f, result.n_vertices()) << "\n";
                }
            }
            return kOk;
        }
        if (verify->parsed()) {
            const InputDocument doc = load_document(input, reverse);
            VerificationReport report;
            if (mode == "ideal" || mode == "complement") {
                const MonomialIdeal& ideal = need_ideal(doc);
                const int bound =
                    max_degree < 0 ? default_max_degree(ideal) : max_degree;
                report = mode == "ideal"
                             ? verify_ideal_cover(ideal, janet_ideal(ideal), bound)
                             : verify_complement_cover(ideal,
                                                       janet_complement(ideal), bound);
            } else if (mode == "partition") {
                const SimplicialComplex& complex = need_complex(doc);
                report = verify_partition(complex, janet_partition(complex));
            } else {
                report = verify_correspondence(need_complex(doc), max_degree);
            }
            return report_outcome(report, out);
        }
        // info
        const InputDocument doc = load_document(input, false);
        if (const auto* ideal = std::get_if<MonomialIdeal>(&doc)) {
            out << "kind: ideal\n"
                << "arity: " << ideal->arity() << "\n"
                << "generators: " << ideal->generators().size() << "\n"
                << "squarefree: " << (ideal->is_squarefree() ? "true" : "false")
                << "\n";
        } else {
            const auto& complex = std::get<SimplicialComplex>(doc);
            out << "kind: complex\n"
                << "vertices: " << complex.n_vertices() << "\n"
                << "facets: " << complex.facets().size() << "\n"
                << "faces: " << complex.all_faces().size() << "\n";
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace stanley::cli
