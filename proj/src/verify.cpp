#include "stanley/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stanley/text_format.hpp"

namespace stanley {

int default_max_degree(const MonomialIdeal& ideal) {
    int max_gen_degree = 0;
    for (const Monomial& g : ideal.generators()) {
        max_gen_degree = std::max(max_gen_degree, g.total_degree());
    }
    return max_gen_degree + ideal.arity() + 1;
}

namespace {

// Advances e through all exponent vectors of total degree <= cap, odometer
// style. Returns false after the last vector.
bool next_exponents(std::vector<int>& e, int cap) {
    int sum = std::accumulate(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (sum < cap) {
            ++e[i];
            return true;
        }
        sum -= e[i];
        e[i] = 0;
    }
    return false;
}

// Space rows and generator rows are raw exponent tables so the enumeration
// loop runs on plain integer compares, independent of the engine code paths.
VerificationReport cover_check(const MonomialIdeal& ideal,
                               const StanleyDecomposition& decomposition,
                               int max_degree, bool members_covered) {
    const Target wanted = members_covered ? Target::Ideal : Target::Complement;
    if (decomposition.target() != wanted) {
        throw std::invalid_argument("decomposition target does not match the check");
    }
    if (decomposition.source() != ideal) {
        throw std::invalid_argument("decomposition source does not match the ideal");
    }
    if (max_degree < 0) {
        throw std::invalid_argument("max_degree must be non-negative");
    }

    const int n = ideal.arity();
    std::vector<const std::vector<int>*> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) gens.push_back(&g.exponents());

    struct SpaceRow {
        const std::vector<int>* coeff;
        std::vector<char> in_z;
    };
    std::vector<SpaceRow> rows;
    rows.reserve(decomposition.spaces().size());
    for (const StanleySpace& s : decomposition.spaces()) {
        SpaceRow row{&s.coefficient().exponents(),
                     std::vector<char>(static_cast<std::size_t>(n), 0)};
        for (int v : s.variables()) row.in_z[static_cast<std::size_t>(v - 1)] = 1;
        rows.push_back(std::move(row));
    }

    VerificationReport report;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    do {
        bool in_ideal = false;
        for (const auto* g : gens) {
            bool divides = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if ((*g)[i] > e[i]) {
                    divides = false;
                    break;
                }
            }
            if (divides) {
                in_ideal = true;
                break;
            }
        }
        long covered = 0;
        for (const SpaceRow& row : rows) {
            bool inside = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                const int u = (*row.coeff)[i];
                if (u > e[i] || (e[i] > u && !row.in_z[i])) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++covered;
        }
        const long expected = (in_ideal == members_covered) ? 1 : 0;
        if (covered != expected) {
            report.failures.push_back(
                {render_monomial(Monomial(e)), covered, expected});
        }
        ++report.checked_count;
    } while (next_exponents(e, max_degree));
    return report;
}

}  // namespace

VerificationReport verify_ideal_cover(const MonomialIdeal& ideal,
                                      const StanleyDecomposition& decomposition,
                                      int max_degree) {
    return cover_check(ideal, decomposition, max_degree, true);
}

VerificationReport verify_complement_cover(const MonomialIdeal& ideal,
                                           const StanleyDecomposition& decomposition,
                                           int max_degree) {
    return cover_check(ideal, decomposition, max_degree, false);
}

VerificationReport verify_partition(const SimplicialComplex& complex,
                                    const Partition& partition) {
    VerificationReport report;
    const int n = complex.n_vertices();
    for (const Interval& iv : partition.intervals()) {
        if (!complex.has_face(iv.lower())) {
            report.failures.push_back(
                {render_face(iv.lower(), n) + " (lower endpoint) is not a face", 0, 1});
        }
        if (!complex.has_face(iv.upper())) {
            report.failures.push_back(
                {render_face(iv.upper(), n) + " (upper endpoint) is not a face", 0, 1});
        }
    }
    for (const Face& face : complex.all_faces()) {
        long covered = 0;
        for (const Interval& iv : partition.intervals()) {
            if (iv.contains(face)) ++covered;
        }
        if (covered != 1) {
            report.failures.push_back({render_face(face, n), covered, 1});
        }
        ++report.checked_count;
    }
    return report;
}

VerificationReport verify_correspondence(const SimplicialComplex& complex,
                                         int max_degree) {
    const Partition partition = janet_partition(complex);
    const StanleyDecomposition from_partition = partition_to_spaces(partition);
    const MonomialIdeal ideal = stanley_reisner(complex);
    const StanleyDecomposition from_ideal = janet_complement(ideal);
    if (max_degree < 0) max_degree = default_max_degree(ideal);

    VerificationReport report;
    const auto& a = from_partition.spaces();
    const auto& b = from_ideal.spaces();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
            report.failures.push_back(
                {render_space(*ia) + " only from the partition", 0, 1});
            ++ia;
        } else if (ia == a.end() || *ib < *ia) {
            report.failures.push_back(
                {render_space(*ib) + " only from the complement engine", 1, 0});
            ++ib;
        } else {
            ++ia;
            ++ib;
        }
        ++report.checked_count;
    }

    VerificationReport cover = verify_complement_cover(ideal, from_ideal, max_degree);
    report.checked_count += cover.checked_count;
    report.failures.insert(report.failures.end(), cover.failures.begin(),
                           cover.failures.end());
    return report;
}

}  // namespace stanley
