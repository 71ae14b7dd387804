#include "stanley/partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stanley {

Interval::Interval(Face lower, Face upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (!lower_.is_subset_of(upper_)) {
        throw std::invalid_argument("interval endpoints must be nested");
    }
}

bool Interval::contains(const Face& face) const {
    return lower_.is_subset_of(face) && face.is_subset_of(upper_);
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto cmp = a.lower_ <=> b.lower_; cmp != 0) return cmp;
    return a.upper_ <=> b.upper_;
}

Partition::Partition(SimplicialComplex source, std::vector<Interval> intervals)
    : source_(std::move(source)), intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end());
}

namespace {

std::vector<Interval> partition_intervals(const SimplicialComplex& complex) {
    if (complex.is_void()) {
        throw std::invalid_argument("the void complex has no partition");
    }
    const int n = complex.n_vertices();
    if (n == 0) return {Interval(Face{}, Face{})};

    std::vector<Interval> p0 = partition_intervals(complex.deletion());
    const SimplicialComplex below = complex.link();
    if (below.is_void()) return p0;
    std::vector<Interval> p1 = partition_intervals(below);

    // Both lists arrive sorted. An interval present in both branches covers
    // matching face sets with and without n, so the pair fuses into one
    // interval reaching up to G ∪ {n}.
    std::vector<Interval> out;
    out.reserve(p0.size() + p1.size());
    auto i0 = p0.begin();
    auto i1 = p1.begin();
    while (i0 != p0.end() || i1 != p1.end()) {
        if (i1 == p1.end() || (i0 != p0.end() && *i0 < *i1)) {
            out.push_back(*i0++);
        } else if (i0 == p0.end() || *i1 < *i0) {
            out.emplace_back(i1->lower().with(n), i1->upper().with(n));
            ++i1;
        } else {
            out.emplace_back(i0->lower(), i0->upper().with(n));
            ++i0;
            ++i1;
        }
    }
    // Adjoining n reshuffles endpoint order; later levels walk sorted lists.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Partition janet_partition(const SimplicialComplex& complex) {
    return Partition(complex, partition_intervals(complex));
}

std::vector<int> r_vector(const Partition& partition) {
    std::vector<int> counts;
    for (const Interval& iv : partition.intervals()) {
        const std::size_t r = static_cast<std::size_t>(iv.rank());
        if (counts.size() <= r) counts.resize(r + 1, 0);
        ++counts[r];
    }
    return counts;
}

NiceReport check_nice(const Partition& partition) {
    NiceReport report;
    const std::vector<Face>& facets = partition.source().facets();
    std::set<Face> facet_set(facets.begin(), facets.end());
    std::set<Face> uppers;
    for (const Interval& iv : partition.intervals()) {
        uppers.insert(iv.upper());
        if (!facet_set.contains(iv.upper())) {
            report.non_facet_uppers.push_back(iv.upper());
        }
    }
    for (const Face& f : facets) {
        if (!uppers.contains(f)) report.uncovered_facets.push_back(f);
    }
    std::sort(report.non_facet_uppers.begin(), report.non_facet_uppers.end());
    report.non_facet_uppers.erase(
        std::unique(report.non_facet_uppers.begin(), report.non_facet_uppers.end()),
        report.non_facet_uppers.end());
    report.nice = report.non_facet_uppers.empty() && report.uncovered_facets.empty();
    return report;
}

bool is_nice(const Partition& partition) { return check_nice(partition).nice; }

StanleyDecomposition partition_to_spaces(const Partition& partition) {
    const int n = partition.n_vertices();
    std::vector<StanleySpace> spaces;
    spaces.reserve(partition.intervals().size());
    for (const Interval& iv : partition.intervals()) {
        spaces.emplace_back(Monomial::from_support(iv.lower(), n), iv.upper());
    }
    return StanleyDecomposition(Target::Complement,
                                stanley_reisner(partition.source()),
                                std::move(spaces));
}

}  // namespace stanley
