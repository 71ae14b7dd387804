#pragma once

#include <compare>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/simplicial_complex.hpp"

namespace stanley {

/// The interval [F, G] = {H : F ⊆ H ⊆ G} in the face lattice.
class Interval {
public:
    Interval(Face lower, Face upper);

    const Face& lower() const { return lower_; }
    const Face& upper() const { return upper_; }

    /// |G| - |F|, the dimension of the Boolean lattice the interval spans.
    int rank() const { return static_cast<int>(upper_.size() - lower_.size()); }

    bool contains(const Face& face) const;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

private:
    Face lower_;
    Face upper_;
};

/// A presentation of a complex's face set as a disjoint union of intervals,
/// kept in canonical order together with the complex it partitions.
class Partition {
public:
    Partition(SimplicialComplex source, std::vector<Interval> intervals);

    const SimplicialComplex& source() const { return source_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    int n_vertices() const { return source_.n_vertices(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    SimplicialComplex source_;
    std::vector<Interval> intervals_;
};

/// Partition of the complex's faces by recursion on the last vertex: split
/// into the deletion D0 and link D1 of vertex n, partition both, and merge.
/// Intervals common to both partitions are emitted once as [F, G ∪ {n}];
/// remaining D0 intervals are kept unchanged and remaining D1 intervals get
/// n adjoined to both endpoints. A void link contributes nothing. Base case:
/// the complex {∅} on 0 vertices yields the single interval [∅, ∅]. Throws
/// std::invalid_argument on the void complex, which has no partition.
Partition janet_partition(const SimplicialComplex& complex);

/// Interval counts by rank: entry r is the number of intervals of rank r,
/// up to the largest rank present.
std::vector<int> r_vector(const Partition& partition);

/// Outcome of the facet test on a partition: the partition is nice when its
/// upper endpoints are exactly the facets of the source complex.
struct NiceReport {
    bool nice = false;
    std::vector<Face> non_facet_uppers;   // upper endpoints that are not facets
    std::vector<Face> uncovered_facets;   // facets missing from the uppers
};

NiceReport check_nice(const Partition& partition);
bool is_nice(const Partition& partition);

/// The complement-side Stanley decomposition a partition induces through the
/// Stanley-Reisner ideal of its source: interval [F, G] becomes the space
/// x_F · K[G].
StanleyDecomposition partition_to_spaces(const Partition& partition);

}  // namespace stanley
