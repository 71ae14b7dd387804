#pragma once

#include <vector>

#include "stanley/index_set.hpp"
#include "stanley/monomial_ideal.hpp"

namespace stanley {

using Face = IndexSet;

/// A simplicial complex on vertices {1..n}, represented by its facets
/// (inclusion-maximal faces) in canonical order. The void complex has no
/// faces at all; it is distinct from the complex {∅} whose only face is the
/// empty set.
class SimplicialComplex {
public:
    /// The void complex on n vertices.
    explicit SimplicialComplex(int n_vertices);

    /// The complex generated by the given faces: non-maximal and duplicate
    /// candidates are dropped. Vertices must lie in 1..n_vertices.
    SimplicialComplex(int n_vertices, std::vector<Face> facets);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }

    /// True iff the complex is the full simplex on {1..n}.
    bool is_full_simplex() const;

    /// Membership: the face is contained in some facet. The void complex has
    /// no faces, not even the empty one.
    bool has_face(const Face& face) const;

    /// Every face, in canonical order. The void complex has none.
    std::vector<Face> all_faces() const;

    /// The subcomplex of faces not containing vertex n, on vertices
    /// {1..n-1}. Requires n >= 1.
    SimplicialComplex deletion() const;

    /// The link of vertex n: faces F with F ∪ {n} in the complex, on
    /// vertices {1..n-1}. Void iff no face contains n. Requires n >= 1.
    SimplicialComplex link() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_vertices_ = 0;
    std::vector<Face> facets_;
};

/// The Stanley-Reisner ideal: generated by the squarefree monomials of the
/// minimal non-faces. Throws std::invalid_argument on the void complex.
MonomialIdeal stanley_reisner(const SimplicialComplex& complex);

/// The same complex with the vertex labels reversed (v <-> n+1-v).
SimplicialComplex reverse_vertices(const SimplicialComplex& complex);

}  // namespace stanley
