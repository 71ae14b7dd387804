#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stanley/simplicial_complex.hpp"

using namespace stanley;

namespace {
Monomial mono(std::vector<int> exponents) { return Monomial(std::move(exponents)); }
}  // namespace

TEST_CASE("complexes keep only maximal faces") {
    SimplicialComplex c(3, {Face{1}, Face{1, 2}, Face{3}, Face{1, 2}});
    CHECK(c.facets() == std::vector<Face>{Face{1, 2}, Face{3}});
    CHECK_FALSE(c.is_void());
    CHECK_THROWS_AS(SimplicialComplex(3, {Face{4}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(-1), std::invalid_argument);
}

TEST_CASE("the void complex and the empty-face complex differ") {
    SimplicialComplex void_complex(3);
    SimplicialComplex point(3, {Face{}});
    CHECK(void_complex.is_void());
    CHECK_FALSE(point.is_void());
    CHECK_FALSE(void_complex.has_face(Face{}));
    CHECK(point.has_face(Face{}));
    CHECK(void_complex.all_faces().empty());
    CHECK(point.all_faces() == std::vector<Face>{Face{}});
    CHECK(void_complex == SimplicialComplex(3, {}));
}

TEST_CASE("face membership and enumeration") {
    SimplicialComplex c(3, {Face{1, 2}, Face{3}});
    CHECK(c.has_face(Face{1}));
    CHECK(c.has_face(Face{1, 2}));
    CHECK(c.has_face(Face{}));
    CHECK_FALSE(c.has_face(Face{1, 3}));
    CHECK(c.all_faces() ==
          std::vector<Face>{Face{}, Face{1}, Face{1, 2}, Face{2}, Face{3}});

    SimplicialComplex full(3, {Face{1, 2, 3}});
    CHECK(full.is_full_simplex());
    CHECK(full.all_faces().size() == 8);
    CHECK_FALSE(c.is_full_simplex());
}

TEST_CASE("deletion and link split off the last vertex") {
    SimplicialComplex c(3, {Face{1, 3}, Face{2}});
    CHECK(c.deletion() == SimplicialComplex(2, {Face{1}, Face{2}}));
    CHECK(c.link() == SimplicialComplex(2, {Face{1}}));

    // a complex not touching the last vertex has a void link
    SimplicialComplex flat(2, {Face{1}});
    CHECK(flat.link() == SimplicialComplex(1));
    CHECK(flat.deletion() == SimplicialComplex(1, {Face{1}}));

    // the link of a lone vertex is the empty face
    SimplicialComplex lone(2, {Face{2}});
    CHECK(lone.link() == SimplicialComplex(1, {Face{}}));

    CHECK_THROWS_AS(SimplicialComplex(0, {Face{}}).deletion(),
                    std::invalid_argument);
}

TEST_CASE("minimal non-faces generate the face ideal") {
    SimplicialComplex c(3, {Face{1, 3}, Face{2}});
    CHECK(stanley_reisner(c) ==
          MonomialIdeal(3, {mono({1, 1, 0}), mono({0, 1, 1})}));

    CHECK(stanley_reisner(SimplicialComplex(3, {Face{1, 2, 3}})) ==
          MonomialIdeal::zero(3));
    CHECK(stanley_reisner(SimplicialComplex(2, {Face{}})) ==
          MonomialIdeal(2, {mono({1, 0}), mono({0, 1})}));
    CHECK(stanley_reisner(SimplicialComplex(0, {Face{}})) ==
          MonomialIdeal::zero(0));
    CHECK_THROWS_AS(stanley_reisner(SimplicialComplex(3)), std::invalid_argument);
}

TEST_CASE("squarefree monomials outside the face ideal are the faces") {
    SimplicialComplex c(4, {Face{1, 2, 4}, Face{1, 3, 4}, Face{2, 3}});
    MonomialIdeal ideal = stanley_reisner(c);
    for (const Face& f : c.all_faces()) {
        CHECK_FALSE(ideal.contains(Monomial::from_support(f, 4)));
    }
    CHECK(ideal.contains(Monomial::from_support(Face{1, 2, 3}, 4)));
    CHECK(ideal.is_squarefree());
}

TEST_CASE("reversing vertex labels mirrors the facets") {
    SimplicialComplex c(3, {Face{1, 2}, Face{3}});
    CHECK(reverse_vertices(c) == SimplicialComplex(3, {Face{2, 3}, Face{1}}));
    CHECK(reverse_vertices(reverse_vertices(c)) == c);
    CHECK(reverse_vertices(SimplicialComplex(2)).is_void());
}
