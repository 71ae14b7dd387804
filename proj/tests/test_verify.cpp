#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stanley/random_instances.hpp"
#include "stanley/verify.hpp"

using namespace stanley;

namespace {
Monomial mono(std::vector<int> exponents) { return Monomial(std::move(exponents)); }
}  // namespace

TEST_CASE("default truncation bound") {
    CHECK(default_max_degree(MonomialIdeal(3, {mono({1, 1, 0}), mono({0, 1, 1})})) == 6);
    CHECK(default_max_degree(MonomialIdeal::zero(3)) == 4);
    CHECK(default_max_degree(MonomialIdeal::unit(2)) == 3);
    CHECK(default_max_degree(MonomialIdeal(2, {mono({3, 2})})) == 8);
}

TEST_CASE("cover checks enumerate all monomials up to the bound") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 1})});
    VerificationReport r = verify_ideal_cover(ideal, janet_ideal(ideal), 6);
    CHECK(r.ok());
    CHECK(r.checked_count == 84);  // C(9,3) exponent vectors of degree <= 6

    MonomialIdeal principal(2, {mono({1, 1})});
    r = verify_complement_cover(principal, janet_complement(principal), 8);
    CHECK(r.ok());
    CHECK(r.checked_count == 45);  // C(10,2)

    // arity 0 has exactly one monomial
    r = verify_complement_cover(MonomialIdeal::zero(0),
                                janet_complement(MonomialIdeal::zero(0)), 3);
    CHECK(r.ok());
    CHECK(r.checked_count == 1);
}

TEST_CASE("cover checks reject mismatched inputs") {
    MonomialIdeal ideal(2, {mono({1, 1})});
    StanleyDecomposition of_ideal = janet_ideal(ideal);
    StanleyDecomposition of_complement = janet_complement(ideal);

    CHECK_THROWS_AS(verify_ideal_cover(ideal, of_complement, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_complement_cover(ideal, of_ideal, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_ideal_cover(MonomialIdeal(2, {mono({2, 0})}), of_ideal, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_ideal_cover(ideal, of_ideal, -1), std::invalid_argument);
}

TEST_CASE("cover checks catch spaces leaking into the ideal") {
    MonomialIdeal ideal(1, {mono({1})});
    // claims the whole line is the complement; everything from x1 up is wrong
    StanleyDecomposition bogus(Target::Complement, ideal,
                               {StanleySpace(Monomial(1), IndexSet{1})});
    VerificationReport r = verify_complement_cover(ideal, bogus, 2);
    CHECK_FALSE(r.ok());
    CHECK(r.checked_count == 3);
    REQUIRE(r.failures.size() == 2);
    CHECK(r.failures[0].observed == 1);
    CHECK(r.failures[0].expected == 0);
}

TEST_CASE("cover checks catch overlaps and gaps") {
    MonomialIdeal ideal(2, {mono({1, 0})});
    // x1*K[x1,x2] and x1^2*K[x1,x2] overlap from x1^2 on
    StanleyDecomposition overlapping(
        Target::Ideal, ideal,
        {StanleySpace(mono({1, 0}), IndexSet{1, 2}),
         StanleySpace(mono({2, 0}), IndexSet{1, 2})});
    VerificationReport r = verify_ideal_cover(ideal, overlapping, 3);
    CHECK_FALSE(r.ok());
    bool saw_double = false;
    for (const Failure& f : r.failures) saw_double = saw_double || f.observed == 2;
    CHECK(saw_double);

    // missing the x2 axis entirely
    StanleyDecomposition gappy(Target::Complement, ideal,
                               {StanleySpace(Monomial(2), IndexSet{})});
    r = verify_complement_cover(ideal, gappy, 3);
    CHECK_FALSE(r.ok());
    CHECK(r.failures.front().observed == 0);
    CHECK(r.failures.front().expected == 1);
    CHECK_FALSE(r.failures.front().witness.empty());
}

TEST_CASE("partition check counts faces once each") {
    SimplicialComplex c(3, {Face{1, 3}, Face{2}});
    VerificationReport r = verify_partition(c, janet_partition(c));
    CHECK(r.ok());
    CHECK(r.checked_count == 5);
}

TEST_CASE("partition check reports endpoint and coverage defects") {
    SimplicialComplex two_points(2, {Face{1}, Face{2}});
    // upper endpoint {1,2} is not a face, and faces {} and {2} are uncovered
    Partition bogus(two_points, {Interval(Face{1}, Face{1, 2})});
    VerificationReport r = verify_partition(two_points, bogus);
    CHECK_FALSE(r.ok());
    CHECK(r.checked_count == 3);
    CHECK(r.failures.size() == 3);

    SimplicialComplex full(2, {Face{1, 2}});
    Partition doubled(full, {Interval(Face{}, Face{1, 2}), Interval(Face{1}, Face{1})});
    r = verify_partition(full, doubled);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].observed == 2);
}

TEST_CASE("correspondence check agrees space by space") {
    SimplicialComplex c(3, {Face{1, 3}, Face{2}});
    VerificationReport r = verify_correspondence(c);
    CHECK(r.ok());
    // 2 shared spaces + C(9,3) monomials at the default bound of 6
    CHECK(r.checked_count == 86);

    r = verify_correspondence(c, 3);
    CHECK(r.ok());
    CHECK(r.checked_count == 22);  // 2 + C(6,3)

    CHECK(verify_correspondence(SimplicialComplex(0, {Face{}})).ok());
    CHECK(verify_correspondence(SimplicialComplex(4, {Face{1, 2, 3, 4}})).ok());
}

TEST_CASE("random ideals are seed-deterministic and respect their bounds") {
    MonomialIdeal a = random_ideal(42, 4, 3, 5);
    CHECK(a == random_ideal(42, 4, 3, 5));
    CHECK(a.arity() == 4);
    CHECK(a.generators().size() <= 5);
    for (const Monomial& g : a.generators()) CHECK(g.total_degree() <= 3);

    CHECK(random_ideal(7, 3, 2, 0).is_zero());
    CHECK(random_ideal(7, 3, 2, 4, true).is_squarefree());
    CHECK(random_ideal(11, 2, 0, 3).is_unit() ==
          !random_ideal(11, 2, 0, 3).is_zero());
    CHECK_THROWS_AS(random_ideal(1, -1, 2, 2), std::invalid_argument);
}

TEST_CASE("random complexes are seed-deterministic and nonvoid") {
    SimplicialComplex a = random_complex(42, 6, 8);
    CHECK(a == random_complex(42, 6, 8));
    CHECK_FALSE(a.is_void());
    CHECK(a.n_vertices() == 6);
    CHECK(a.facets().size() <= 8);

    CHECK_FALSE(random_complex(3, 0, 1).is_void());
    CHECK_THROWS_AS(random_complex(3, 65, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_complex(3, 4, 0), std::invalid_argument);
}
