#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stanley/monomial_ideal.hpp"

using namespace stanley;

namespace {
Monomial mono(std::vector<int> exponents) { return Monomial(std::move(exponents)); }
}  // namespace

TEST_CASE("ideals minimalize their generators on construction") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({1, 1, 1}), mono({0, 1, 1})});
    CHECK(ideal.generators() ==
          std::vector<Monomial>{mono({0, 1, 1}), mono({1, 1, 0})});
    CHECK(ideal.arity() == 3);
    CHECK_THROWS_AS(MonomialIdeal(3, {mono({1, 1})}), std::invalid_argument);
}

TEST_CASE("zero and unit ideals") {
    CHECK(MonomialIdeal::zero(3).is_zero());
    CHECK(MonomialIdeal::zero(3).generators().empty());
    CHECK(MonomialIdeal::unit(3).is_unit());
    CHECK(MonomialIdeal::unit(3).generators() == std::vector<Monomial>{Monomial(3)});
    CHECK_FALSE(MonomialIdeal::unit(3).is_zero());
    CHECK(MonomialIdeal::unit(0).is_unit());
    // adding 1 to any generating set collapses it to the unit ideal
    CHECK(MonomialIdeal(2, {mono({1, 1}), Monomial(2)}) == MonomialIdeal::unit(2));
}

TEST_CASE("membership is divisibility by some generator") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 1})});
    CHECK(ideal.contains(mono({1, 1, 0})));
    CHECK(ideal.contains(mono({1, 1, 1})));
    CHECK(ideal.contains(mono({0, 2, 1})));
    CHECK_FALSE(ideal.contains(mono({1, 0, 1})));
    CHECK_FALSE(ideal.contains(Monomial(3)));
    CHECK_FALSE(MonomialIdeal::zero(3).contains(mono({1, 0, 0})));
    CHECK(MonomialIdeal::unit(3).contains(Monomial(3)));
    CHECK_THROWS_AS(ideal.contains(Monomial(2)), std::invalid_argument);
}

TEST_CASE("squarefree means every minimal generator is squarefree") {
    CHECK(MonomialIdeal(3, {mono({1, 1, 0}), mono({0, 1, 1})}).is_squarefree());
    CHECK_FALSE(MonomialIdeal(3, {mono({0, 1, 2})}).is_squarefree());
    CHECK(MonomialIdeal::zero(3).is_squarefree());
    CHECK(MonomialIdeal::unit(3).is_squarefree());
}

TEST_CASE("slices drop the last variable at bounded exponent") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 2})});

    CHECK(ideal.slice(0) == MonomialIdeal(2, {mono({1, 1})}));
    CHECK(ideal.slice(1) == MonomialIdeal(2, {mono({1, 1})}));
    // from level 2 on, x2 enters and absorbs x1*x2
    CHECK(ideal.slice(2) == MonomialIdeal(2, {mono({0, 1})}));
    CHECK(ideal.slice(7) == ideal.slice(2));

    MonomialIdeal pair(3, {mono({1, 0, 1}), mono({0, 1, 1})});
    CHECK(pair.slice(0) == MonomialIdeal::zero(2));
    CHECK(pair.slice(1) == MonomialIdeal(2, {mono({1, 0}), mono({0, 1})}));

    CHECK_THROWS_AS(ideal.slice(-1), std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal::unit(0).slice(0), std::invalid_argument);
}

TEST_CASE("alpha and beta bracket the last variable's exponents") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 2})});
    CHECK(ideal.alpha() == 0);
    CHECK(ideal.beta() == 2);

    MonomialIdeal pair(3, {mono({1, 0, 1}), mono({0, 1, 1})});
    CHECK(pair.alpha() == 1);
    CHECK(pair.beta() == 1);

    CHECK(MonomialIdeal::unit(3).alpha() == 0);
    CHECK(MonomialIdeal::unit(3).beta() == 0);

    CHECK_THROWS_AS(MonomialIdeal::zero(3).alpha(), std::domain_error);
    CHECK_THROWS_AS(MonomialIdeal::zero(3).beta(), std::domain_error);
    CHECK_THROWS_AS(MonomialIdeal::unit(0).alpha(), std::invalid_argument);
}

TEST_CASE("beta is the exact stabilization point of the slice chain") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 2})});
    int b = ideal.beta();
    CHECK(ideal.slice(b) == ideal.slice(b + 1));
    CHECK(ideal.slice(b - 1) != ideal.slice(b));
}

TEST_CASE("reversing the variable order reverses exponent vectors") {
    MonomialIdeal ideal(3, {mono({1, 1, 0}), mono({0, 1, 2})});
    MonomialIdeal reversed = reverse_variables(ideal);
    CHECK(reversed == MonomialIdeal(3, {mono({0, 1, 1}), mono({2, 1, 0})}));
    CHECK(reverse_variables(reversed) == ideal);
    CHECK(reverse_variables(MonomialIdeal::zero(4)) == MonomialIdeal::zero(4));
}
