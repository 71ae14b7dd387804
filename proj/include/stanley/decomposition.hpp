#pragma once

#include <compare>
#include <vector>

#include "stanley/index_set.hpp"
#include "stanley/monomial.hpp"
#include "stanley/monomial_ideal.hpp"

namespace stanley {

/// A Stanley space u · K[Z]: all monomials u·m with the support of m inside
/// the variable set Z. It is squarefree when u is squarefree and supp(u) ⊆ Z.
class StanleySpace {
public:
    StanleySpace(Monomial coefficient, IndexSet variables);

    const Monomial& coefficient() const { return coefficient_; }
    const IndexSet& variables() const { return variables_; }
    int arity() const { return coefficient_.arity(); }

    /// Membership: u divides m and supp(m/u) ⊆ Z.
    bool contains(const Monomial& m) const;

    bool is_squarefree() const;

    friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
    friend std::strong_ordering operator<=>(const StanleySpace& a, const StanleySpace& b);

private:
    Monomial coefficient_;
    IndexSet variables_;
};

/// What a decomposition's spaces cover: the monomials of the source ideal, or
/// the monomials outside it.
enum class Target { Ideal, Complement };

/// A finite list of Stanley spaces presenting either a monomial ideal or its
/// complement as a disjoint union. Spaces are kept in canonical order, so
/// equal decompositions compare equal as values.
class StanleyDecomposition {
public:
    StanleyDecomposition(Target target, MonomialIdeal source,
                         std::vector<StanleySpace> spaces);

    Target target() const { return target_; }
    const MonomialIdeal& source() const { return source_; }
    const std::vector<StanleySpace>& spaces() const { return spaces_; }
    int arity() const { return source_.arity(); }

    /// True iff every space is squarefree.
    bool is_squarefree() const;

    /// min |Z| over the spaces. Throws std::domain_error on an empty
    /// decomposition (the minimum over nothing is undefined).
    int sdepth() const;

    friend bool operator==(const StanleyDecomposition&, const StanleyDecomposition&) = default;

private:
    Target target_;
    MonomialIdeal source_;
    std::vector<StanleySpace> spaces_;
};

/// Stanley decomposition of the ideal itself, by recursion on the last
/// variable: with a = alpha(I) and b = beta(I), level k in [a, b) contributes
/// the decomposition of slice(I, k) lifted by x_n^k, and level b contributes
/// the decomposition of slice(I, b) lifted by x_n^b with x_n adjoined to each
/// variable set. The zero ideal yields no spaces; at arity 0 the unit ideal
/// yields 1·K[∅].
StanleyDecomposition janet_ideal(const MonomialIdeal& ideal);

/// Stanley decomposition of the complement of the ideal, by the matching
/// recursion on slices k = 0..beta. A space common to the complements of
/// consecutive slices k = a..beta is emitted once as u·x_n^a · K[Z ∪ {n}]
/// (its levels telescope); every other level-k space is lifted by x_n^k
/// unchanged. The zero ideal yields 1·K[{1..n}]; the unit ideal yields
/// nothing.
StanleyDecomposition janet_complement(const MonomialIdeal& ideal);

}  // namespace stanley
