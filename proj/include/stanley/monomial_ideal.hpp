#pragma once

#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// A monomial ideal in K[x1..xn], represented by its unique minimal
/// generating set, stored in canonical (graded lexicographic) order. The zero
/// ideal has no generators; the unit ideal is generated by 1. Values are
/// immutable after construction.
class MonomialIdeal {
public:
    /// The zero ideal (no generators) of the given arity.
    explicit MonomialIdeal(int arity);

    /// The ideal generated by the given monomials; the generator list is
    /// minimalized and canonically ordered. All generators must have the
    /// stated arity.
    MonomialIdeal(int arity, std::vector<Monomial> generators);

    static MonomialIdeal zero(int arity) { return MonomialIdeal(arity); }
    static MonomialIdeal unit(int arity);

    int arity() const { return arity_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const;

    /// True iff every minimal generator is squarefree.
    bool is_squarefree() const;

    /// Membership: some generator divides m. Arity must match.
    bool contains(const Monomial& m) const;

    /// The ideal I_k with I ∩ x_n^k · K[x1..x_{n-1}] = x_n^k · I_k: generated
    /// by the generators whose x_n-exponent is at most k, each with that
    /// exponent deleted. Requires arity >= 1.
    MonomialIdeal slice(int k) const;

    /// Smallest k with slice(k) nonzero; equals the least x_n-exponent among
    /// the generators. Requires a nonzero ideal of arity >= 1.
    int alpha() const;

    /// Smallest k from which the slices stabilize; equals the largest
    /// x_n-exponent among the generators. Requires a nonzero ideal of
    /// arity >= 1.
    int beta() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int arity_ = 0;
    std::vector<Monomial> generators_;
};

/// The same ideal with the variable order reversed (xi <-> x_{n+1-i}).
MonomialIdeal reverse_variables(const MonomialIdeal& ideal);

}  // namespace stanley
