#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stanley/index_set.hpp"

namespace stanley {

/// A monomial in variables x1..xn, stored as its exponent vector. The arity n
/// is the vector length; variable xi corresponds to position i-1. Exponents
/// are non-negative machine integers; overflow is out of scope.
///
/// Monomials are totally ordered by graded lexicographic order (total degree
/// first, then the exponent vector lexicographically), which fixes the
/// canonical order used everywhere for output and storage.
class Monomial {
public:
    /// The unit monomial (exponent vector all zero) of the given arity.
    explicit Monomial(int arity);

    /// Throws std::invalid_argument on negative exponents.
    explicit Monomial(std::vector<int> exponents);

    /// The variable xi as a monomial of the given arity (1 <= index <= arity).
    static Monomial variable(int index, int arity);

    int arity() const { return static_cast<int>(exponents_.size()); }
    int exponent(int index) const;  // 1-based variable index
    const std::vector<int>& exponents() const { return exponents_; }

    int total_degree() const;
    bool is_unit() const { return total_degree() == 0; }

    /// True iff every exponent is 0 or 1.
    bool is_squarefree() const;

    /// The set of variables with positive exponent.
    IndexSet support() const;

    bool divides(const Monomial& other) const;

    /// Componentwise product. Arities must match.
    Monomial operator*(const Monomial& other) const;

    /// Componentwise quotient; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    /// This monomial with the exponent of the last variable removed
    /// (arity decreases by one). Requires arity >= 1.
    Monomial drop_last() const;

    /// This monomial with one exponent appended for a new last variable.
    Monomial append(int exponent) const;

    /// The squarefree monomial whose support is the given set.
    static Monomial from_support(const IndexSet& support, int arity);

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exponents_;
};

/// Removes from `monomials` every element divisible by another element
/// (duplicates collapse to one copy) and returns the survivors in canonical
/// order. All monomials must share one arity. This is the minimal generating
/// set of the ideal the input generates.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

}  // namespace stanley
