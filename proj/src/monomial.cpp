#include "stanley/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stanley {

Monomial::Monomial(int arity) {
    if (arity < 0) throw std::invalid_argument("arity must be non-negative");
    exponents_.assign(static_cast<std::size_t>(arity), 0);
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
    }
}

Monomial Monomial::variable(int index, int arity) {
    Monomial m(arity);
    if (index < 1 || index > arity) {
        throw std::invalid_argument("variable index out of range");
    }
    m.exponents_[static_cast<std::size_t>(index - 1)] = 1;
    return m;
}

int Monomial::exponent(int index) const {
    if (index < 1 || index > arity()) {
        throw std::invalid_argument("variable index out of range");
    }
    return exponents_[static_cast<std::size_t>(index - 1)];
}

int Monomial::total_degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](int e) { return e <= 1; });
}

IndexSet Monomial::support() const {
    std::vector<int> vars;
    for (int i = 0; i < arity(); ++i) {
        if (exponents_[static_cast<std::size_t>(i)] > 0) vars.push_back(i + 1);
    }
    return IndexSet(std::move(vars));
}

namespace {
void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("monomial arities do not match");
    }
}
}  // namespace

bool Monomial::divides(const Monomial& other) const {
    require_same_arity(*this, other);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_arity(*this, other);
    std::vector<int> out = exponents_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.exponents_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& other) const {
    require_same_arity(*this, other);
    if (!other.divides(*this)) {
        throw std::invalid_argument("quotient requires divisibility");
    }
    std::vector<int> out = exponents_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.exponents_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::drop_last() const {
    if (exponents_.empty()) {
        throw std::invalid_argument("cannot drop a variable at arity 0");
    }
    std::vector<int> out(exponents_.begin(), exponents_.end() - 1);
    return Monomial(std::move(out));
}

Monomial Monomial::append(int exponent) const {
    std::vector<int> out = exponents_;
    out.push_back(exponent);
    return Monomial(std::move(out));
}

Monomial Monomial::from_support(const IndexSet& support, int arity) {
    Monomial m(arity);
    for (int v : support) {
        if (v > arity) throw std::invalid_argument("support index out of range");
        m.exponents_[static_cast<std::size_t>(v - 1)] = 1;
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto cmp = a.total_degree() <=> b.total_degree(); cmp != 0) return cmp;
    return a.exponents_ <=> b.exponents_;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    for (std::size_t i = 1; i < monomials.size(); ++i) {
        if (monomials[i].arity() != monomials[0].arity()) {
            throw std::invalid_argument("monomial arities do not match");
        }
    }
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    // Ascending degree order means any divisor of a later element has already
    // been kept, so one pass suffices.
    std::vector<Monomial> kept;
    for (const Monomial& m : monomials) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

}  // namespace stanley
