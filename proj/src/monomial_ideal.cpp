#include "stanley/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

MonomialIdeal::MonomialIdeal(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("arity must be non-negative");
}

MonomialIdeal::MonomialIdeal(int arity, std::vector<Monomial> generators)
    : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("arity must be non-negative");
    for (const Monomial& g : generators) {
        if (g.arity() != arity) {
            throw std::invalid_argument("generator arity does not match the ideal");
        }
    }
    generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(int arity) {
    return MonomialIdeal(arity, {Monomial(arity)});
}

bool MonomialIdeal::is_unit() const {
    return generators_.size() == 1 && generators_[0].is_unit();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.arity() != arity_) {
        throw std::invalid_argument("monomial arity does not match the ideal");
    }
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::slice(int k) const {
    if (arity_ < 1) throw std::invalid_argument("slice requires arity >= 1");
    if (k < 0) throw std::invalid_argument("slice level must be non-negative");
    std::vector<Monomial> cut;
    for (const Monomial& g : generators_) {
        if (g.exponent(arity_) <= k) cut.push_back(g.drop_last());
    }
    return MonomialIdeal(arity_ - 1, std::move(cut));
}

int MonomialIdeal::alpha() const {
    if (is_zero()) throw std::domain_error("alpha is undefined for the zero ideal");
    if (arity_ < 1) throw std::invalid_argument("alpha requires arity >= 1");
    int least = generators_[0].exponent(arity_);
    for (const Monomial& g : generators_) {
        least = std::min(least, g.exponent(arity_));
    }
    return least;
}

int MonomialIdeal::beta() const {
    if (is_zero()) throw std::domain_error("beta is undefined for the zero ideal");
    if (arity_ < 1) throw std::invalid_argument("beta requires arity >= 1");
    int greatest = 0;
    for (const Monomial& g : generators_) {
        greatest = std::max(greatest, g.exponent(arity_));
    }
    return greatest;
}

MonomialIdeal reverse_variables(const MonomialIdeal& ideal) {
    std::vector<Monomial> flipped;
    flipped.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        std::vector<int> exps = g.exponents();
        std::reverse(exps.begin(), exps.end());
        flipped.emplace_back(std::move(exps));
    }
    return MonomialIdeal(ideal.arity(), std::move(flipped));
}

}  // namespace stanley
