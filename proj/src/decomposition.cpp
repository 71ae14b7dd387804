#include "stanley/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace stanley {

StanleySpace::StanleySpace(Monomial coefficient, IndexSet variables)
    : coefficient_(std::move(coefficient)), variables_(std::move(variables)) {
    for (int v : variables_) {
        if (v > coefficient_.arity()) {
            throw std::invalid_argument("variable set exceeds the space's arity");
        }
    }
}

bool StanleySpace::contains(const Monomial& m) const {
    if (!coefficient_.divides(m)) return false;
    for (int i = 1; i <= m.arity(); ++i) {
        if (m.exponent(i) > coefficient_.exponent(i) && !variables_.contains(i)) {
            return false;
        }
    }
    return true;
}

bool StanleySpace::is_squarefree() const {
    return coefficient_.is_squarefree() &&
           coefficient_.support().is_subset_of(variables_);
}

std::strong_ordering operator<=>(const StanleySpace& a, const StanleySpace& b) {
    if (auto cmp = a.coefficient_ <=> b.coefficient_; cmp != 0) return cmp;
    return a.variables_ <=> b.variables_;
}

StanleyDecomposition::StanleyDecomposition(Target target, MonomialIdeal source,
                                           std::vector<StanleySpace> spaces)
    : target_(target), source_(std::move(source)), spaces_(std::move(spaces)) {
    for (const StanleySpace& s : spaces_) {
        if (s.arity() != source_.arity()) {
            throw std::invalid_argument("space arity does not match the source ideal");
        }
    }
    std::sort(spaces_.begin(), spaces_.end());
}

bool StanleyDecomposition::is_squarefree() const {
    return std::all_of(spaces_.begin(), spaces_.end(),
                       [](const StanleySpace& s) { return s.is_squarefree(); });
}

int StanleyDecomposition::sdepth() const {
    if (spaces_.empty()) {
        throw std::domain_error("sdepth is undefined for an empty decomposition");
    }
    int depth = static_cast<int>(spaces_[0].variables().size());
    for (const StanleySpace& s : spaces_) {
        depth = std::min(depth, static_cast<int>(s.variables().size()));
    }
    return depth;
}

namespace {

// Lifts a space of arity n-1 to arity n: multiplies the coefficient by
// x_n^level and, when requested, adjoins n to the variable set.
StanleySpace lift(const StanleySpace& s, int level, bool adjoin_last) {
    int n = s.arity() + 1;
    Monomial coeff = s.coefficient().append(level);
    IndexSet vars = adjoin_last ? s.variables().with(n) : s.variables();
    return StanleySpace(std::move(coeff), std::move(vars));
}

std::vector<StanleySpace> ideal_spaces(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return {};
    if (ideal.arity() == 0) {
        // Only the unit ideal remains at arity 0: the whole ring K = 1·K[∅].
        return {StanleySpace(Monomial(0), IndexSet{})};
    }
    std::vector<StanleySpace> out;
    const int b = ideal.beta();
    for (int k = ideal.alpha(); k <= b; ++k) {
        for (const StanleySpace& s : ideal_spaces(ideal.slice(k))) {
            out.push_back(lift(s, k, k == b));
        }
    }
    return out;
}

std::vector<StanleySpace> complement_spaces(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        return {StanleySpace(Monomial(ideal.arity()), IndexSet::full(ideal.arity()))};
    }
    if (ideal.is_unit()) return {};

    const int b = ideal.beta();
    std::vector<std::vector<StanleySpace>> level(static_cast<std::size_t>(b) + 1);
    for (int k = 0; k <= b; ++k) {
        level[static_cast<std::size_t>(k)] = complement_spaces(ideal.slice(k));
        std::sort(level[static_cast<std::size_t>(k)].begin(),
                  level[static_cast<std::size_t>(k)].end());
    }

    // Every space of the top level extends to all higher levels (the slices
    // have stabilized), so a run reaching level b telescopes into one space
    // with x_n adjoined, starting at the lowest level the run covers.
    std::vector<StanleySpace> out;
    std::vector<std::pair<StanleySpace, int>> merged;  // (space, run start)
    for (const StanleySpace& s : level[static_cast<std::size_t>(b)]) {
        int start = b;
        while (start > 0 &&
               std::binary_search(level[static_cast<std::size_t>(start - 1)].begin(),
                                  level[static_cast<std::size_t>(start - 1)].end(), s)) {
            --start;
        }
        merged.emplace_back(s, start);
        out.push_back(lift(s, start, true));
    }
    for (int k = 0; k < b; ++k) {
        for (const StanleySpace& s : level[static_cast<std::size_t>(k)]) {
            auto it = std::lower_bound(
                merged.begin(), merged.end(), s,
                [](const auto& entry, const StanleySpace& key) { return entry.first < key; });
            bool absorbed = it != merged.end() && it->first == s && it->second <= k;
            if (!absorbed) out.push_back(lift(s, k, false));
        }
    }
    return out;
}

}  // namespace

StanleyDecomposition janet_ideal(const MonomialIdeal& ideal) {
    return StanleyDecomposition(Target::Ideal, ideal, ideal_spaces(ideal));
}

StanleyDecomposition janet_complement(const MonomialIdeal& ideal) {
    return StanleyDecomposition(Target::Complement, ideal, complement_spaces(ideal));
}

}  // namespace stanley
