#include "stanley/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stanley {

SimplicialComplex::SimplicialComplex(int n_vertices) : n_vertices_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("vertex count must be non-negative");
}

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<Face> facets)
    : n_vertices_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (const Face& f : facets) {
        if (!f.empty() && *(f.end() - 1) > n_vertices) {
            throw std::invalid_argument("facet vertex out of range");
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const Face& f : facets) {
        bool maximal = std::none_of(facets.begin(), facets.end(), [&](const Face& g) {
            return f != g && f.is_subset_of(g);
        });
        if (maximal) facets_.push_back(f);
    }
}

bool SimplicialComplex::is_full_simplex() const {
    return facets_.size() == 1 && facets_[0] == IndexSet::full(n_vertices_);
}

bool SimplicialComplex::has_face(const Face& face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return face.is_subset_of(f); });
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> seen;
    for (const Face& facet : facets_) {
        const std::vector<int>& v = facet.indices();
        const std::size_t count = std::size_t{1} << v.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (mask & (std::size_t{1} << i)) subset.push_back(v[i]);
            }
            seen.insert(Face(std::move(subset)));
        }
    }
    return {seen.begin(), seen.end()};
}

SimplicialComplex SimplicialComplex::deletion() const {
    if (n_vertices_ < 1) throw std::invalid_argument("deletion requires a vertex");
    std::vector<Face> cut;
    cut.reserve(facets_.size());
    for (const Face& f : facets_) cut.push_back(f.without(n_vertices_));
    return SimplicialComplex(n_vertices_ - 1, std::move(cut));
}

SimplicialComplex SimplicialComplex::link() const {
    if (n_vertices_ < 1) throw std::invalid_argument("link requires a vertex");
    std::vector<Face> cut;
    for (const Face& f : facets_) {
        if (f.contains(n_vertices_)) cut.push_back(f.without(n_vertices_));
    }
    return SimplicialComplex(n_vertices_ - 1, std::move(cut));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& complex) {
    if (complex.is_void()) {
        throw std::invalid_argument("the void complex has no Stanley-Reisner ideal");
    }
    const int n = complex.n_vertices();
    std::size_t largest_facet = 0;
    for (const Face& f : complex.facets()) {
        largest_facet = std::max(largest_facet, f.size());
    }
    // A minimal non-face has at most max facet size + 1 vertices: anything
    // larger has a proper subset of that size which is already a non-face.
    const std::size_t size_cap =
        std::min<std::size_t>(static_cast<std::size_t>(n), largest_facet + 1);

    std::vector<Monomial> generators;
    std::vector<int> combo;
    auto emit_if_minimal = [&](const std::vector<int>& vertices) {
        Face face((std::vector<int>(vertices)));
        if (complex.has_face(face)) return;
        for (int v : vertices) {
            if (!complex.has_face(face.without(v))) return;  // a smaller non-face exists
        }
        generators.push_back(Monomial::from_support(face, n));
    };
    // Enumerate vertex subsets by size so minimality only needs one level down.
    for (std::size_t size = 0; size <= size_cap; ++size) {
        combo.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) combo[i] = static_cast<int>(i) + 1;
        while (true) {
            if (combo.empty()) {
                emit_if_minimal(combo);
                break;
            }
            emit_if_minimal(combo);
            // next combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && combo[i - 1] == n - static_cast<int>(size - i)) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return MonomialIdeal(n, std::move(generators));
}

SimplicialComplex reverse_vertices(const SimplicialComplex& complex) {
    const int n = complex.n_vertices();
    std::vector<Face> flipped;
    flipped.reserve(complex.facets().size());
    for (const Face& f : complex.facets()) {
        std::vector<int> relabeled;
        relabeled.reserve(f.size());
        for (int v : f) relabeled.push_back(n + 1 - v);
        flipped.emplace_back(std::move(relabeled));
    }
    return SimplicialComplex(n, std::move(flipped));
}

}  // namespace stanley
