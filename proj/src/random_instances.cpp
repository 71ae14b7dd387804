#include "stanley/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stanley {

namespace {
// Bounded draw by modulo. mt19937_64 is fully specified by the standard, so
// this sequence is identical on every platform; the modulo bias does not
// matter for test-instance generation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}
}  // namespace

MonomialIdeal random_ideal(std::uint64_t seed, int arity, int max_degree,
                           int max_generators, bool squarefree) {
    if (arity < 0 || max_degree < 0 || max_generators < 0) {
        throw std::invalid_argument("random_ideal bounds must be non-negative");
    }
    std::mt19937_64 rng(seed);
    const int count = static_cast<int>(
        draw(rng, static_cast<std::uint64_t>(max_generators) + 1));
    std::vector<Monomial> generators;
    generators.reserve(static_cast<std::size_t>(count));
    const int degree_cap = squarefree ? std::min(max_degree, arity) : max_degree;
    for (int g = 0; g < count; ++g) {
        std::vector<int> exps(static_cast<std::size_t>(arity), 0);
        if (degree_cap > 0) {
            const int degree =
                1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(degree_cap)));
            if (squarefree) {
                // pick `degree` distinct variables, partial Fisher-Yates
                std::vector<int> pool(static_cast<std::size_t>(arity));
                std::iota(pool.begin(), pool.end(), 0);
                for (int j = 0; j < degree; ++j) {
                    const auto pick =
                        j + static_cast<int>(
                                draw(rng, static_cast<std::uint64_t>(arity - j)));
                    std::swap(pool[static_cast<std::size_t>(j)],
                              pool[static_cast<std::size_t>(pick)]);
                    exps[static_cast<std::size_t>(pool[static_cast<std::size_t>(j)])] = 1;
                }
            } else {
                for (int j = 0; j < degree; ++j) {
                    const auto pos = static_cast<std::size_t>(
                        draw(rng, static_cast<std::uint64_t>(arity)));
                    ++exps[pos];
                }
            }
        }
        generators.emplace_back(std::move(exps));
    }
    return MonomialIdeal(arity, std::move(generators));
}

SimplicialComplex random_complex(std::uint64_t seed, int n_vertices, int max_facets) {
    if (n_vertices < 0 || n_vertices > 64) {
        throw std::invalid_argument("random_complex supports 0..64 vertices");
    }
    if (max_facets < 1) {
        throw std::invalid_argument("random_complex needs max_facets >= 1");
    }
    std::mt19937_64 rng(seed);
    const int count =
        1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_facets)));
    std::vector<Face> facets;
    facets.reserve(static_cast<std::size_t>(count));
    for (int f = 0; f < count; ++f) {
        const std::uint64_t bits = rng();
        std::vector<int> vertices;
        for (int v = 1; v <= n_vertices; ++v) {
            if (bits & (std::uint64_t{1} << (v - 1))) vertices.push_back(v);
        }
        facets.emplace_back(std::move(vertices));
    }
    return SimplicialComplex(n_vertices, std::move(facets));
}

}  // namespace stanley
