#pragma once

#include <cstdint>

#include "stanley/monomial_ideal.hpp"
#include "stanley/simplicial_complex.hpp"

namespace stanley {

/// Seed-deterministic random monomial ideal. The draw algorithm is fixed:
/// an std::mt19937_64 seeded with `seed`, values reduced by modulo (the
/// slight bias is irrelevant here), so the same seed reproduces the same
/// ideal on every platform. Draws `count` in [0, max_generators] generators;
/// each generator draws a total degree in [1, max_degree] (the cap shrinks
/// to the arity when squarefree) and scatters that many unit increments over
/// the variables, onto distinct variables when squarefree. A zero cap makes
/// generators unit monomials. The result is minimalized, so the generator
/// count is an upper bound. max_generators = 0 gives the zero ideal.
MonomialIdeal random_ideal(std::uint64_t seed, int arity, int max_degree,
                           int max_generators, bool squarefree = false);

/// Seed-deterministic random nonvoid simplicial complex, same RNG contract.
/// Draws `count` in [1, max_facets] candidate facets; each vertex joins a
/// candidate with probability 1/2. Non-maximal candidates collapse, so the
/// facet count is an upper bound. Requires max_facets >= 1.
SimplicialComplex random_complex(std::uint64_t seed, int n_vertices, int max_facets);

}  // namespace stanley
