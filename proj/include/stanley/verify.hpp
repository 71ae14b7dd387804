#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/partition.hpp"

namespace stanley {

/// One mismatch found by a verifier: the object checked, how many times the
/// candidate covered it, and how many times it should have.
struct Failure {
    std::string witness;
    long observed = 0;
    long expected = 0;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    long checked_count = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Default enumeration bound for the cover checks: beyond max generator
/// degree + n every slice pattern has stabilized, so one extra degree of
/// margin makes truncation artifacts visible instead of silently passing.
int default_max_degree(const MonomialIdeal& ideal);

/// Brute-force check that the decomposition's spaces cover each monomial of
/// total degree <= max_degree exactly once if it lies in the ideal and zero
/// times otherwise. Works from divisibility alone, independent of how the
/// decomposition was produced. Requires target Ideal and source == ideal.
VerificationReport verify_ideal_cover(const MonomialIdeal& ideal,
                                      const StanleyDecomposition& decomposition,
                                      int max_degree);

/// Same check with the expected multiplicities inverted: monomials outside
/// the ideal must be covered exactly once, members zero times. Requires
/// target Complement and source == ideal.
VerificationReport verify_complement_cover(const MonomialIdeal& ideal,
                                           const StanleyDecomposition& decomposition,
                                           int max_degree);

/// Checks that every face of the complex lies in exactly one interval and
/// that every interval endpoint is a face.
VerificationReport verify_partition(const SimplicialComplex& complex,
                                    const Partition& partition);

/// Cross-checks the two engines: the spaces induced by janet_partition must
/// equal janet_complement of the Stanley-Reisner ideal as canonical lists,
/// and the complement decomposition must pass its cover check at max_degree
/// (pass a negative max_degree to use the default bound). checked_count sums
/// the list comparison slots and the cover enumeration.
VerificationReport verify_correspondence(const SimplicialComplex& complex,
                                         int max_degree = -1);

}  // namespace stanley
