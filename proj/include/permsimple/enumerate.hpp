#pragma once

#include <vector>

#include "permsimple/permutation.hpp"

namespace permsimple {

enum class Method { BruteForce, Extension };

struct SimpleSet {
  int n = 0;
  Method method = Method::BruteForce;
  std::vector<Permutation> perms;  // sorted, no duplicates
  long long count() const { return static_cast<long long>(perms.size()); }
};

inline constexpr int kBruteForceGuard = 9;
inline constexpr int kExtensionGuard = 11;

/// Filters all n! permutations through the simplicity test, in
/// lexicographic order. Throws TooLarge beyond the guard.
SimpleSet all_simple_bruteforce(int n, int guard = kBruteForceGuard);

/// All simple parallel alternations of length n (empty for odd n): the
/// orbit of the canonical alternation under the eight symmetries, filtered
/// by simplicity. For n <= 8 a full recognition sweep over all n!
/// permutations cross-checks the orbit construction.
SimpleSet pa_seeds(int n);

/// Grows the simple permutations length by length from the seed set
/// {2413, 3142}: applies every (k+1)^2 insertion to each simple
/// permutation of length k, keeps the simple results, and unions in
/// pa_seeds(k+1), which extension misses because simple parallel
/// alternations are not one-point extensions of shorter simple
/// permutations. Lengths 1..3 come from a fixed table.
///
/// `prune` skips slots that provably produce a size-2 or whole-base
/// interval before constructing the extension; the unpruned path exists
/// so tests can assert the pruning is lossless.
///
/// Memory holds the full set at the target length (a few million
/// permutations at the default guard of 11). Throws TooLarge.
SimpleSet simple_via_extension(int n, int guard = kExtensionGuard,
                               bool prune = true);

}  // namespace permsimple
