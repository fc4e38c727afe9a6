#pragma once

#include <optional>
#include <vector>

#include "permsimple/permutation.hpp"

namespace permsimple {

enum class SplitAxis { Value, Position };
enum class Direction { Increasing, Decreasing };

/// Certificate for a parallel alternation of even length 2L.
///
/// Value split: the L smallest values and the L largest values each occupy
/// alternating positions, and both halves read left-to-right as increasing
/// sequences (or both as decreasing ones). Position split: the mirror
/// statement under inversion, with the left half and right half of
/// positions alternating in value order. halves[k] is 0 when the entry at
/// position k+1 belongs to the low (resp. left) half, else 1.
struct AlternationWitness {
  SplitAxis axis = SplitAxis::Value;
  Direction direction = Direction::Increasing;
  std::vector<int> halves;
  friend bool operator==(const AlternationWitness&,
                         const AlternationWitness&) = default;
};

/// Recognizes parallel alternations. Odd lengths and length 0 halves never
/// qualify; candidates are probed in the order value/increasing,
/// value/decreasing, position/increasing, position/decreasing and the
/// first match is returned. Note the split is by value (or position)
/// halves, not an arbitrary bipartition: 2143 is rejected even though its
/// two descents interleave.
std::optional<AlternationWitness> is_parallel_alternation(
    const Permutation& p);

/// The canonical parallel alternation of length 2L:
/// (L+1) 1 (L+2) 2 ... (2L) L, optionally pushed through a symmetry.
/// Simple for L >= 2; L = 1 gives 21.
Permutation canonical_parallel_alternation(int half_length,
                                           Symmetry variant = Symmetry::Identity);

struct AlternationRepair {
  std::vector<EntryRef> removed;  // at most 2, ordered by position
  Permutation result;
};

/// Removes at most two entries from a parallel alternation so the rest is
/// simple. Tries the empty removal, then single entries, then pairs, each
/// level in lexicographic position order, returning the first success.
/// Throws NotAParallelAlternation when the input is not one.
AlternationRepair simplify_parallel_alternation(const Permutation& p);

/// Entry x1 separates x2 and x3 when it lies strictly between them in
/// exactly one of the two coordinates (horizontally xor vertically).
bool separates(const Permutation& p, EntryRef x1, EntryRef x2, EntryRef x3);

/// x separates the set X when x is outside the bounding box of X and
/// separates some pair of entries of X. |X| >= 2 required.
bool separates_set(const Permutation& p, EntryRef x,
                   std::span<const EntryRef> X);

}  // namespace permsimple
