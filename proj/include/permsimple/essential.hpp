#pragma once

#include <optional>
#include <vector>

#include "permsimple/permutation.hpp"

namespace permsimple {

// Exhaustive operations refuse lengths above this unless the caller
// raises the guard explicitly.
inline constexpr int kDefaultExhaustiveGuard = 10;

/// Per-entry essentiality of a simple permutation. An entry is inessential
/// when deleting it leaves a simple permutation.
struct EssentialityReport {
  struct Entry {
    EntryRef entry;
    bool inessential = false;
    std::optional<Permutation> pattern;  // the deletion result when inessential
  };
  Permutation perm;
  std::vector<Entry> entries;  // ordered by position
  int inessential_count() const {
    int c = 0;
    for (const auto& e : entries) c += e.inessential;
    return c;
  }
};

/// Classifies each entry by deleting it and testing simplicity.
/// Throws NotSimple for non-simple input, Underflow for length 1.
EssentialityReport inessential_entries(const Permutation& p);

/// Exhaustive check of the claim that every simple permutation is a
/// parallel alternation or has an inessential entry.
struct TheoremReport {
  int n = 0;
  long long simple_count = 0;
  long long parallel_alternation_simple_count = 0;
  long long simple_with_inessential_count = 0;
  // Simple, not a parallel alternation, zero inessential entries.
  std::vector<Permutation> counterexamples;
};

/// Scans all n! permutations. Length 1 reports {1, 1, 0, 0, {}}: the sole
/// permutation is simple but has no removable entry, so it is excluded
/// from counterexample collection rather than miscounted.
/// Throws TooLarge beyond the guard. Output is independent of `workers`.
TheoremReport verify_theorem(int n, int guard = kDefaultExhaustiveGuard,
                             int workers = 1);

enum class SlotClass { Doubleton, Corner, Simple, Other };

const char* slot_class_name(SlotClass c);

/// Census of all (n+1)^2 one-point extensions of a simple base.
/// Every slot is classified empirically from the constructed extension:
///   Doubleton - the new entry sits in a size-2 interval
///   Corner    - the whole base survives as a length-n interval
///   Simple    - the extension is simple
///   Other     - none of the above
struct ExtensionReport {
  Permutation base;
  int n = 0;
  // slot_classes[p-1][v-1] classifies insertion at position p, value v.
  std::vector<std::vector<SlotClass>> slot_classes;
  long long doubleton_slots = 0;
  long long corner_slots = 0;
  long long simple_slots = 0;
  long long other_slots = 0;
  long long distinct_results = 0;
  long long distinct_doubleton_results = 0;
  std::vector<Permutation> simple_results;  // sorted, deduplicated
  // The naive closing-count figure n^2 - 3 carried for side-by-side
  // comparison with the measured simple_slots; never asserted equal.
  long long naive_simple_estimate = 0;
};

/// Throws NotSimple, or TooSmall for n < 4.
ExtensionReport extension_analysis(const Permutation& base);

/// Both sides of the pair count (sigma, x) with sigma simple of length
/// n+1 and x inessential in sigma: counting by sigma gives the total of
/// inessential entries, counting by the deletion target gives the total
/// of simple extension slots over simple bases of length n.
struct DoubleCountReport {
  int n = 0;
  long long inessential_pairs = 0;        // over simple length n+1
  long long simple_extension_slots = 0;   // over simple length n
  bool equal() const { return inessential_pairs == simple_extension_slots; }
};

/// Throws TooSmall for n < 4, TooLarge when n+1 exceeds the guard.
/// Output is independent of `workers`.
DoubleCountReport double_count_check(int n, int guard = kDefaultExhaustiveGuard,
                                     int workers = 1);

}  // namespace permsimple
