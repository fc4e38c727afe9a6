#pragma once

#include <optional>
#include <span>
#include <vector>

#include "permsimple/permutation.hpp"

namespace permsimple {

/// A contiguous block of positions [i, j] whose values form the contiguous
/// range [vmin, vmax]. Stored only when that interval property holds.
struct IntervalWindow {
  int i = 0, j = 0;
  int vmin = 0, vmax = 0;
  int length() const { return j - i + 1; }
  friend auto operator<=>(const IntervalWindow&, const IntervalWindow&) =
      default;
};

/// Window test: positions i..j map onto a contiguous value range exactly
/// when max - min == j - i over the window.
bool is_interval_window(const Permutation& p, int i, int j);

/// All proper nontrivial intervals, i.e. windows of length 2..n-1 that
/// pass the test, ordered lexicographically by (i, j).
std::vector<IntervalWindow> nontrivial_intervals(const Permutation& p);

/// The inclusion-minimal ones among nontrivial_intervals(p).
std::vector<IntervalWindow> minimal_nontrivial_intervals(const Permutation& p);

struct SimplicityReport {
  bool simple = false;
  // Lexicographically first nontrivial interval when not simple.
  std::optional<IntervalWindow> witness;
};

/// A permutation is simple when its only intervals are the singletons and
/// the whole line. Lengths 1 and 2 are simple by this definition; length 3
/// never is.
SimplicityReport is_simple(const Permutation& p);

bool simple(const Permutation& p);

// Allocation-free variants over raw rank sequences; used by the hot
// enumeration and sampling loops.

/// First (lex by (i, j)) nontrivial window of the sequence, if any.
std::optional<IntervalWindow> first_nontrivial_window(std::span<const int> seq);

struct WindowCensus {
  long long count = 0;      // number of nontrivial proper intervals
  bool has_size_ge3 = false;
};

WindowCensus count_nontrivial_windows(std::span<const int> seq);

}  // namespace permsimple
