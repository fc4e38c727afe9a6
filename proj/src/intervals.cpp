#include "permsimple/intervals.hpp"

#include <algorithm>

namespace permsimple {

bool is_interval_window(const Permutation& p, int i, int j) {
  const int n = p.size();
  if (i < 1 || j > n || i > j)
    throw OutOfRange("window [" + std::to_string(i) + ", " +
                     std::to_string(j) + "] outside 1.." + std::to_string(n));
  int lo = p.value_at(i), hi = lo;
  for (int k = i + 1; k <= j; ++k) {
    int v = p.value_at(k);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo == j - i;
}

std::vector<IntervalWindow> nontrivial_intervals(const Permutation& p) {
  const auto& seq = p.one_line();
  const int n = p.size();
  std::vector<IntervalWindow> out;
  for (int i = 1; i <= n; ++i) {
    int lo = seq[static_cast<std::size_t>(i) - 1], hi = lo;
    // Running extrema make each (i, j) pair O(1).
    for (int j = i + 1; j <= n; ++j) {
      int v = seq[static_cast<std::size_t>(j) - 1];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (hi - lo == j - i && j - i + 1 < n)
        out.push_back(IntervalWindow{i, j, lo, hi});
    }
  }
  return out;
}

std::vector<IntervalWindow> minimal_nontrivial_intervals(
    const Permutation& p) {
  std::vector<IntervalWindow> all = nontrivial_intervals(p);
  std::vector<IntervalWindow> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all) {
      if (b == a) continue;
      if (a.i <= b.i && b.j <= a.j) {  // a strictly contains b
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

SimplicityReport is_simple(const Permutation& p) {
  auto w = first_nontrivial_window(p.one_line());
  if (w) return SimplicityReport{false, w};
  return SimplicityReport{true, std::nullopt};
}

bool simple(const Permutation& p) {
  return !first_nontrivial_window(p.one_line()).has_value();
}

std::optional<IntervalWindow> first_nontrivial_window(
    std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  for (int i = 1; i <= n; ++i) {
    int lo = seq[static_cast<std::size_t>(i) - 1], hi = lo;
    for (int j = i + 1; j <= n; ++j) {
      int v = seq[static_cast<std::size_t>(j) - 1];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (hi - lo == j - i && j - i + 1 < n)
        return IntervalWindow{i, j, lo, hi};
    }
  }
  return std::nullopt;
}

WindowCensus count_nontrivial_windows(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  WindowCensus census;
  for (int i = 1; i <= n; ++i) {
    int lo = seq[static_cast<std::size_t>(i) - 1], hi = lo;
    for (int j = i + 1; j <= n; ++j) {
      int v = seq[static_cast<std::size_t>(j) - 1];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (hi - lo == j - i && j - i + 1 < n) {
        ++census.count;
        if (j - i + 1 >= 3) census.has_size_ge3 = true;
      }
    }
  }
  return census;
}

}  // namespace permsimple
