#include "permsimple/classify.hpp"

#include <algorithm>

#include "permsimple/intervals.hpp"

namespace permsimple {
namespace {

bool monotone(const std::vector<int>& xs, Direction d) {
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (d == Direction::Increasing ? xs[k] <= xs[k - 1] : xs[k] >= xs[k - 1])
      return false;
  }
  return true;
}

bool alternates(const std::vector<int>& halves) {
  for (std::size_t k = 1; k < halves.size(); ++k)
    if (halves[k] == halves[k - 1]) return false;
  return true;
}

std::optional<AlternationWitness> probe(const Permutation& p, SplitAxis axis,
                                        Direction d) {
  const int n = p.size();
  const int half = n / 2;
  // halves[k]: membership of the entry at position k+1 (0 = low values /
  // left positions, 1 = high values / right positions).
  std::vector<int> halves(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos) {
    int in_upper = axis == SplitAxis::Value ? (p.value_at(pos) > half)
                                            : (pos > half);
    halves[static_cast<std::size_t>(pos) - 1] = in_upper;
  }

  // Perfect interleaving along the axis orthogonal to the split: for a
  // value split the positions alternate between halves, for a position
  // split the values do.
  if (axis == SplitAxis::Value) {
    if (!alternates(halves)) return std::nullopt;
  } else {
    std::vector<int> by_value(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      by_value[static_cast<std::size_t>(v) - 1] =
          halves[static_cast<std::size_t>(p.position_of(v)) - 1];
    if (!alternates(by_value)) return std::nullopt;
  }

  std::vector<int> low, high;
  for (int pos = 1; pos <= n; ++pos)
    (halves[static_cast<std::size_t>(pos) - 1] ? high : low)
        .push_back(p.value_at(pos));
  if (!monotone(low, d) || !monotone(high, d)) return std::nullopt;

  return AlternationWitness{axis, d, std::move(halves)};
}

}  // namespace

std::optional<AlternationWitness> is_parallel_alternation(
    const Permutation& p) {
  if (p.size() % 2 != 0) return std::nullopt;
  for (SplitAxis axis : {SplitAxis::Value, SplitAxis::Position})
    for (Direction d : {Direction::Increasing, Direction::Decreasing})
      if (auto w = probe(p, axis, d)) return w;
  return std::nullopt;
}

Permutation canonical_parallel_alternation(int half_length,
                                           Symmetry variant) {
  if (half_length < 1)
    throw BadArguments("half length must be at least 1");
  std::vector<int> seq;
  seq.reserve(2 * static_cast<std::size_t>(half_length));
  for (int k = 1; k <= half_length; ++k) {
    seq.push_back(half_length + k);
    seq.push_back(k);
  }
  return apply_symmetry(Permutation::from_bijection_unchecked(std::move(seq)),
                        variant);
}

AlternationRepair simplify_parallel_alternation(const Permutation& p) {
  if (!is_parallel_alternation(p))
    throw NotAParallelAlternation(p.str() + " is not a parallel alternation");
  const int n = p.size();
  if (simple(p)) return AlternationRepair{{}, p};

  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n));
  if (n >= 2) {
    for (int r = 1; r <= n; ++r) {
      Permutation cand = remove_entry(p, r);
      if (simple(cand)) return AlternationRepair{{p.entry(r)}, cand};
    }
  }
  if (n >= 3) {
    for (int r1 = 1; r1 < n; ++r1) {
      for (int r2 = r1 + 1; r2 <= n; ++r2) {
        keep.clear();
        for (int k = 1; k <= n; ++k)
          if (k != r1 && k != r2) keep.push_back(k);
        Permutation cand = subpattern(p, keep);
        if (simple(cand))
          return AlternationRepair{{p.entry(r1), p.entry(r2)}, cand};
      }
    }
  }
  // Unreachable for genuine parallel alternations: two removals always
  // suffice for this family.
  throw Error("no repair within two removals for " + p.str());
}

bool separates(const Permutation& p, EntryRef x1, EntryRef x2, EntryRef x3) {
  for (EntryRef e : {x1, x2, x3})
    if (!p.contains(e))
      throw BadArguments("entry (" + std::to_string(e.position) + ", " +
                         std::to_string(e.value) +
                         ") does not belong to the permutation");
  if (x1 == x2 || x1 == x3 || x2 == x3)
    throw NotDistinct("separates requires three distinct entries");
  auto between = [](int a, int lo, int hi) {
    if (lo > hi) std::swap(lo, hi);
    return lo < a && a < hi;
  };
  bool horiz = between(x1.position, x2.position, x3.position);
  bool vert = between(x1.value, x2.value, x3.value);
  return horiz != vert;
}

bool separates_set(const Permutation& p, EntryRef x,
                   std::span<const EntryRef> X) {
  if (X.size() < 2)
    throw BadArguments("separates_set needs at least two entries");
  if (!p.contains(x))
    throw BadArguments("entry outside the permutation");
  for (const EntryRef& e : X)
    if (e == x) throw BadArguments("x must not be a member of X");
  RectHull h = rect_hull(p, X);  // validates membership of X
  if (h.contains(x)) return false;
  for (std::size_t a = 0; a + 1 < X.size(); ++a)
    for (std::size_t b = a + 1; b < X.size(); ++b)
      if (separates(p, x, X[a], X[b])) return true;
  return false;
}

}  // namespace permsimple
