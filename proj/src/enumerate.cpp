#include "permsimple/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "permsimple/classify.hpp"
#include "permsimple/intervals.hpp"

namespace permsimple {
namespace {

std::vector<Permutation> sorted_vec(
    std::unordered_set<Permutation, PermutationHash>&& set) {
  std::vector<Permutation> out;
  out.reserve(set.size());
  for (auto it = set.begin(); it != set.end();)
    out.push_back(std::move(set.extract(it++).value()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Slot exclusions decidable without building the extension, valid for
/// simple bases of length >= 4: a corner slot recreates the whole base as
/// an interval, and a slot value-adjacent to a position neighbor creates
/// a doubleton. Either way the result cannot be simple.
bool prunable_slot(const std::vector<int>& base, int p, int v) {
  const int k = static_cast<int>(base.size());
  if ((p == 1 || p == k + 1) && (v == 1 || v == k + 1)) return true;
  auto shifted = [v](int t) { return t + (t >= v); };
  if (p >= 2 && std::abs(v - shifted(base[static_cast<std::size_t>(p) - 2])) == 1)
    return true;
  if (p <= k && std::abs(v - shifted(base[static_cast<std::size_t>(p) - 1])) == 1)
    return true;
  return false;
}

}  // namespace

SimpleSet all_simple_bruteforce(int n, int guard) {
  if (n < 1) throw BadArguments("length must be at least 1");
  if (n > guard)
    throw TooLarge("length " + std::to_string(n) +
                   " exceeds the brute-force guard " + std::to_string(guard));
  SimpleSet out{n, Method::BruteForce, {}};
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
  do {
    if (!first_nontrivial_window(seq))
      out.perms.push_back(Permutation::from_bijection_unchecked(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;  // lexicographic iteration keeps the set sorted
}

SimpleSet pa_seeds(int n) {
  SimpleSet out{n, Method::Extension, {}};
  if (n < 2 || n % 2 != 0) return out;

  Permutation canonical = canonical_parallel_alternation(n / 2);
  std::unordered_set<Permutation, PermutationHash> orbit;
  for (Symmetry s : kAllSymmetries) {
    Permutation image = apply_symmetry(canonical, s);
    if (simple(image)) orbit.insert(std::move(image));
  }
  out.perms = sorted_vec(std::move(orbit));

  if (n <= 8) {
    // Recognition sweep: at small lengths, confirm the orbit construction
    // finds every simple parallel alternation.
    std::vector<Permutation> swept;
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
    do {
      if (first_nontrivial_window(seq)) continue;
      Permutation p = Permutation::from_bijection_unchecked(seq);
      if (is_parallel_alternation(p)) swept.push_back(std::move(p));
    } while (std::next_permutation(seq.begin(), seq.end()));
    if (swept != out.perms)
      throw Error("internal: canonical orbit disagrees with the recognition "
                  "sweep at length " + std::to_string(n));
  }
  return out;
}

SimpleSet simple_via_extension(int n, int guard, bool prune) {
  if (n < 1) throw BadArguments("length must be at least 1");
  if (n > guard)
    throw TooLarge("length " + std::to_string(n) +
                   " exceeds the extension guard " + std::to_string(guard));

  SimpleSet out{n, Method::Extension, {}};
  if (n <= 3) {
    if (n == 1) {
      out.perms.push_back(Permutation::identity(1));
    } else if (n == 2) {
      out.perms.push_back(Permutation::parse("12"));
      out.perms.push_back(Permutation::parse("21"));
    }
    return out;  // no simple permutations of length 3
  }

  std::vector<Permutation> current = {Permutation::parse("2413"),
                                      Permutation::parse("3142")};
  for (int k = 4; k < n; ++k) {
    std::unordered_set<Permutation, PermutationHash> next;
    for (const Permutation& base : current) {
      const std::vector<int>& seq = base.one_line();
      for (int p = 1; p <= k + 1; ++p) {
        for (int v = 1; v <= k + 1; ++v) {
          if (prune && prunable_slot(seq, p, v)) continue;
          Permutation ext = insert_entry(base, Slot{p, v});
          if (simple(ext)) next.insert(std::move(ext));
        }
      }
    }
    for (Permutation& seed : pa_seeds(k + 1).perms) next.insert(std::move(seed));
    current = sorted_vec(std::move(next));
  }
  out.perms = std::move(current);
  return out;
}

}  // namespace permsimple
