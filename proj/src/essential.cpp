#include "permsimple/essential.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_set>

#include "permsimple/classify.hpp"
#include "permsimple/intervals.hpp"

namespace permsimple {
namespace {

/// Runs fn(shard) for shard = 0..shards-1 distributed over `workers`
/// threads. Callers accumulate into per-shard state and merge in shard
/// order, which keeps results independent of the worker count.
void run_sharded(int workers, int shards,
                 const std::function<void(int)>& fn) {
  if (workers <= 1 || shards <= 1) {
    for (int s = 0; s < shards; ++s) fn(s);
    return;
  }
  workers = std::min(workers, shards);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int s = w; s < shards; s += workers) fn(s);
    });
  }
  for (auto& t : pool) t.join();
}

/// Visits every permutation of 1..n whose first value is v, in
/// lexicographic order of the remaining positions.
template <typename Fn>
void for_each_with_first(int n, int v, Fn&& fn) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  seq[0] = v;
  std::size_t idx = 1;
  for (int k = 1; k <= n; ++k)
    if (k != v) seq[idx++] = k;
  do {
    fn(seq);
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

}  // namespace

const char* slot_class_name(SlotClass c) {
  switch (c) {
    case SlotClass::Doubleton:
      return "doubleton";
    case SlotClass::Corner:
      return "corner";
    case SlotClass::Simple:
      return "simple";
    case SlotClass::Other:
      return "other";
  }
  return "?";
}

EssentialityReport inessential_entries(const Permutation& p) {
  if (p.size() < 2)
    throw Underflow("no entry of a length-1 permutation can be removed");
  if (!simple(p))
    throw NotSimple(p.str() + " is not simple");
  EssentialityReport rep{p, {}};
  rep.entries.reserve(static_cast<std::size_t>(p.size()));
  for (int pos = 1; pos <= p.size(); ++pos) {
    Permutation rest = remove_entry(p, pos);
    EssentialityReport::Entry e{p.entry(pos), false, std::nullopt};
    if (simple(rest)) {
      e.inessential = true;
      e.pattern = std::move(rest);
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

TheoremReport verify_theorem(int n, int guard, int workers) {
  if (n < 1) throw BadArguments("length must be at least 1");
  if (workers < 1) throw BadArguments("workers must be at least 1");
  if (n > guard)
    throw TooLarge("length " + std::to_string(n) + " exceeds the guard " +
                   std::to_string(guard));

  struct Partial {
    long long simple_count = 0;
    long long pa_count = 0;
    long long with_inessential = 0;
    std::vector<Permutation> counterexamples;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(n));

  run_sharded(workers, n, [&](int shard) {
    Partial& part = parts[static_cast<std::size_t>(shard)];
    for_each_with_first(n, shard + 1, [&](const std::vector<int>& seq) {
      if (first_nontrivial_window(seq)) return;
      Permutation p = Permutation::from_bijection_unchecked(seq);
      ++part.simple_count;
      bool pa = is_parallel_alternation(p).has_value();
      if (pa) ++part.pa_count;
      if (n < 2) return;  // nothing removable at length 1
      int iness = inessential_entries(p).inessential_count();
      if (iness > 0)
        ++part.with_inessential;
      else if (!pa)
        part.counterexamples.push_back(std::move(p));
    });
  });

  TheoremReport rep;
  rep.n = n;
  for (auto& part : parts) {
    rep.simple_count += part.simple_count;
    rep.parallel_alternation_simple_count += part.pa_count;
    rep.simple_with_inessential_count += part.with_inessential;
    for (auto& p : part.counterexamples)
      rep.counterexamples.push_back(std::move(p));
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  return rep;
}

ExtensionReport extension_analysis(const Permutation& base) {
  const int n = base.size();
  if (n < 4)
    throw TooSmall("extension census requires length at least 4");
  if (!simple(base)) throw NotSimple(base.str() + " is not simple");

  ExtensionReport rep{.base = base, .n = n};
  rep.naive_simple_estimate = static_cast<long long>(n) * n - 3;
  rep.slot_classes.assign(
      static_cast<std::size_t>(n) + 1,
      std::vector<SlotClass>(static_cast<std::size_t>(n) + 1,
                             SlotClass::Other));

  std::unordered_set<Permutation, PermutationHash> all_results;
  std::unordered_set<Permutation, PermutationHash> doubleton_results;

  for (int p = 1; p <= n + 1; ++p) {
    for (int v = 1; v <= n + 1; ++v) {
      Permutation ext = insert_entry(base, Slot{p, v});
      bool doubleton = (p >= 2 && is_interval_window(ext, p - 1, p)) ||
                       (p <= n && is_interval_window(ext, p, p + 1));
      SlotClass cls;
      if (doubleton) {
        cls = SlotClass::Doubleton;
        ++rep.doubleton_slots;
        doubleton_results.insert(ext);
      } else if ((p == 1 && is_interval_window(ext, 2, n + 1)) ||
                 (p == n + 1 && is_interval_window(ext, 1, n))) {
        cls = SlotClass::Corner;
        ++rep.corner_slots;
      } else if (simple(ext)) {
        cls = SlotClass::Simple;
        ++rep.simple_slots;
        rep.simple_results.push_back(ext);
      } else {
        cls = SlotClass::Other;
        ++rep.other_slots;
      }
      rep.slot_classes[static_cast<std::size_t>(p) - 1]
                      [static_cast<std::size_t>(v) - 1] = cls;
      all_results.insert(std::move(ext));
    }
  }

  rep.distinct_results = static_cast<long long>(all_results.size());
  rep.distinct_doubleton_results =
      static_cast<long long>(doubleton_results.size());
  std::sort(rep.simple_results.begin(), rep.simple_results.end());
  rep.simple_results.erase(
      std::unique(rep.simple_results.begin(), rep.simple_results.end()),
      rep.simple_results.end());
  return rep;
}

DoubleCountReport double_count_check(int n, int guard, int workers) {
  if (n < 4) throw TooSmall("double counting requires length at least 4");
  if (workers < 1) throw BadArguments("workers must be at least 1");
  if (n + 1 > guard)
    throw TooLarge("length " + std::to_string(n + 1) + " exceeds the guard " +
                   std::to_string(guard));

  DoubleCountReport rep;
  rep.n = n;

  {
    const int m = n + 1;
    std::vector<long long> parts(static_cast<std::size_t>(m), 0);
    run_sharded(workers, m, [&](int shard) {
      long long sum = 0;
      for_each_with_first(m, shard + 1, [&](const std::vector<int>& seq) {
        if (first_nontrivial_window(seq)) return;
        sum += inessential_entries(Permutation::from_bijection_unchecked(seq))
                   .inessential_count();
      });
      parts[static_cast<std::size_t>(shard)] = sum;
    });
    for (long long s : parts) rep.inessential_pairs += s;
  }

  {
    std::vector<long long> parts(static_cast<std::size_t>(n), 0);
    run_sharded(workers, n, [&](int shard) {
      long long sum = 0;
      for_each_with_first(n, shard + 1, [&](const std::vector<int>& seq) {
        if (first_nontrivial_window(seq)) return;
        sum += extension_analysis(Permutation::from_bijection_unchecked(seq))
                   .simple_slots;
      });
      parts[static_cast<std::size_t>(shard)] = sum;
    });
    for (long long s : parts) rep.simple_extension_slots += s;
  }

  return rep;
}

}  // namespace permsimple
