#include "permsimple/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "permsimple/enumerate.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/intervals.hpp"

namespace permsimple {
namespace {

constexpr char kToleranceNote[] =
    "comparison thresholds are finite-length engineering tolerances, not "
    "limits claimed by the asymptotics";

std::vector<double> poisson2_pmf(int max_k) {
  std::vector<double> pmf(static_cast<std::size_t>(max_k) + 1);
  pmf[0] = std::exp(-2.0);
  for (int k = 1; k <= max_k; ++k)
    pmf[static_cast<std::size_t>(k)] =
        pmf[static_cast<std::size_t>(k) - 1] * 2.0 / k;
  return pmf;
}

/// Fills the derived fields of a report whose histogram (and samples,
/// seed, generator) are already populated.
void finish_report(StatsReport& rep, long long large_count) {
  long long total = 0, weighted = 0;
  int max_k = 0;
  for (const auto& [k, cnt] : rep.histogram) {
    total += cnt;
    weighted += static_cast<long long>(k) * cnt;
    max_k = std::max(max_k, k);
  }
  rep.mean_intervals = static_cast<double>(weighted) / static_cast<double>(total);
  auto it = rep.histogram.find(0);
  rep.simple_fraction =
      it == rep.histogram.end()
          ? 0.0
          : static_cast<double>(it->second) / static_cast<double>(total);
  rep.large_interval_fraction =
      static_cast<double>(large_count) / static_cast<double>(total);

  rep.poisson_reference = poisson2_pmf(max_k);
  // Tail-lumped comparison: the final bucket carries P(X >= max_k).
  double tv = 0.0;
  double cum = 0.0;
  for (int k = 0; k <= max_k; ++k) {
    double ref = rep.poisson_reference[static_cast<std::size_t>(k)];
    if (k == max_k) ref = 1.0 - cum;
    cum += rep.poisson_reference[static_cast<std::size_t>(k)];
    auto hit = rep.histogram.find(k);
    double emp = hit == rep.histogram.end()
                     ? 0.0
                     : static_cast<double>(hit->second) /
                           static_cast<double>(total);
    tv += std::abs(emp - ref);
  }
  rep.tv_distance = tv / 2.0;
  rep.note = kToleranceNote;
}

}  // namespace

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw BadArguments("bound must be positive");
  // Lemire's multiply-shift with rejection; unbiased.
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (lo < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // One golden-ratio step per index, then the splitmix64 mixer once.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Permutation sample_permutation(int n, SplitMix64& rng) {
  if (n < 1) throw BadArguments("length must be at least 1");
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(seq[static_cast<std::size_t>(i)], seq[j]);
  }
  return Permutation::from_bijection_unchecked(std::move(seq));
}

StatsReport interval_count_experiment(int n, long long samples,
                                      std::uint64_t seed, int workers) {
  if (n < 4) throw BadArguments("sampled length must be at least 4");
  if (samples < 1) throw BadArguments("need at least one sample");
  if (workers < 1) throw BadArguments("workers must be at least 1");

  struct Partial {
    std::map<int, long long> histogram;
    long long large = 0;
  };
  workers = static_cast<int>(
      std::min<long long>(workers, samples));
  std::vector<Partial> parts(static_cast<std::size_t>(workers));

  auto run = [&](int w) {
    Partial& part = parts[static_cast<std::size_t>(w)];
    for (long long i = w; i < samples; i += workers) {
      // The stream for sample i depends only on (seed, i), so the split
      // of indices over workers cannot change any outcome.
      SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
      Permutation p = sample_permutation(n, rng);
      WindowCensus census = count_nontrivial_windows(p.one_line());
      ++part.histogram[static_cast<int>(census.count)];
      if (census.has_size_ge3) ++part.large;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  StatsReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.generator = "splitmix64";
  long long large = 0;
  for (const auto& part : parts) {
    for (const auto& [k, cnt] : part.histogram) rep.histogram[k] += cnt;
    large += part.large;
  }
  finish_report(rep, large);
  return rep;
}

StatsReport interval_count_exhaustive(int n, int guard) {
  if (n < 1) throw BadArguments("length must be at least 1");
  if (n > guard)
    throw TooLarge("length " + std::to_string(n) + " exceeds the guard " +
                   std::to_string(guard));
  StatsReport rep;
  rep.n = n;
  rep.seed = 0;
  rep.generator = "exhaustive";
  long long large = 0;
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
  do {
    WindowCensus census = count_nontrivial_windows(seq);
    ++rep.histogram[static_cast<int>(census.count)];
    if (census.has_size_ge3) ++large;
    ++rep.samples;
  } while (std::next_permutation(seq.begin(), seq.end()));
  finish_report(rep, large);
  return rep;
}

InessentialTrend inessential_trend(int max_n, int min_n, int guard) {
  if (min_n != 4 && min_n != 5)
    throw BadArguments("rows start at length 4 or 5");
  if (max_n < min_n) throw BadArguments("empty length range");
  if (max_n > guard)
    throw TooLarge("length " + std::to_string(max_n) + " exceeds the guard " +
                   std::to_string(guard));

  InessentialTrend trend;
  std::optional<SimpleSet> prev;
  if (min_n - 1 >= 4) prev = all_simple_bruteforce(min_n - 1, guard);
  for (int m = min_n; m <= max_n; ++m) {
    SimpleSet cur = all_simple_bruteforce(m, guard);
    TrendRow row;
    row.n = m;
    row.simple_count = cur.count();
    for (const Permutation& p : cur.perms)
      row.total_inessential += inessential_entries(p).inessential_count();
    row.mean_inessential =
        row.simple_count == 0
            ? 0.0
            : static_cast<double>(row.total_inessential) /
                  static_cast<double>(row.simple_count);
    row.mean_over_n = row.mean_inessential / m;
    if (prev) {
      long long slots = 0;
      for (const Permutation& tau : prev->perms)
        slots += extension_analysis(tau).simple_slots;
      row.cross_validated = (slots == row.total_inessential);
    }
    trend.rows.push_back(row);
    prev = std::move(cur);
  }
  return trend;
}

}  // namespace permsimple
