#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permsimple/permutation.hpp"

namespace permsimple {

inline constexpr double kEMinusTwo = 0.13533528323661270;
inline constexpr int kTrendGuard = 9;

/// splitmix64 (Steele, Lea & Flood; the java.util.SplittableRandom
/// mixer). Chosen over the standard-library engines because its output is
/// fully pinned by the published algorithm, so reports are bit-identical
/// across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by Lemire's multiply-shift rejection;
  /// unbiased for any bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);
};

/// Substream seed for sample index i: seed + (i+1) golden-ratio steps,
/// passed through the splitmix64 mixer once. Sampling a given index is
/// then independent of how samples are distributed over workers.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform random permutation by Fisher-Yates. Identical generator states
/// give identical outputs.
Permutation sample_permutation(int n, SplitMix64& rng);

/// Distribution of the nontrivial-interval count, empirical vs Poisson(2).
struct StatsReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::string generator;  // "splitmix64" or "exhaustive"
  std::map<int, long long> histogram;  // interval count -> occurrences
  // Poisson(2) pmf for k = 0..max observed count. The tv_distance lumps
  // the tail mass P(X >= max) into the final bucket before comparing.
  std::vector<double> poisson_reference;
  double tv_distance = 0.0;
  double simple_fraction = 0.0;  // histogram[0] / samples
  double e_minus_2 = kEMinusTwo;
  double mean_intervals = 0.0;
  double large_interval_fraction = 0.0;  // samples with an interval of size >= 3
  // Reminder that the comparison thresholds are finite-n engineering
  // tolerances, not limits claimed by the underlying asymptotics.
  std::string note;
};

/// Monte Carlo experiment over `samples` random permutations of length n.
/// Bit-identical for identical (n, samples, seed) regardless of workers.
StatsReport interval_count_experiment(int n, long long samples,
                                      std::uint64_t seed, int workers = 1);

/// Same report over all n! permutations instead of sampling.
/// Throws TooLarge beyond the guard.
StatsReport interval_count_exhaustive(int n, int guard = kTrendGuard);

/// Growth of the mean inessential-entry count with length.
struct TrendRow {
  int n = 0;
  long long simple_count = 0;
  long long total_inessential = 0;
  double mean_inessential = 0.0;
  double mean_over_n = 0.0;
  // total_inessential re-derived as the simple-extension-slot sum over
  // simple permutations of length n-1; absent when n-1 < 4.
  std::optional<bool> cross_validated;
};

struct InessentialTrend {
  std::vector<TrendRow> rows;
};

/// Exhaustive rows for lengths min_n..max_n. min_n may be lowered to 4
/// (the row is all zeros there). Throws TooLarge beyond the guard.
InessentialTrend inessential_trend(int max_n, int min_n = 5,
                                   int guard = kTrendGuard);

}  // namespace permsimple
