#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "permsimple/classify.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/intervals.hpp"
#include "permsimple/permutation.hpp"

using namespace permsimple;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

std::vector<Permutation> everything(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_bijection_unchecked(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

/// Every parallel alternation of length n, built directly: the two
/// low-first/high-first interleavings of 1..n/2 with n/2+1..n, closed
/// under the eight symmetries.
std::set<Permutation> constructed_alternations(int n) {
  const int half = n / 2;
  std::set<Permutation> out;
  for (bool low_first : {true, false}) {
    std::vector<int> seq;
    int lo = 1;
    int hi = half + 1;
    for (int k = 1; k <= n; ++k) {
      bool is_low = (k % 2 == 1) == low_first;
      seq.push_back(is_low ? lo++ : hi++);
    }
    Permutation base = Permutation::from_bijection_unchecked(std::move(seq));
    for (Symmetry s : kAllSymmetries) out.insert(apply_symmetry(base, s));
  }
  return out;
}

/// Set interval test from first principles: contiguous positions and
/// contiguous values.
bool entry_set_is_interval(const std::vector<EntryRef>& xs) {
  std::vector<int> ps, vs;
  for (const EntryRef& e : xs) {
    ps.push_back(e.position);
    vs.push_back(e.value);
  }
  std::sort(ps.begin(), ps.end());
  std::sort(vs.begin(), vs.end());
  for (std::size_t k = 1; k < ps.size(); ++k)
    if (ps[k] != ps[k - 1] + 1 || vs[k] != vs[k - 1] + 1) return false;
  return true;
}

}  // namespace

TEST_CASE("recognition witnesses on fixed inputs") {
  auto w = is_parallel_alternation(P("2413"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Value);
  CHECK(w->direction == Direction::Decreasing);
  CHECK(w->halves == std::vector<int>{0, 1, 0, 1});

  w = is_parallel_alternation(P("3142"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Value);
  CHECK(w->direction == Direction::Increasing);
  CHECK(w->halves == std::vector<int>{1, 0, 1, 0});

  w = is_parallel_alternation(P("1324"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Value);
  CHECK(w->direction == Direction::Increasing);
  CHECK(w->halves == std::vector<int>{0, 1, 0, 1});

  w = is_parallel_alternation(P("246135"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Position);
  CHECK(w->direction == Direction::Increasing);
  CHECK(w->halves == std::vector<int>{0, 0, 0, 1, 1, 1});

  w = is_parallel_alternation(P("21"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Value);
  CHECK(w->direction == Direction::Increasing);
  CHECK(w->halves == std::vector<int>{1, 0});

  CHECK(is_parallel_alternation(P("12")).has_value());
  CHECK(!is_parallel_alternation(P("2143")).has_value());
  CHECK(!is_parallel_alternation(P("1")).has_value());
  CHECK(!is_parallel_alternation(P("123")).has_value());
  CHECK(!is_parallel_alternation(P("24153")).has_value());
  CHECK(!is_parallel_alternation(P("1234")).has_value());
  CHECK(!is_parallel_alternation(P("3412")).has_value());
}

TEST_CASE("value split probes win over position split") {
  // 2413 is both a value-split decreasing and a position-split increasing
  // alternation; the probe order fixes which certificate comes back.
  auto w = is_parallel_alternation(P("2413"));
  REQUIRE(w.has_value());
  CHECK(w->axis == SplitAxis::Value);
}

TEST_CASE("canonical alternation construction") {
  CHECK(canonical_parallel_alternation(1) == P("21"));
  CHECK(canonical_parallel_alternation(2) == P("3142"));
  CHECK(canonical_parallel_alternation(3) == P("415263"));
  CHECK(canonical_parallel_alternation(4) == P("5 1 6 2 7 3 8 4"));
  CHECK(canonical_parallel_alternation(2, Symmetry::Reverse) == P("2413"));
  CHECK(canonical_parallel_alternation(2, Symmetry::Complement) == P("2413"));
  CHECK(canonical_parallel_alternation(2, Symmetry::Inverse) == P("2413"));
  CHECK_THROWS_AS(canonical_parallel_alternation(0), BadArguments);
  CHECK_THROWS_AS(canonical_parallel_alternation(-3), BadArguments);

  for (int half = 1; half <= 10; ++half) {
    for (Symmetry s : kAllSymmetries) {
      Permutation c = canonical_parallel_alternation(half, s);
      CHECK(c.size() == 2 * half);
      CHECK(is_parallel_alternation(c).has_value());
      if (half >= 2) CHECK(simple(c));
    }
  }
}

TEST_CASE("recognition sweep equals direct construction") {
  constexpr std::size_t expected_counts[] = {2, 4, 8, 8};  // n = 2, 4, 6, 8
  for (int n = 2; n <= 8; n += 2) {
    std::set<Permutation> recognized;
    for (const Permutation& p : everything(n))
      if (is_parallel_alternation(p)) recognized.insert(p);
    std::set<Permutation> built = constructed_alternations(n);
    CHECK(recognized == built);
    CHECK(recognized.size() == expected_counts[n / 2 - 1]);
  }
  // odd lengths: recognition never fires
  for (int n = 1; n <= 7; n += 2)
    for (const Permutation& p : everything(n))
      CHECK(!is_parallel_alternation(p).has_value());
}

TEST_CASE("the alternation family is closed under symmetry") {
  for (int n = 2; n <= 8; n += 2)
    for (const Permutation& p : constructed_alternations(n))
      for (Symmetry s : kAllSymmetries)
        CHECK(is_parallel_alternation(apply_symmetry(p, s)).has_value());
}

TEST_CASE("repair of fixed inputs") {
  AlternationRepair r = simplify_parallel_alternation(P("2413"));
  CHECK(r.removed.empty());
  CHECK(r.result == P("2413"));

  r = simplify_parallel_alternation(P("21"));
  CHECK(r.removed.empty());
  CHECK(r.result == P("21"));

  // 1324 needs two removals: no single deletion helps because length
  // three is never simple, and the first working pair in position order
  // is {(1,1), (2,3)}, leaving the pattern 12.
  r = simplify_parallel_alternation(P("1324"));
  REQUIRE(r.removed.size() == 2);
  CHECK(r.removed[0] == EntryRef{1, 1});
  CHECK(r.removed[1] == EntryRef{2, 3});
  CHECK(r.result == P("12"));

  CHECK_THROWS_AS(simplify_parallel_alternation(P("2143")),
                  NotAParallelAlternation);
  CHECK_THROWS_AS(simplify_parallel_alternation(P("123")),
                  NotAParallelAlternation);
  CHECK_THROWS_AS(simplify_parallel_alternation(P("1")),
                  NotAParallelAlternation);
}

TEST_CASE("every alternation through length ten repairs within two removals") {
  for (int n = 2; n <= 10; n += 2) {
    for (const Permutation& p : constructed_alternations(n)) {
      AlternationRepair r = simplify_parallel_alternation(p);
      CHECK(r.removed.size() <= 2);
      CHECK(simple(r.result));
      CHECK(r.result.size() == n - static_cast<int>(r.removed.size()));
      // removed entries really belong to p and the survivors give result
      std::vector<int> keep;
      for (int k = 1; k <= n; ++k) {
        bool dropped = std::any_of(
            r.removed.begin(), r.removed.end(),
            [&](const EntryRef& e) { return e.position == k; });
        CHECK(std::all_of(r.removed.begin(), r.removed.end(),
                          [&](const EntryRef& e) { return p.contains(e); }));
        if (!dropped) keep.push_back(k);
      }
      CHECK(subpattern(p, keep) == r.result);
      if (simple(p)) CHECK(r.removed.empty());
    }
  }
}

TEST_CASE("separation of entry pairs") {
  Permutation p = P("52413");
  // horizontal but not vertical: separates
  CHECK(separates(p, EntryRef{3, 4}, EntryRef{2, 2}, EntryRef{5, 3}));
  CHECK(separates(p, EntryRef{4, 1}, EntryRef{2, 2}, EntryRef{5, 3}));
  // both coordinates between: the exclusive-or fails
  CHECK(!separates(p, EntryRef{3, 4}, EntryRef{1, 5}, EntryRef{5, 3}));
  // neither coordinate between
  CHECK(!separates(p, EntryRef{1, 5}, EntryRef{2, 2}, EntryRef{3, 4}));
  // argument order of the separated pair is irrelevant
  CHECK(separates(p, EntryRef{3, 4}, EntryRef{5, 3}, EntryRef{2, 2}));

  CHECK_THROWS_AS(separates(p, EntryRef{1, 1}, EntryRef{2, 2}, EntryRef{5, 3}),
                  BadArguments);
  CHECK_THROWS_AS(separates(p, EntryRef{3, 4}, EntryRef{3, 4}, EntryRef{5, 3}),
                  NotDistinct);
}

TEST_CASE("separation of an entry from a set") {
  Permutation p = P("2413");
  std::vector<EntryRef> low = {EntryRef{1, 2}, EntryRef{3, 1}};
  CHECK(separates_set(p, EntryRef{2, 4}, low));
  // (4, 3) is outside the box but strictly between in neither coordinate
  CHECK(!separates_set(p, EntryRef{4, 3}, low));

  Permutation q = P("1234");
  std::vector<EntryRef> head = {EntryRef{1, 1}, EntryRef{2, 2}};
  CHECK(!separates_set(q, EntryRef{4, 4}, head));
  CHECK(!separates_set(q, EntryRef{3, 3}, head));

  // an entry inside the bounding box never separates the set
  Permutation r = P("25314");
  std::vector<EntryRef> X = {EntryRef{2, 5}, EntryRef{4, 1}, EntryRef{5, 4}};
  CHECK(!separates_set(r, EntryRef{3, 3}, X));
  CHECK(separates_set(r, EntryRef{1, 2}, X));

  CHECK_THROWS_AS(separates_set(p, EntryRef{2, 4}, std::vector<EntryRef>{
                                    EntryRef{1, 2}}),
                  BadArguments);
  CHECK_THROWS_AS(separates_set(p, EntryRef{1, 2}, low), BadArguments);
  CHECK_THROWS_AS(separates_set(p, EntryRef{1, 1}, low), BadArguments);
}

TEST_CASE("interval sets are exactly the unseparated hull-exact sets") {
  for (int n = 2; n <= 6; ++n) {
    for (const Permutation& p : everything(n)) {
      std::vector<EntryRef> all = p.entries();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<EntryRef> X;
        for (int k = 0; k < n; ++k)
          if (mask & (1u << k)) X.push_back(all[static_cast<std::size_t>(k)]);
        if (X.size() < 2 || X.size() >= static_cast<std::size_t>(n)) continue;

        RectHull h = rect_hull(p, X);
        bool hull_exact = entries_in_hull(p, h).size() == X.size();
        bool unseparated = true;
        for (const EntryRef& x : all) {
          bool member = std::find(X.begin(), X.end(), x) != X.end();
          if (!member && separates_set(p, x, X)) unseparated = false;
        }
        CHECK(entry_set_is_interval(X) == (hull_exact && unseparated));
      }
    }
  }
}

TEST_CASE("simple alternations of lengths four through eight have no "
          "inessential entries") {
  for (int n = 4; n <= 8; n += 2) {
    for (const Permutation& p : constructed_alternations(n)) {
      if (!simple(p)) continue;
      CHECK(inessential_entries(p).inessential_count() == 0);
    }
  }
  // length two is the boundary case: both entries of 21 are removable
  // because the single remaining entry is simple by convention.
  CHECK(inessential_entries(P("21")).inessential_count() == 2);
}
