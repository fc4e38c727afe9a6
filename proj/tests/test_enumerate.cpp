#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "permsimple/classify.hpp"
#include "permsimple/enumerate.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/intervals.hpp"
#include "permsimple/permutation.hpp"

using namespace permsimple;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

std::vector<Permutation> sorted(std::vector<std::string> texts) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(P(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("brute force counts and small sets") {
  constexpr long long expected[] = {1, 2, 0, 2, 6, 46, 338, 2926};
  for (int n = 1; n <= 8; ++n) {
    SimpleSet s = all_simple_bruteforce(n);
    CHECK(s.n == n);
    CHECK(s.method == Method::BruteForce);
    CHECK(s.count() == expected[n - 1]);
    CHECK(std::is_sorted(s.perms.begin(), s.perms.end()));
    CHECK(std::adjacent_find(s.perms.begin(), s.perms.end()) ==
          s.perms.end());
    for (const Permutation& p : s.perms) {
      CHECK(p.size() == n);
      CHECK(simple(p));
    }
  }

  CHECK(all_simple_bruteforce(1).perms == sorted({"1"}));
  CHECK(all_simple_bruteforce(2).perms == sorted({"12", "21"}));
  CHECK(all_simple_bruteforce(3).perms.empty());
  CHECK(all_simple_bruteforce(4).perms == sorted({"2413", "3142"}));
  CHECK(all_simple_bruteforce(5).perms ==
        sorted({"24153", "25314", "31524", "35142", "41352", "42513"}));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(all_simple_bruteforce(10), TooLarge);
  CHECK_THROWS_AS(all_simple_bruteforce(0), BadArguments);
  CHECK_THROWS_AS(all_simple_bruteforce(5, 4), TooLarge);
  CHECK_THROWS_AS(simple_via_extension(12), TooLarge);
  CHECK_THROWS_AS(simple_via_extension(0), BadArguments);
  CHECK_THROWS_AS(simple_via_extension(8, 7), TooLarge);
}

TEST_CASE("alternation seed sets") {
  CHECK(pa_seeds(1).perms.empty());
  CHECK(pa_seeds(3).perms.empty());
  CHECK(pa_seeds(7).perms.empty());
  CHECK(pa_seeds(2).perms == sorted({"12", "21"}));
  CHECK(pa_seeds(4).perms == sorted({"2413", "3142"}));
  CHECK(pa_seeds(6).perms ==
        sorted({"246135", "362514", "415263", "531642"}));
  CHECK(pa_seeds(8).perms ==
        sorted({"24681357", "48372615", "51627384", "75318642"}));

  for (int n = 6; n <= 12; n += 2) {
    SimpleSet s = pa_seeds(n);
    CHECK(s.count() == 4);
    for (const Permutation& p : s.perms) {
      CHECK(simple(p));
      CHECK(is_parallel_alternation(p).has_value());
    }
  }
}

TEST_CASE("seed sets are the simple alternations") {
  // against the recognition sweep, independently of the orbit construction
  for (int n = 2; n <= 8; n += 2) {
    std::set<Permutation> swept;
    for (const Permutation& p : all_simple_bruteforce(n).perms)
      if (is_parallel_alternation(p)) swept.insert(p);
    SimpleSet s = pa_seeds(n);
    CHECK(std::set<Permutation>(s.perms.begin(), s.perms.end()) == swept);
  }
}

TEST_CASE("extension enumeration matches brute force") {
  for (int n = 1; n <= 8; ++n) {
    SimpleSet ext = simple_via_extension(n);
    CHECK(ext.n == n);
    CHECK(ext.method == Method::Extension);
    CHECK(ext.perms == all_simple_bruteforce(n).perms);
  }
}

TEST_CASE("extension enumeration reaches length nine") {
  SimpleSet ext = simple_via_extension(9);
  CHECK(ext.count() == 28146);
  CHECK(ext.perms == all_simple_bruteforce(9).perms);
}

TEST_CASE("slot pruning is lossless") {
  for (int n = 4; n <= 7; ++n) {
    SimpleSet pruned = simple_via_extension(n, kExtensionGuard, true);
    SimpleSet full = simple_via_extension(n, kExtensionGuard, false);
    CHECK(pruned.perms == full.perms);
  }
}

TEST_CASE("the simple sets are closed under symmetry") {
  for (int n = 4; n <= 8; ++n) {
    SimpleSet s = all_simple_bruteforce(n);
    std::set<Permutation> members(s.perms.begin(), s.perms.end());
    for (const Permutation& p : s.perms)
      for (Symmetry sym : kAllSymmetries)
        CHECK(members.count(apply_symmetry(p, sym)) == 1);
  }
}

TEST_CASE("every simple permutation of length five extends one of length "
          "four") {
  // the length-five simple set is exactly the union of the simple
  // one-point extensions of 2413 and 3142
  std::set<Permutation> grown;
  for (const char* base : {"2413", "3142"})
    for (const Permutation& q : extension_analysis(P(base)).simple_results)
      grown.insert(q);
  SimpleSet five = all_simple_bruteforce(5);
  CHECK(grown ==
        std::set<Permutation>(five.perms.begin(), five.perms.end()));
}

TEST_CASE("alternations of length six are not one-point extensions") {
  // deleting any entry of a simple parallel alternation of length six
  // never leaves a simple permutation, which is why the growth step has
  // to union the seed sets in explicitly
  for (const Permutation& p : pa_seeds(6).perms) {
    for (int r = 1; r <= 6; ++r) CHECK(!simple(remove_entry(p, r)));
  }
}
