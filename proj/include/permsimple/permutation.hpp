#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permsimple {

// Error hierarchy. Every precondition violation throws one of these;
// the CLI maps them onto exit codes (2 for bad input, 3 for guard limits).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAPermutation : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct Underflow : Error {
  using Error::Error;
};
struct EmptySet : Error {
  using Error::Error;
};
struct NotDistinct : Error {
  using Error::Error;
};
struct BadArguments : Error {
  using Error::Error;
};
struct NotSimple : Error {
  using Error::Error;
};
struct NotAParallelAlternation : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct TooSmall : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg), position(pos) {}
  std::size_t position;  // 0-based character offset of the offending token
};

/// One point of a permutation plot, named by both coordinates.
/// Positions and values are 1-based everywhere in the public API.
struct EntryRef {
  int position = 0;
  int value = 0;
  friend auto operator<=>(const EntryRef&, const EntryRef&) = default;
};

/// An insertion slot for a one-point extension of a length-n permutation:
/// the new entry lands at `position` and receives rank `value` in the
/// extended permutation (existing values >= value shift up by one).
struct Slot {
  int position = 0;  // 1..n+1
  int value = 0;     // 1..n+1
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Axis-aligned bounding box of a set of entries: position range x value range.
struct RectHull {
  int pmin = 0, pmax = 0;
  int vmin = 0, vmax = 0;
  bool contains(EntryRef e) const {
    return pmin <= e.position && e.position <= pmax && vmin <= e.value &&
           e.value <= vmax;
  }
  friend auto operator<=>(const RectHull&, const RectHull&) = default;
};

// The eight symmetries of the square acting on permutation plots, generated
// by reverse r (position flip), complement c (value flip) and inverse i
// (diagonal flip). Composition is left-to-right: compose(a, b) means
// "apply a, then b". The full table (rows a, columns b):
//
//            e    r    c    rc   i    ir   ic   irc
//   e        e    r    c    rc   i    ir   ic   irc
//   r        r    e    rc   c    ic   irc  i    ir
//   c        c    rc   e    r    ir   i    irc  ic
//   rc       rc   c    r    e    irc  ic   ir   i
//   i        i    ir   ic   irc  e    r    c    rc
//   ir       ir   i    irc  ic   c    rc   e    r
//   ic       ic   irc  i    ir   r    e    rc   c
//   irc      irc  ic   ir   i    rc   c    r    e
enum class Symmetry {
  Identity,
  Reverse,
  Complement,
  ReverseComplement,
  Inverse,
  InverseReverse,
  InverseComplement,
  InverseReverseComplement,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity,
    Symmetry::Reverse,
    Symmetry::Complement,
    Symmetry::ReverseComplement,
    Symmetry::Inverse,
    Symmetry::InverseReverse,
    Symmetry::InverseComplement,
    Symmetry::InverseReverseComplement,
};

const char* symmetry_name(Symmetry s);
std::optional<Symmetry> symmetry_from_name(std::string_view name);

/// compose(a, b): the symmetry equivalent to applying a and then b.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse_of(Symmetry s);

/// Image of a single plot point under a symmetry of the n x n square.
EntryRef transform_entry(EntryRef e, Symmetry s, int n);

/// A permutation of {1..n} in one-line notation, n >= 1. Immutable value
/// type; all operations that "modify" a permutation return a new one.
class Permutation {
 public:
  /// Validates that seq is a bijection on 1..n. Throws NotAPermutation
  /// on duplicates, out-of-range values or an empty sequence.
  static Permutation from_sequence(std::vector<int> seq);

  /// Accepts whitespace-separated ("2 4 1 3"), comma-separated ("2,4,1,3")
  /// or compact digit form ("2413", only possible for n <= 9).
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  /// Wraps a sequence the caller guarantees is already a bijection on 1..n
  /// (e.g. produced by a shuffle or by next_permutation). No validation.
  static Permutation from_bijection_unchecked(std::vector<int> seq);

  int size() const { return static_cast<int>(vals_.size()); }

  /// Value at a 1-based position. Throws OutOfRange.
  int value_at(int position) const;

  /// 1-based position of a value. Throws OutOfRange.
  int position_of(int value) const;

  /// One-line notation, 1-based ranks indexed by position (0-based storage).
  const std::vector<int>& one_line() const { return vals_; }

  EntryRef entry(int position) const {
    return EntryRef{position, value_at(position)};
  }
  bool contains(EntryRef e) const {
    return e.position >= 1 && e.position <= size() &&
           vals_[static_cast<std::size_t>(e.position) - 1] == e.value;
  }
  std::vector<EntryRef> entries() const;

  /// Whitespace-separated one-line form, e.g. "2 4 1 3".
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> vals) : vals_(std::move(vals)) {}
  std::vector<int> vals_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    // FNV-1a over the rank sequence
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.one_line()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Removes the entry at 1-based position p and renormalizes ranks.
/// Throws Underflow when n = 1, OutOfRange for a bad position.
Permutation remove_entry(const Permutation& p, int position);

/// One-point extension at the given slot; exact inverse of remove_entry:
/// remove_entry(insert_entry(p, s), s.position) == p.
Permutation insert_entry(const Permutation& p, Slot s);

/// Renormalized sub-permutation induced by a nonempty set of positions
/// (duplicates ignored). Throws OutOfRange / EmptySet.
Permutation subpattern(const Permutation& p, std::vector<int> positions);

Permutation apply_symmetry(const Permutation& p, Symmetry s);

/// Bounding box of a nonempty set of entries of p.
/// Throws EmptySet, or BadArguments if some entry does not belong to p.
RectHull rect_hull(const Permutation& p, std::span<const EntryRef> entries);

/// All entries of p inside the box, ordered by position.
/// Throws OutOfRange if the hull bounds leave 1..n.
std::vector<EntryRef> entries_in_hull(const Permutation& p, const RectHull& h);

}  // namespace permsimple
