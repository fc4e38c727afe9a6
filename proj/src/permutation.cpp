#include "permsimple/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace permsimple {
namespace {

// Triple encoding of a symmetry: (transpose, flip positions, flip values),
// applied to a plot point in that order.
struct Triple {
  bool t, fp, fv;
};

Triple triple_of(Symmetry s) {
  switch (s) {
    case Symmetry::Identity:
      return {false, false, false};
    case Symmetry::Reverse:
      return {false, true, false};
    case Symmetry::Complement:
      return {false, false, true};
    case Symmetry::ReverseComplement:
      return {false, true, true};
    case Symmetry::Inverse:
      return {true, false, false};
    case Symmetry::InverseReverse:
      return {true, true, false};
    case Symmetry::InverseComplement:
      return {true, false, true};
    case Symmetry::InverseReverseComplement:
      return {true, true, true};
  }
  throw BadArguments("unknown symmetry");
}

Symmetry from_triple(Triple tr) {
  for (Symmetry s : kAllSymmetries) {
    Triple c = triple_of(s);
    if (c.t == tr.t && c.fp == tr.fp && c.fv == tr.fv) return s;
  }
  throw BadArguments("unreachable symmetry triple");
}

}  // namespace

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Identity:
      return "identity";
    case Symmetry::Reverse:
      return "reverse";
    case Symmetry::Complement:
      return "complement";
    case Symmetry::ReverseComplement:
      return "reverse-complement";
    case Symmetry::Inverse:
      return "inverse";
    case Symmetry::InverseReverse:
      return "inverse-reverse";
    case Symmetry::InverseComplement:
      return "inverse-complement";
    case Symmetry::InverseReverseComplement:
      return "inverse-reverse-complement";
  }
  return "?";
}

std::optional<Symmetry> symmetry_from_name(std::string_view name) {
  for (Symmetry s : kAllSymmetries)
    if (name == symmetry_name(s)) return s;
  return std::nullopt;
}

Symmetry compose(Symmetry a, Symmetry b) {
  Triple ta = triple_of(a), tb = triple_of(b);
  Triple r{};
  r.t = ta.t != tb.t;
  if (tb.t) {
    // b transposes, so a's value flip lands on b's position axis and
    // vice versa.
    r.fp = ta.fv != tb.fp;
    r.fv = ta.fp != tb.fv;
  } else {
    r.fp = ta.fp != tb.fp;
    r.fv = ta.fv != tb.fv;
  }
  return from_triple(r);
}

Symmetry inverse_of(Symmetry s) {
  for (Symmetry c : kAllSymmetries)
    if (compose(s, c) == Symmetry::Identity) return c;
  throw BadArguments("symmetry without inverse");  // unreachable
}

EntryRef transform_entry(EntryRef e, Symmetry s, int n) {
  if (n < 1) throw BadArguments("transform_entry: n must be positive");
  if (e.position < 1 || e.position > n || e.value < 1 || e.value > n)
    throw OutOfRange("transform_entry: entry outside 1..n");
  Triple tr = triple_of(s);
  int x = e.position, y = e.value;
  if (tr.t) std::swap(x, y);
  if (tr.fp) x = n + 1 - x;
  if (tr.fv) y = n + 1 - y;
  return EntryRef{x, y};
}

Permutation Permutation::from_sequence(std::vector<int> seq) {
  if (seq.empty()) throw NotAPermutation("empty sequence");
  const int n = static_cast<int>(seq.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : seq) {
    if (v < 1 || v > n)
      throw NotAPermutation("value " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v) - 1])
      throw NotAPermutation("duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  return Permutation(std::move(seq));
}

Permutation Permutation::parse(std::string_view text) {
  // Strip surrounding whitespace first so offsets refer to the given text.
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (begin == end) throw ParseError("empty input", 0);

  std::string_view body = text.substr(begin, end - begin);
  bool all_digits = true;
  for (char ch : body)
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      all_digits = false;
      break;
    }

  std::vector<int> seq;
  if (all_digits && body.size() >= 2) {
    // Compact form: one digit per entry. Only meaningful for n <= 9;
    // longer inputs fail rank validation naturally.
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (body[k] == '0')
        throw ParseError("digit 0 is not a valid rank", begin + k);
      seq.push_back(body[k] - '0');
    }
  } else {
    std::size_t k = 0;
    bool expect_token = true;
    while (k < body.size()) {
      char ch = body[k];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++k;
        continue;
      }
      if (ch == ',') {
        if (expect_token)
          throw ParseError("expected a number before ','", begin + k);
        expect_token = true;
        ++k;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         begin + k);
      std::size_t start = k;
      long val = 0;
      while (k < body.size() &&
             std::isdigit(static_cast<unsigned char>(body[k]))) {
        val = val * 10 + (body[k] - '0');
        if (val > 1000000)
          throw ParseError("number too large", begin + start);
        ++k;
      }
      seq.push_back(static_cast<int>(val));
      expect_token = false;
    }
    if (expect_token && !seq.empty())
      throw ParseError("trailing ','", begin + body.size() - 1);
    if (seq.empty()) throw ParseError("no numbers found", begin);
  }

  return from_sequence(std::move(seq));  // NotAPermutation propagates as-is
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw BadArguments("identity: n must be positive");
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) seq[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(seq));
}

Permutation Permutation::from_bijection_unchecked(std::vector<int> seq) {
  return Permutation(std::move(seq));
}

int Permutation::value_at(int position) const {
  if (position < 1 || position > size())
    throw OutOfRange("position " + std::to_string(position) +
                     " outside 1.." + std::to_string(size()));
  return vals_[static_cast<std::size_t>(position) - 1];
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size())
    throw OutOfRange("value " + std::to_string(value) + " outside 1.." +
                     std::to_string(size()));
  for (int k = 0; k < size(); ++k)
    if (vals_[static_cast<std::size_t>(k)] == value) return k + 1;
  throw OutOfRange("value not found");  // unreachable for valid state
}

std::vector<EntryRef> Permutation::entries() const {
  std::vector<EntryRef> out;
  out.reserve(vals_.size());
  for (int k = 0; k < size(); ++k)
    out.push_back(EntryRef{k + 1, vals_[static_cast<std::size_t>(k)]});
  return out;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (int k = 0; k < size(); ++k) {
    if (k) os << ' ';
    os << vals_[static_cast<std::size_t>(k)];
  }
  return os.str();
}

Permutation remove_entry(const Permutation& p, int position) {
  if (p.size() == 1)
    throw Underflow("cannot remove the only entry of a length-1 permutation");
  const int removed = p.value_at(position);  // validates position
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(p.size()) - 1);
  for (int k = 1; k <= p.size(); ++k) {
    if (k == position) continue;
    int v = p.value_at(k);
    seq.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::from_bijection_unchecked(std::move(seq));
}

Permutation insert_entry(const Permutation& p, Slot s) {
  const int n = p.size();
  if (s.position < 1 || s.position > n + 1)
    throw OutOfRange("slot position " + std::to_string(s.position) +
                     " outside 1.." + std::to_string(n + 1));
  if (s.value < 1 || s.value > n + 1)
    throw OutOfRange("slot value " + std::to_string(s.value) + " outside 1.." +
                     std::to_string(n + 1));
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n + 1; ++k) {
    if (k == s.position) {
      seq.push_back(s.value);
      continue;
    }
    int v = p.value_at(k < s.position ? k : k - 1);
    seq.push_back(v >= s.value ? v + 1 : v);
  }
  return Permutation::from_bijection_unchecked(std::move(seq));
}

Permutation subpattern(const Permutation& p, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  if (positions.empty()) throw EmptySet("subpattern of no positions");
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (int pos : positions) picked.push_back(p.value_at(pos));
  // Renormalize ranks: replace each value by its rank among the picked.
  std::vector<int> sorted = picked;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> seq;
  seq.reserve(picked.size());
  for (int v : picked) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    seq.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation::from_bijection_unchecked(std::move(seq));
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> seq(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    EntryRef e = transform_entry(p.entry(k), s, n);
    seq[static_cast<std::size_t>(e.position) - 1] = e.value;
  }
  return Permutation::from_bijection_unchecked(std::move(seq));
}

RectHull rect_hull(const Permutation& p, std::span<const EntryRef> entries) {
  if (entries.empty()) throw EmptySet("hull of no entries");
  RectHull h{entries[0].position, entries[0].position, entries[0].value,
             entries[0].value};
  for (const EntryRef& e : entries) {
    if (!p.contains(e))
      throw BadArguments("entry (" + std::to_string(e.position) + ", " +
                         std::to_string(e.value) +
                         ") does not belong to the permutation");
    h.pmin = std::min(h.pmin, e.position);
    h.pmax = std::max(h.pmax, e.position);
    h.vmin = std::min(h.vmin, e.value);
    h.vmax = std::max(h.vmax, e.value);
  }
  return h;
}

std::vector<EntryRef> entries_in_hull(const Permutation& p,
                                      const RectHull& h) {
  if (h.pmin < 1 || h.pmax > p.size() || h.vmin < 1 || h.vmax > p.size() ||
      h.pmin > h.pmax || h.vmin > h.vmax)
    throw OutOfRange("hull bounds outside the permutation");
  std::vector<EntryRef> out;
  for (int k = h.pmin; k <= h.pmax; ++k) {
    int v = p.value_at(k);
    if (v >= h.vmin && v <= h.vmax) out.push_back(EntryRef{k, v});
  }
  return out;
}

}  // namespace permsimple
