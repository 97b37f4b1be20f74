#include "descalg/composition.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "descalg/error.hpp"

namespace descalg {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidIndexError("composition parts must be positive");
    weight_ += p;
  }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // Descending lexicographic within a weight.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::CLess: return "C<n";
    case ClassTag::C1: return "C1";
    case ClassTag::Cn: return "Cn";
    case ClassTag::CnPrime: return "Cn'";
  }
  return "?";
}

ClassTag class_of(const Composition& q, bool primed, int n) {
  if (n < 2) throw InvalidIndexError("type D rank must be at least 2");
  const int w = q.weight();
  if (w > n) throw InvalidIndexError("composition weight exceeds the rank");
  if (w == n - 1) throw InvalidIndexError("no basis element has weight n-1");
  if (primed) {
    if (w != n) throw InvalidIndexError("a prime requires weight n");
    if (q.first() < 2) throw InvalidIndexError("a prime requires a first part of at least 2");
    return ClassTag::CnPrime;
  }
  if (w <= n - 2) return ClassTag::CLess;
  return q.first() == 1 ? ClassTag::C1 : ClassTag::Cn;
}

BasisIndex::BasisIndex(Composition q, bool primed, int n)
    : q_(std::move(q)), primed_(primed), n_(n), tag_(class_of(q_, primed, n)) {}

std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  return a.primed_ <=> b.primed_;
}

GeneratorSet::GeneratorSet(int rank) : rank_(rank) {
  if (rank < 0 || rank > 31) throw InvalidIndexError("generator set rank out of range");
}

GeneratorSet GeneratorSet::full(int rank) {
  GeneratorSet s(rank);
  if (rank == 0) return s;
  s.branch_ = true;
  for (int i = 1; i < rank; ++i) s.plain_ |= 1u << i;
  return s;
}

GeneratorSet GeneratorSet::from_mask(int rank, std::uint32_t mask) {
  GeneratorSet s(rank);
  if (rank < 32 && (mask >> rank) != 0) throw InvalidIndexError("mask names generators outside S");
  s.branch_ = (mask & 1u) != 0;
  s.plain_ = mask & ~1u;
  return s;
}

bool GeneratorSet::contains(int i) const {
  return i >= 1 && i < rank_ && ((plain_ >> i) & 1u) != 0;
}

GeneratorSet& GeneratorSet::insert_branch() {
  if (rank_ == 0) throw InvalidIndexError("rank 0 has no generators");
  branch_ = true;
  return *this;
}

GeneratorSet& GeneratorSet::insert(int i) {
  if (i < 1 || i >= rank_) throw InvalidIndexError("generator subscript out of range: " + std::to_string(i));
  plain_ |= 1u << i;
  return *this;
}

std::size_t GeneratorSet::size() const {
  return static_cast<std::size_t>(std::popcount(plain_)) + (branch_ ? 1 : 0);
}

std::uint32_t GeneratorSet::mask() const { return plain_ | (branch_ ? 1u : 0u); }

std::vector<int> GeneratorSet::plain() const {
  std::vector<int> out;
  for (int i = 1; i < rank_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

namespace {

// s at each of start, start+parts[from], start+parts[from]+parts[from+1], ...
// for the first `count` partial sums.
void insert_partial_sums(GeneratorSet& j, const Composition& q, int start, std::size_t from,
                         std::size_t count) {
  int pos = start;
  for (std::size_t c = 0; c < count; ++c) {
    j.insert(pos);
    if (from + c < q.size()) pos += q[from + c];
  }
}

// Differences of the ascending positions, closed off by `total`.
std::vector<int> gaps(int origin, const std::vector<int>& positions, int total) {
  std::vector<int> parts;
  int prev = origin;
  for (int p : positions) {
    parts.push_back(p - prev);
    prev = p;
  }
  parts.push_back(total - prev);
  return parts;
}

}  // namespace

GeneratorSet subset_of(const BasisIndex& b) {
  const Composition& q = b.composition();
  const int n = b.rank();
  const std::size_t k = q.size();
  GeneratorSet j(n);
  switch (b.class_tag()) {
    case ClassTag::CLess:
      if (k > 0) insert_partial_sums(j, q, n - q.weight(), 0, k);
      break;
    case ClassTag::C1:
      j.insert_branch().insert(1);
      if (k > 2) insert_partial_sums(j, q, 1 + q[1], 2, k - 2);
      break;
    case ClassTag::Cn:
      j.insert_branch();
      if (k > 1) insert_partial_sums(j, q, q[0], 1, k - 1);
      break;
    case ClassTag::CnPrime:
      j.insert(1);
      if (k > 1) insert_partial_sums(j, q, q[0], 1, k - 1);
      break;
  }
  if (j.size() != k) throw InvariantViolation("bijection produced a subset of the wrong size");
  return j;
}

BasisIndex index_of_subset(const GeneratorSet& j) {
  const int n = j.rank();
  if (n < 2) throw InvalidIndexError("type D rank must be at least 2");
  const bool branch = j.has_branch();
  const bool s1 = j.contains(1);
  std::vector<int> rest;
  for (int i : j.plain())
    if (i != 1) rest.push_back(i);
  try {
    if (!branch && !s1) {
      if (rest.empty()) return BasisIndex(Composition{}, false, n);
      std::vector<int> tail(rest.begin() + 1, rest.end());
      return BasisIndex(Composition(gaps(rest.front(), tail, n)), false, n);
    }
    if (branch && s1) {
      std::vector<int> parts{1};
      for (int p : gaps(1, rest, n)) parts.push_back(p);
      return BasisIndex(Composition(std::move(parts)), false, n);
    }
    return BasisIndex(Composition(gaps(0, rest, n)), s1, n);
  } catch (const InvalidIndexError& e) {
    throw InvariantViolation(std::string("generator subset has no preimage: ") + e.what());
  }
}

GeneratorSet complement(const GeneratorSet& j) {
  return GeneratorSet::from_mask(j.rank(), GeneratorSet::full(j.rank()).mask() & ~j.mask());
}

namespace {

void compositions_of(int m, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (m == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= m; ++first) {
    prefix.push_back(first);
    compositions_of(m - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Composition> compositions_upto(int max_weight, int skip_weight) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  for (int m = 0; m <= max_weight; ++m) {
    if (m == skip_weight) continue;
    compositions_of(m, prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BasisIndex> enumerate_basis(int n) {
  if (n < 2) throw InvalidIndexError("type D rank must be at least 2");
  std::vector<BasisIndex> out;
  for (const Composition& q : compositions_upto(n, n - 1)) {
    out.emplace_back(q, false, n);
    if (q.weight() == n && q.first() >= 2) out.emplace_back(q, true, n);
  }
  return out;
}

GeneratorSet b_subset_of(const Composition& q, int rank) {
  if (q.weight() > rank) throw InvalidIndexError("composition weight exceeds the type B rank");
  GeneratorSet j(rank);
  int pos = rank - q.weight();
  for (std::size_t c = 0; c < q.size(); ++c) {
    if (pos == 0)
      j.insert_branch();
    else
      j.insert(pos);
    pos += q[c];
  }
  return j;
}

Composition b_index_of_subset(const GeneratorSet& j) {
  std::vector<int> positions = j.plain();
  if (j.has_branch()) positions.insert(positions.begin(), 0);
  if (positions.empty()) return Composition{};
  std::vector<int> tail(positions.begin() + 1, positions.end());
  return Composition(gaps(positions.front(), tail, j.rank()));
}

std::vector<Composition> enumerate_b_basis(int rank) {
  if (rank < 0) throw InvalidIndexError("type B rank must be non-negative");
  return compositions_upto(rank, -1);
}

namespace {

struct ParsedText {
  std::vector<int> parts;
  bool primed = false;
};

ParsedText parse_text(std::string_view text) {
  auto fail = [&](std::string_view why) {
    throw ParseError("cannot parse index \"" + std::string(text) + "\": " + std::string(why));
  };
  ParsedText out;
  std::size_t pos = 0;
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + pos) fail("expected an integer");
      if (text[pos] == '+' || text[pos] == '-') fail("expected an unsigned integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      out.parts.push_back(value);
      if (pos >= text.size()) fail("unterminated list");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  if (pos < text.size() && text[pos] == '\'') {
    out.primed = true;
    ++pos;
  }
  if (pos != text.size()) fail("trailing characters");
  for (int p : out.parts)
    if (p < 1) throw InvalidIndexError("composition parts must be positive");
  return out;
}

}  // namespace

BasisIndex parse_index(std::string_view text, int n) {
  ParsedText parsed = parse_text(text);
  return BasisIndex(Composition(std::move(parsed.parts)), parsed.primed, n);
}

Composition parse_composition(std::string_view text) {
  ParsedText parsed = parse_text(text);
  if (parsed.primed) throw InvalidIndexError("type B indices carry no prime");
  return Composition(std::move(parsed.parts));
}

std::string format_composition(const Composition& q) {
  std::string out = "[";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(q[i]);
  }
  out += ']';
  return out;
}

std::string format_index(const BasisIndex& b) {
  std::string out = format_composition(b.composition());
  if (b.primed()) out += '\'';
  return out;
}

std::string format_generators(const GeneratorSet& j, CoxeterType type) {
  if (j.size() == 0) return "∅";
  std::string out = "{";
  bool first = true;
  auto emit = [&](const std::string& name) {
    if (!first) out += ',';
    out += name;
    first = false;
  };
  if (j.has_branch()) emit(type == CoxeterType::D ? "s_1'" : "t");
  for (int i : j.plain()) emit("s_" + std::to_string(i));
  out += '}';
  return out;
}

}  // namespace descalg
