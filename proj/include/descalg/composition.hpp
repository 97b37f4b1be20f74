#pragma once

// Compositions, basis indices of the type D / type B descent algebras and the
// bijection between indices and subsets of Coxeter generators.
//
// Generator numbering used throughout: the branch generator (s_1' in type D,
// the sign change t in type B) is a separate flag; s_i for 1 <= i <= rank-1
// are the adjacent transpositions.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descalg {

enum class CoxeterType { B, D };

/// Ordered list of positive integers. Ordering is the canonical one used for
/// every serialized form: weight ascending, then parts lexicographically
/// descending ([1,3] before [1,2,1] before [1,1,2]).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return weight_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// First part; 0 for the empty composition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class ClassTag { CLess, C1, Cn, CnPrime };

std::string_view to_string(ClassTag tag);

/// Class of (q, primed) in rank n. Throws InvalidIndexError when the triple
/// names no basis element (weight n-1, weight > n, or an illegal prime).
ClassTag class_of(const Composition& q, bool primed, int n);

/// Basis element B_q (or B_q') of the type D descent algebra of rank n.
class BasisIndex {
 public:
  BasisIndex(Composition q, bool primed, int n);

  const Composition& composition() const { return q_; }
  bool primed() const { return primed_; }
  int rank() const { return n_; }
  ClassTag class_tag() const { return tag_; }
  int weight() const { return q_.weight(); }

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.n_ == b.n_ && a.primed_ == b.primed_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b);

 private:
  Composition q_;
  bool primed_;
  int n_;
  ClassTag tag_;
};

/// Subset of the generators {branch, s_1, ..., s_{rank-1}}.
class GeneratorSet {
 public:
  explicit GeneratorSet(int rank);
  static GeneratorSet full(int rank);
  /// Bit 0 is the branch generator, bit i is s_i.
  static GeneratorSet from_mask(int rank, std::uint32_t mask);

  int rank() const { return rank_; }
  bool has_branch() const { return branch_; }
  bool contains(int i) const;
  GeneratorSet& insert_branch();
  GeneratorSet& insert(int i);
  std::size_t size() const;
  std::uint32_t mask() const;
  /// Subscripts of the plain generators present, ascending.
  std::vector<int> plain() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int rank_;
  bool branch_ = false;
  std::uint32_t plain_ = 0;  // bit i <=> s_i
};

GeneratorSet subset_of(const BasisIndex& b);
BasisIndex index_of_subset(const GeneratorSet& j);
GeneratorSet complement(const GeneratorSet& j);

/// All 2^n basis indices of rank n in canonical order.
std::vector<BasisIndex> enumerate_basis(int n);

// Type B: compositions of weight <= N index the basis; q_0 = N - weight(q)
// and J = {partial sums q_0, q_0+q_1, ...} with 0 read as t.
GeneratorSet b_subset_of(const Composition& q, int rank);
Composition b_index_of_subset(const GeneratorSet& j);
std::vector<Composition> enumerate_b_basis(int rank);

/// Grammar: "[" (int ("," int)*)? "]" "'"?
BasisIndex parse_index(std::string_view text, int n);
std::string format_index(const BasisIndex& b);
/// Same grammar without the prime.
Composition parse_composition(std::string_view text);
std::string format_composition(const Composition& q);

/// "{s_1',s_1,s_3}" for type D, "{t,s_2}" for type B, "∅" when empty.
std::string format_generators(const GeneratorSet& j, CoxeterType type);

}  // namespace descalg
