#pragma once

// Brute-force realisation of the Coxeter groups B_N and D_n as signed
// permutations, used to compute descent-algebra products straight from
// Solomon's definition.
//
// Conventions: (x*y)(i) = x(y(i)); a right descent of w is a generator s with
// l(ws) < l(w); X_J = {w : no right descent in J}; B_q = X_{J^c} where J is
// the generator subset matched with q.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/composition.hpp"

namespace descalg {

class SignedPermutation {
 public:
  /// Window [w(1), ..., w(n)]; throws InvalidIndexError unless |w| is a
  /// permutation of 1..n (with an even number of negatives for type D).
  SignedPermutation(std::vector<int> window, CoxeterType type);
  static SignedPermutation identity(int n, CoxeterType type);

  int size() const { return static_cast<int>(window_.size()); }
  CoxeterType type() const { return type_; }
  std::span<const int> window() const { return window_; }
  /// Value at i for i in {-n..-1, 1..n}, with w(-i) = -w(i).
  int operator()(int i) const;
  int negatives() const;
  bool is_identity() const;
  SignedPermutation inverse() const;

  /// Composition x*y: apply y first.
  friend SignedPermutation operator*(const SignedPermutation& x, const SignedPermutation& y);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
  CoxeterType type_;
};

/// Coxeter generators, index 0 the branch generator (s_1' = [-2,-1,3,..,n]
/// for D, t = [-1,2,..,N] for B), index i the swap of positions i and i+1.
std::vector<SignedPermutation> generators(int n, CoxeterType type);

/// Coxeter matrix entry m(a, b) of the diagram, generators indexed as above.
int coxeter_exponent(CoxeterType type, int n, int a, int b);

using ElementId = std::uint32_t;

struct TableLimits {
  int max_rank_d = 7;
  int max_rank_b = 5;
};

/// Every group element with its Cayley-graph length and descent sets.
/// Element ids are a perfect hash of the window (rank of |w| times the sign
/// patterns, plus the sign bits).
class GroupTable {
 public:
  static constexpr std::uint32_t kFormatVersion = 1;

  static GroupTable build(CoxeterType type, int n, TableLimits limits = {});
  /// nullopt if the file is missing, stale or for a different group.
  static std::optional<GroupTable> load(const std::filesystem::path& file, CoxeterType type, int n);
  bool save(const std::filesystem::path& file) const;

  CoxeterType type() const { return type_; }
  int rank() const { return n_; }
  std::size_t size() const { return length_.size(); }
  std::size_t generator_count() const { return static_cast<std::size_t>(n_); }

  ElementId identity() const { return identity_; }
  ElementId index_of(const SignedPermutation& w) const;
  SignedPermutation element(ElementId id) const;
  ElementId multiply(ElementId x, ElementId y) const;
  ElementId inverse(ElementId x) const { return inverse_[x]; }
  ElementId generator(int k) const { return generators_[static_cast<std::size_t>(k)]; }
  /// x * s_k.
  ElementId right_multiply(ElementId x, int k) const {
    return right_[static_cast<std::size_t>(x) * generator_count() + static_cast<std::size_t>(k)];
  }

  int length(ElementId x) const { return length_[x]; }
  /// Generator masks: bit 0 the branch generator, bit i for s_i.
  std::uint32_t right_descents(ElementId x) const { return right_descents_[x]; }
  std::uint32_t left_descents(ElementId x) const { return right_descents_[inverse_[x]]; }

 private:
  GroupTable(CoxeterType type, int n);
  void fill_structure();

  CoxeterType type_;
  int n_;
  ElementId identity_ = 0;
  std::vector<std::int8_t> windows_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint8_t> length_;
  std::vector<std::uint32_t> right_descents_;
};

/// Builds tables on demand and keeps them for the lifetime of the store;
/// optionally persists them under a cache directory. Thread-safe.
class TableStore {
 public:
  explicit TableStore(TableLimits limits = {}, std::optional<std::filesystem::path> cache_dir = {});

  const GroupTable& get(CoxeterType type, int n);
  const TableLimits& limits() const { return limits_; }

 private:
  TableLimits limits_;
  std::optional<std::filesystem::path> cache_dir_;
  std::mutex mutex_;
  std::map<std::pair<CoxeterType, int>, std::unique_ptr<GroupTable>> tables_;
};

/// Minimal coset representatives X_J.
std::vector<ElementId> x_set(const GeneratorSet& j, const GroupTable& table);
/// |W_J| by breadth-first search over the generators in J.
std::size_t parabolic_order(const GeneratorSet& j, const GroupTable& table);

/// a_{JKL} for all L at once, keyed by the mask of L.
std::map<std::uint32_t, Coeff> structure_constants(const GeneratorSet& j, const GeneratorSet& k,
                                                  const GroupTable& table);
Coeff solomon_constant(const GeneratorSet& j, const GeneratorSet& k, const GeneratorSet& l,
                       const GroupTable& table);

/// Dense integer vector over the elements of one group.
class GroupAlgebraVector {
 public:
  explicit GroupAlgebraVector(const GroupTable& table);
  /// The formal sum of X_J.
  static GroupAlgebraVector formal_sum(const GeneratorSet& j, const GroupTable& table);

  const GroupTable& table() const { return *table_; }
  Coeff coefficient(ElementId x) const { return coeffs_[x]; }
  void add(ElementId x, Coeff c);

  friend GroupAlgebraVector operator*(const GroupAlgebraVector& a, const GroupAlgebraVector& b);
  friend bool operator==(const GroupAlgebraVector& a, const GroupAlgebraVector& b) {
    return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
  }

 private:
  const GroupTable* table_;
  std::vector<Coeff> coeffs_;
};

/// Coefficients a_M with v = sum_M a_M X_M, nonzero entries in mask order.
/// Throws NotInDescentAlgebraError if v is not constant on descent classes.
std::vector<std::pair<GeneratorSet, Coeff>> decompose_to_x_basis(const GroupAlgebraVector& v);

enum class OracleStrategy { Counting, Convolution };

AlgebraElement oracle_multiply(const BasisIndex& p, const BasisIndex& q, const GroupTable& table,
                               OracleStrategy strategy = OracleStrategy::Counting);
BAlgebraElement oracle_multiply_b(const Composition& p, const Composition& q, const GroupTable& table,
                                  OracleStrategy strategy = OracleStrategy::Counting);

/// |X_{J^c}|, the number of group elements in the basis element B_q.
std::size_t basis_size(const BasisIndex& b, const GroupTable& table);
std::size_t basis_size_b(const Composition& q, const GroupTable& table);

}  // namespace descalg
