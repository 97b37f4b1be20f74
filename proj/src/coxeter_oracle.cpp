#include "descalg/coxeter_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <numeric>

#include "descalg/error.hpp"

namespace descalg {

SignedPermutation::SignedPermutation(std::vector<int> window, CoxeterType type)
    : window_(std::move(window)), type_(type) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int w : window_) {
    const int a = std::abs(w);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw InvalidIndexError("window is not a signed permutation");
    seen[static_cast<std::size_t>(a)] = true;
  }
  if (type_ == CoxeterType::D && negatives() % 2 != 0)
    throw InvalidIndexError("type D windows need an even number of negative entries");
}

SignedPermutation SignedPermutation::identity(int n, CoxeterType type) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w), type);
}

int SignedPermutation::operator()(int i) const {
  const int v = window_.at(static_cast<std::size_t>(std::abs(i) - 1));
  return i > 0 ? v : -v;
}

int SignedPermutation::negatives() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int w) { return w < 0; }));
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i)
    if (window_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    const int w = window_[i];
    const int pos = static_cast<int>(i) + 1;
    inv[static_cast<std::size_t>(std::abs(w) - 1)] = w > 0 ? pos : -pos;
  }
  return SignedPermutation(std::move(inv), type_);
}

SignedPermutation operator*(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.type_ != y.type_ || x.size() != y.size())
    throw RankMismatchError("signed permutations from different groups");
  std::vector<int> out(x.window_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x(y.window_[i]);
  return SignedPermutation(std::move(out), x.type_);
}

std::vector<SignedPermutation> generators(int n, CoxeterType type) {
  if (type == CoxeterType::D && n < 2) throw InvalidIndexError("type D rank must be at least 2");
  if (type == CoxeterType::B && n < 1) throw InvalidIndexError("type B rank must be at least 1");
  std::vector<SignedPermutation> gens;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<int> branch = w;
  if (type == CoxeterType::D) {
    branch[0] = -2;
    branch[1] = -1;
  } else {
    branch[0] = -1;
  }
  gens.emplace_back(branch, type);
  for (int i = 1; i < n; ++i) {
    std::vector<int> s = w;
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    gens.emplace_back(std::move(s), type);
  }
  return gens;
}

int coxeter_exponent(CoxeterType type, int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidIndexError("generator index out of range");
  if (a == b) return 1;
  if (a > b) std::swap(a, b);
  if (a == 0) {
    if (type == CoxeterType::B) return b == 1 ? 4 : 2;
    return b == 2 ? 3 : 2;  // s_1' is joined to s_2 only
  }
  return b == a + 1 ? 3 : 2;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

int sign_bits(CoxeterType type, int n) { return type == CoxeterType::D ? n - 1 : n; }

void check_rank(CoxeterType type, int n, const TableLimits& limits) {
  if (type == CoxeterType::D) {
    if (n < 2) throw InvalidIndexError("type D rank must be at least 2");
    if (n > limits.max_rank_d) throw CapExceededError("type D rank exceeds the enumeration cap");
  } else {
    if (n < 1) throw InvalidIndexError("type B rank must be at least 1");
    if (n > limits.max_rank_b) throw CapExceededError("type B rank exceeds the enumeration cap");
  }
  if (n > 12) throw CapExceededError("rank too large for a dense group table");
}

template <typename Window>
ElementId rank_window(const Window& w, int n, CoxeterType type) {
  std::uint64_t lehmer = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    const int ai = std::abs(static_cast<int>(w[static_cast<std::size_t>(i)]));
    for (int j = i + 1; j < n; ++j)
      if (std::abs(static_cast<int>(w[static_cast<std::size_t>(j)])) < ai) ++smaller;
    lehmer = lehmer * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  const int bits = sign_bits(type, n);
  std::uint64_t signs = 0;
  for (int i = 0; i < bits; ++i)
    if (w[static_cast<std::size_t>(i)] < 0) signs |= std::uint64_t{1} << i;
  return static_cast<ElementId>((lehmer << bits) | signs);
}

void unrank_window(ElementId id, int n, CoxeterType type, std::int8_t* out) {
  const int bits = sign_bits(type, n);
  const std::uint64_t signs = id & ((std::uint64_t{1} << bits) - 1);
  std::uint64_t lehmer = id >> bits;
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(lehmer % base);
    lehmer /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    const auto d = static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]);
    int v = pool[d];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    bool negative;
    if (i < bits) {
      negative = ((signs >> i) & 1u) != 0;
    } else {
      negative = parity % 2 != 0;  // last sign of a type D window is forced
    }
    if (negative) ++parity;
    out[i] = static_cast<std::int8_t>(negative ? -v : v);
  }
}

}  // namespace

GroupTable::GroupTable(CoxeterType type, int n) : type_(type), n_(n) {
  const std::uint64_t order = factorial(n) << sign_bits(type, n);
  windows_.resize(order * static_cast<std::uint64_t>(n));
  for (std::uint64_t id = 0; id < order; ++id)
    unrank_window(static_cast<ElementId>(id), n, type, windows_.data() + id * static_cast<std::uint64_t>(n));
  length_.assign(order, 0);
  right_descents_.assign(order, 0);
}

void GroupTable::fill_structure() {
  identity_ = index_of(SignedPermutation::identity(n_, type_));
  generators_.clear();
  for (const auto& g : descalg::generators(n_, type_)) generators_.push_back(index_of(g));
  const std::size_t order = size();
  const std::size_t k = generator_count();
  right_.resize(order * k);
  inverse_.resize(order);
  std::vector<int> tmp(static_cast<std::size_t>(n_));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t g = 0; g < k; ++g) right_[x * k + g] = multiply(static_cast<ElementId>(x), generators_[g]);
    const std::int8_t* w = windows_.data() + x * static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i) {
      const int v = w[i];
      tmp[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i + 1 : -(i + 1);
    }
    inverse_[x] = rank_window(tmp, n_, type_);
  }
}

GroupTable GroupTable::build(CoxeterType type, int n, TableLimits limits) {
  check_rank(type, n, limits);
  GroupTable table(type, n);
  table.fill_structure();
  const std::size_t order = table.size();
  const std::size_t k = table.generator_count();

  constexpr std::uint8_t kUnseen = 0xff;
  std::fill(table.length_.begin(), table.length_.end(), kUnseen);
  std::deque<ElementId> queue{table.identity_};
  table.length_[table.identity_] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const ElementId w = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < k; ++g) {
      const ElementId ws = table.right_[w * k + g];
      if (table.length_[ws] == kUnseen) {
        table.length_[ws] = static_cast<std::uint8_t>(table.length_[w] + 1);
        queue.push_back(ws);
        ++reached;
      }
    }
  }
  if (reached != order) throw InvariantViolation("generators do not reach every group element");

  for (std::size_t w = 0; w < order; ++w) {
    std::uint32_t des = 0;
    for (std::size_t g = 0; g < k; ++g)
      if (table.length_[table.right_[w * k + g]] < table.length_[w]) des |= 1u << g;
    table.right_descents_[w] = des;
  }
  return table;
}

namespace {

constexpr char kMagic[8] = {'D', 'E', 'S', 'C', 'T', 'B', 'L', '\0'};

struct CacheHeader {
  char magic[8];
  std::uint32_t version;
  std::uint32_t type;
  std::uint32_t rank;
  std::uint32_t reserved;
  std::uint64_t order;
};

}  // namespace

bool GroupTable::save(const std::filesystem::path& file) const {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    CacheHeader h{};
    std::copy(std::begin(kMagic), std::end(kMagic), h.magic);
    h.version = kFormatVersion;
    h.type = type_ == CoxeterType::D ? 1u : 0u;
    h.rank = static_cast<std::uint32_t>(n_);
    h.order = size();
    out.write(reinterpret_cast<const char*>(&h), sizeof h);
    out.write(reinterpret_cast<const char*>(length_.data()), static_cast<std::streamsize>(length_.size()));
    out.write(reinterpret_cast<const char*>(right_descents_.data()),
              static_cast<std::streamsize>(right_descents_.size() * sizeof(std::uint32_t)));
    if (!out) return false;
  }
  std::filesystem::rename(tmp, file, ec);
  return !ec;
}

std::optional<GroupTable> GroupTable::load(const std::filesystem::path& file, CoxeterType type, int n) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  CacheHeader h{};
  in.read(reinterpret_cast<char*>(&h), sizeof h);
  if (!in || !std::equal(std::begin(kMagic), std::end(kMagic), h.magic)) return std::nullopt;
  if (h.version != kFormatVersion || h.type != (type == CoxeterType::D ? 1u : 0u) ||
      h.rank != static_cast<std::uint32_t>(n) || n < (type == CoxeterType::D ? 2 : 1) || n > 12)
    return std::nullopt;
  GroupTable table(type, n);
  if (h.order != table.size()) return std::nullopt;
  in.read(reinterpret_cast<char*>(table.length_.data()), static_cast<std::streamsize>(table.length_.size()));
  in.read(reinterpret_cast<char*>(table.right_descents_.data()),
          static_cast<std::streamsize>(table.right_descents_.size() * sizeof(std::uint32_t)));
  if (!in || in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  table.fill_structure();
  return table;
}

ElementId GroupTable::index_of(const SignedPermutation& w) const {
  if (w.type() != type_ || w.size() != n_) throw RankMismatchError("element belongs to another group");
  return rank_window(w.window(), n_, type_);
}

SignedPermutation GroupTable::element(ElementId id) const {
  if (id >= size()) throw std::out_of_range("element id out of range");
  const std::int8_t* w = windows_.data() + static_cast<std::size_t>(id) * static_cast<std::size_t>(n_);
  return SignedPermutation(std::vector<int>(w, w + n_), type_);
}

ElementId GroupTable::multiply(ElementId x, ElementId y) const {
  const std::int8_t* wx = windows_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(n_);
  const std::int8_t* wy = windows_.data() + static_cast<std::size_t>(y) * static_cast<std::size_t>(n_);
  std::array<int, 16> out{};
  for (int i = 0; i < n_; ++i) {
    const int v = wy[i];
    const int xv = wx[std::abs(v) - 1];
    out[static_cast<std::size_t>(i)] = v > 0 ? xv : -xv;
  }
  return rank_window(out, n_, type_);
}

TableStore::TableStore(TableLimits limits, std::optional<std::filesystem::path> cache_dir)
    : limits_(limits), cache_dir_(std::move(cache_dir)) {}

const GroupTable& TableStore::get(CoxeterType type, int n) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(type, n);
  if (auto it = tables_.find(key); it != tables_.end()) return *it->second;
  check_rank(type, n, limits_);
  std::optional<std::filesystem::path> file;
  if (cache_dir_) {
    file = *cache_dir_ / (std::string(type == CoxeterType::D ? "D" : "B") + std::to_string(n) + ".v" +
                          std::to_string(GroupTable::kFormatVersion) + ".tbl");
  }
  std::optional<GroupTable> loaded;
  if (file) loaded = GroupTable::load(*file, type, n);
  if (!loaded) {
    loaded = GroupTable::build(type, n, limits_);
    if (file) loaded->save(*file);
  }
  auto [it, _] = tables_.emplace(key, std::make_unique<GroupTable>(std::move(*loaded)));
  return *it->second;
}

std::vector<ElementId> x_set(const GeneratorSet& j, const GroupTable& table) {
  if (j.rank() != table.rank()) throw RankMismatchError("generator set rank differs from the group");
  const std::uint32_t mask = j.mask();
  std::vector<ElementId> out;
  for (ElementId w = 0; w < table.size(); ++w)
    if ((table.right_descents(w) & mask) == 0) out.push_back(w);
  return out;
}

std::size_t parabolic_order(const GeneratorSet& j, const GroupTable& table) {
  if (j.rank() != table.rank()) throw RankMismatchError("generator set rank differs from the group");
  const std::uint32_t mask = j.mask();
  std::vector<bool> seen(table.size(), false);
  std::deque<ElementId> queue{table.identity()};
  seen[table.identity()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const ElementId w = queue.front();
    queue.pop_front();
    for (int g = 0; g < table.rank(); ++g) {
      if (((mask >> g) & 1u) == 0) continue;
      const ElementId ws = table.right_multiply(w, g);
      if (!seen[ws]) {
        seen[ws] = true;
        ++count;
        queue.push_back(ws);
      }
    }
  }
  return count;
}

std::map<std::uint32_t, Coeff> structure_constants(const GeneratorSet& j, const GeneratorSet& k,
                                                  const GroupTable& table) {
  if (j.rank() != table.rank() || k.rank() != table.rank())
    throw RankMismatchError("generator set rank differs from the group");
  const std::uint32_t jm = j.mask();
  const std::uint32_t km = k.mask();
  std::vector<int> j_gens;
  for (int g = 0; g < table.rank(); ++g)
    if ((jm >> g) & 1u) j_gens.push_back(g);

  std::map<std::uint32_t, Coeff> out;
  for (ElementId x = 0; x < table.size(); ++x) {
    // x in X_J^{-1} (no left descent in J) and in X_K (no right descent in K).
    if ((table.left_descents(x) & jm) != 0 || (table.right_descents(x) & km) != 0) continue;
    const ElementId xinv = table.inverse(x);
    std::uint32_t lm = 0;
    for (int g : j_gens) {
      const ElementId c = table.multiply(table.multiply(xinv, table.generator(g)), x);
      for (int h = 0; h < table.rank(); ++h)
        if (((km >> h) & 1u) && c == table.generator(h)) lm |= 1u << h;
    }
    out[lm] += 1;
  }
  return out;
}

Coeff solomon_constant(const GeneratorSet& j, const GeneratorSet& k, const GeneratorSet& l,
                       const GroupTable& table) {
  if (l.rank() != table.rank()) throw RankMismatchError("generator set rank differs from the group");
  auto constants = structure_constants(j, k, table);
  auto it = constants.find(l.mask());
  return it == constants.end() ? 0 : it->second;
}

GroupAlgebraVector::GroupAlgebraVector(const GroupTable& table)
    : table_(&table), coeffs_(table.size(), 0) {}

GroupAlgebraVector GroupAlgebraVector::formal_sum(const GeneratorSet& j, const GroupTable& table) {
  GroupAlgebraVector v(table);
  for (ElementId w : x_set(j, table)) v.coeffs_[w] = 1;
  return v;
}

void GroupAlgebraVector::add(ElementId x, Coeff c) { coeffs_.at(x) = checked_add(coeffs_.at(x), c); }

GroupAlgebraVector operator*(const GroupAlgebraVector& a, const GroupAlgebraVector& b) {
  if (a.table_ != b.table_) throw RankMismatchError("vectors over different groups");
  const GroupTable& t = *a.table_;
  GroupAlgebraVector out(t);
  std::vector<ElementId> support_b;
  for (ElementId y = 0; y < t.size(); ++y)
    if (b.coeffs_[y] != 0) support_b.push_back(y);
  for (ElementId x = 0; x < t.size(); ++x) {
    const Coeff ax = a.coeffs_[x];
    if (ax == 0) continue;
    for (ElementId y : support_b) {
      Coeff& slot = out.coeffs_[t.multiply(x, y)];
      slot = checked_add(slot, checked_mul(ax, b.coeffs_[y]));
    }
  }
  return out;
}

std::vector<std::pair<GeneratorSet, Coeff>> decompose_to_x_basis(const GroupAlgebraVector& v) {
  const GroupTable& t = v.table();
  const int n = t.rank();
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(subsets - 1);

  // d[K]: the common coefficient of the elements whose right descent set is K.
  std::vector<std::optional<Coeff>> d(subsets);
  for (ElementId w = 0; w < t.size(); ++w) {
    auto& slot = d[t.right_descents(w)];
    if (!slot)
      slot = v.coefficient(w);
    else if (*slot != v.coefficient(w))
      throw NotInDescentAlgebraError("coefficients vary within a descent class");
  }

  // X_M = sum over K disjoint from M of the descent class of K, so
  // f(T) = d[T^c] = sum_{M subset of T} a_M; invert on the subset lattice.
  std::vector<Coeff> a(subsets, 0);
  for (std::uint32_t s = 0; s <= full; ++s) a[s] = d[full & ~s].value_or(0);
  for (int bit = 0; bit < n; ++bit)
    for (std::uint32_t s = 0; s <= full; ++s)
      if ((s >> bit) & 1u) a[s] -= a[s ^ (1u << bit)];

  std::vector<std::pair<GeneratorSet, Coeff>> out;
  for (std::uint32_t s = 0; s <= full; ++s)
    if (a[s] != 0) out.emplace_back(GeneratorSet::from_mask(n, s), a[s]);
  return out;
}

namespace {

// Product of B_p B_q = X_J X_K with J, K the complements of the matched
// subsets; returns the X_L coefficients keyed by the mask of L.
std::map<std::uint32_t, Coeff> oracle_x_product(const GeneratorSet& jp, const GeneratorSet& kq,
                                                const GroupTable& table, OracleStrategy strategy) {
  const GeneratorSet j = complement(jp);
  const GeneratorSet k = complement(kq);
  if (strategy == OracleStrategy::Counting) return structure_constants(j, k, table);
  auto product = GroupAlgebraVector::formal_sum(j, table) * GroupAlgebraVector::formal_sum(k, table);
  std::map<std::uint32_t, Coeff> out;
  for (const auto& [l, c] : decompose_to_x_basis(product)) out[l.mask()] = c;
  return out;
}

}  // namespace

AlgebraElement oracle_multiply(const BasisIndex& p, const BasisIndex& q, const GroupTable& table,
                               OracleStrategy strategy) {
  if (table.type() != CoxeterType::D || p.rank() != table.rank() || q.rank() != table.rank())
    throw RankMismatchError("operands do not match the type D table");
  const int n = table.rank();
  AlgebraElement out(n);
  for (const auto& [l, c] : oracle_x_product(subset_of(p), subset_of(q), table, strategy))
    out.add_term(index_of_subset(complement(GeneratorSet::from_mask(n, l))), c);
  return out;
}

BAlgebraElement oracle_multiply_b(const Composition& p, const Composition& q, const GroupTable& table,
                                  OracleStrategy strategy) {
  if (table.type() != CoxeterType::B) throw RankMismatchError("expected a type B table");
  const int n = table.rank();
  BAlgebraElement out(n);
  for (const auto& [l, c] : oracle_x_product(b_subset_of(p, n), b_subset_of(q, n), table, strategy))
    out.add_term(b_index_of_subset(complement(GeneratorSet::from_mask(n, l))), c);
  return out;
}

std::size_t basis_size(const BasisIndex& b, const GroupTable& table) {
  return x_set(complement(subset_of(b)), table).size();
}

std::size_t basis_size_b(const Composition& q, const GroupTable& table) {
  return x_set(complement(b_subset_of(q, table.rank())), table).size();
}

}  // namespace descalg
