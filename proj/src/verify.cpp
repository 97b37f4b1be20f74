#include "descalg/verify.hpp"

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <random>

#include "descalg/error.hpp"
#include "descalg/parallel.hpp"

namespace descalg {

namespace {

struct DTraits {
  using Key = BasisIndex;
  using Element = AlgebraElement;
  static constexpr CoxeterType type = CoxeterType::D;
  static std::vector<Key> basis(int n) { return enumerate_basis(n); }
  static Element rule(const Key& p, const Key& q, int) { return multiply_basis(p, q); }
  static Element oracle(const Key& p, const Key& q, const GroupTable& t, OracleStrategy s) {
    return oracle_multiply(p, q, t, s);
  }
  static std::size_t size(const Key& k, const GroupTable& t) { return basis_size(k, t); }
  static std::string format(const Key& k) { return format_index(k); }
  static int weight(const Key& k) { return k.weight(); }
  static bool weight_allowed(int w, int n) { return w != n - 1; }
  static Element unit(int n) { return identity(n); }
  static Element zero(int n) { return AlgebraElement(n); }
  static Element of(const Key& k, int) { return AlgebraElement::basis(k); }
};

struct BTraits {
  using Key = Composition;
  using Element = BAlgebraElement;
  static constexpr CoxeterType type = CoxeterType::B;
  static std::vector<Key> basis(int n) { return enumerate_b_basis(n); }
  static Element rule(const Key& p, const Key& q, int n) { return multiply_basis_b(p, q, n); }
  static Element oracle(const Key& p, const Key& q, const GroupTable& t, OracleStrategy s) {
    return oracle_multiply_b(p, q, t, s);
  }
  static std::size_t size(const Key& k, const GroupTable& t) { return basis_size_b(k, t); }
  static std::string format(const Key& k) { return format_composition(k); }
  static int weight(const Key& k) { return k.weight(); }
  static bool weight_allowed(int, int) { return true; }
  static Element unit(int n) { return identity_b(n); }
  static Element zero(int n) { return BAlgebraElement(n); }
  static Element of(const Key& k, int n) { return BAlgebraElement::basis(k, n); }
};

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

CheckReport start_report(std::string check, int n) {
  CheckReport r;
  r.check = std::move(check);
  r.n = n;
  return r;
}

template <typename T>
CheckReport rule_check(int n, TableStore& tables, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = start_report("rule", n);
  const GroupTable& table = tables.get(T::type, n);
  const auto basis = T::basis(n);
  std::vector<std::size_t> sizes;
  for (const auto& b : basis) sizes.push_back(T::size(b, table));
  std::map<typename T::Key, std::size_t> size_of;
  for (std::size_t i = 0; i < basis.size(); ++i) size_of.emplace(basis[i], sizes[i]);

  const std::size_t pairs = basis.size() * basis.size();
  auto results = parallel_map<std::optional<Counterexample>>(
      pairs, jobs, [&](std::size_t idx) -> std::optional<Counterexample> {
        const auto& p = basis[idx / basis.size()];
        const auto& q = basis[idx % basis.size()];
        auto bad = [&](std::string what) { return Counterexample{T::format(p), T::format(q), std::move(what)}; };
        const auto rule = T::rule(p, q, n);
        const auto oracle = T::oracle(p, q, table, OracleStrategy::Counting);
        if (rule != oracle) return bad("rule " + to_text(rule) + " != oracle " + to_text(oracle));
        Coeff mass = 0;
        for (const auto& [term, c] : rule.terms()) {
          if (c < 0) return bad("negative coefficient on " + T::format(term));
          if (!T::weight_allowed(T::weight(term), n)) return bad("term of weight n-1: " + T::format(term));
          mass = checked_add(mass, checked_mul(c, static_cast<Coeff>(size_of.at(term))));
        }
        const auto expected = static_cast<Coeff>(sizes[idx / basis.size()] * sizes[idx % basis.size()]);
        if (mass != expected)
          return bad("augmentation " + std::to_string(mass) + " != " + std::to_string(expected));
        return std::nullopt;
      });
  for (auto& r : results)
    if (r) report.fail(std::move(*r));
  report.cases = pairs;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

template <typename T>
CheckReport strategy_check(int n, TableStore& tables, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = start_report("oracle-strategies", n);
  const GroupTable& table = tables.get(T::type, n);
  const auto basis = T::basis(n);
  const std::size_t pairs = basis.size() * basis.size();
  auto results = parallel_map<std::optional<Counterexample>>(
      pairs, jobs, [&](std::size_t idx) -> std::optional<Counterexample> {
        const auto& p = basis[idx / basis.size()];
        const auto& q = basis[idx % basis.size()];
        const auto counting = T::oracle(p, q, table, OracleStrategy::Counting);
        const auto convolution = T::oracle(p, q, table, OracleStrategy::Convolution);
        if (counting == convolution) return std::nullopt;
        return Counterexample{T::format(p), T::format(q),
                              "counting " + to_text(counting) + " != convolution " + to_text(convolution)};
      });
  for (auto& r : results)
    if (r) report.fail(std::move(*r));
  report.cases = pairs;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

// All basis products of one rank, looked up by basis position.
template <typename T>
class ProductTable {
 public:
  ProductTable(int n, unsigned jobs) : n_(n), basis_(T::basis(n)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);
    const std::size_t count = basis_.size() * basis_.size();
    products_ = parallel_map<typename T::Element>(count, jobs, [&](std::size_t idx) {
      return T::rule(basis_[idx / basis_.size()], basis_[idx % basis_.size()], n_);
    });
  }

  const std::vector<typename T::Key>& basis() const { return basis_; }
  const typename T::Element& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }

  typename T::Element multiply(const typename T::Element& x, const typename T::Element& y) const {
    auto out = T::zero(n_);
    for (const auto& [p, cp] : x.terms())
      for (const auto& [q, cq] : y.terms()) {
        const Coeff c = checked_mul(cp, cq);
        for (const auto& [r, cr] : product(position_.at(p), position_.at(q)).terms())
          out.add_term(r, checked_mul(c, cr));
      }
    return out;
  }

 private:
  int n_;
  std::vector<typename T::Key> basis_;
  std::map<typename T::Key, std::size_t> position_;
  std::vector<typename T::Element> products_;
};

template <typename T>
CheckReport associativity_check(int n, unsigned jobs, const AssociativityOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = start_report("associativity", n);
  const ProductTable<T> products(n, jobs);
  const auto& basis = products.basis();
  const std::size_t d = basis.size();

  const auto unit = T::unit(n);
  for (const auto& b : basis) {
    const auto x = T::of(b, n);
    if (products.multiply(unit, x) != x || products.multiply(x, unit) != x)
      report.fail({T::format(b), "[]", "identity law fails"});
  }

  std::vector<std::array<std::size_t, 3>> triples;
  if (n <= options.exhaustive_max_rank) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) triples.push_back({i, j, k});
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (std::size_t s = 0; s < options.samples; ++s) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }

  auto results = parallel_map<std::optional<Counterexample>>(
      triples.size(), jobs, [&](std::size_t idx) -> std::optional<Counterexample> {
        const auto [i, j, k] = triples[idx];
        const auto left = products.multiply(products.product(i, j), T::of(basis[k], n));
        const auto right = products.multiply(T::of(basis[i], n), products.product(j, k));
        if (left == right) return std::nullopt;
        return Counterexample{T::format(basis[i]) + " " + T::format(basis[j]), T::format(basis[k]),
                              "(pq)r = " + to_text(left) + " but p(qr) = " + to_text(right)};
      });
  for (auto& r : results)
    if (r) report.fail(std::move(*r));
  report.cases = triples.size() + d;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::size_t expected_order(CoxeterType type, int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f << (type == CoxeterType::D ? n - 1 : n);
}

}  // namespace

CheckReport verify_rule(CoxeterType type, int n, TableStore& tables, unsigned jobs) {
  CheckReport report = type == CoxeterType::D ? rule_check<DTraits>(n, tables, jobs)
                                              : rule_check<BTraits>(n, tables, jobs);
  if (type == CoxeterType::D && n == 4) report.findings.push_back(known_misprint_report(tables));
  return report;
}

CheckReport verify_oracle_strategies(CoxeterType type, int n, TableStore& tables, unsigned jobs) {
  return type == CoxeterType::D ? strategy_check<DTraits>(n, tables, jobs)
                                : strategy_check<BTraits>(n, tables, jobs);
}

CheckReport verify_associativity(CoxeterType type, int n, unsigned jobs, AssociativityOptions options) {
  return type == CoxeterType::D ? associativity_check<DTraits>(n, jobs, options)
                                : associativity_check<BTraits>(n, jobs, options);
}

CheckReport verify_relations(CoxeterType type, int n, TableStore& tables) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = start_report("relations", n);
  const GroupTable& table = tables.get(type, n);
  const std::string label = std::string(type == CoxeterType::D ? "D" : "B") + std::to_string(n);
  const std::size_t order = table.size();

  if (order != expected_order(type, n))
    report.fail({label, "", "group order " + std::to_string(order) + " != " + std::to_string(expected_order(type, n))});

  const auto gens = generators(n, type);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const auto prod = gens[static_cast<std::size_t>(a)] * gens[static_cast<std::size_t>(b)];
      int m = 1;
      for (auto w = prod; !w.is_identity(); w = w * prod) ++m;
      const int expected = coxeter_exponent(type, n, a, b);
      ++report.cases;
      if (m != expected)
        report.fail({label, "generators " + std::to_string(a) + "," + std::to_string(b),
                     "order of product " + std::to_string(m) + " != " + std::to_string(expected)});
    }

  for (ElementId w = 0; w < order; ++w)
    for (int g = 0; g < n; ++g) {
      const int d = table.length(table.right_multiply(w, g)) - table.length(w);
      if (d != 1 && d != -1) {
        report.fail({label, "", "length does not change by one under right multiplication"});
        w = static_cast<ElementId>(order);
        break;
      }
    }
  if (table.length(table.identity()) != 0) report.fail({label, "", "identity has nonzero length"});

  const GeneratorSet full = GeneratorSet::full(n);
  const auto xs = x_set(full, table);
  if (xs.size() != 1 || xs.front() != table.identity()) report.fail({label, "", "X_S is not {e}"});
  if (x_set(GeneratorSet(n), table).size() != order) report.fail({label, "", "X_empty is not W"});

  for (std::uint32_t mask = 0; mask <= full.mask(); ++mask) {
    const GeneratorSet j = GeneratorSet::from_mask(n, mask);
    const std::size_t xj = x_set(j, table).size();
    const std::size_t wj = parabolic_order(j, table);
    ++report.cases;
    if (xj * wj != order)
      report.fail({label, format_generators(j, type),
                   "|X_J| |W_J| = " + std::to_string(xj * wj) + " != |W| = " + std::to_string(order)});
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

nlohmann::ordered_json discrepancy_report(const BasisIndex& p, const BasisIndex& q,
                                          const std::string& claimed, const GroupTable& table) {
  const int n = p.rank();
  const AlgebraElement claim = parse_element(claimed, n);
  const AlgebraElement rule = multiply_basis(p, q);
  const AlgebraElement oracle = oracle_multiply(p, q, table);

  nlohmann::ordered_json differences = nlohmann::ordered_json::array();
  AlgebraElement diff = add(claim, scale(oracle, -1));
  for (const auto& [b, c] : diff.terms())
    differences.push_back({{"term", format_index(b)},
                           {"claimed", claim.coefficient(b)},
                           {"oracle", oracle.coefficient(b)}});
  return {{"finding", "claimed product disagrees with the group oracle"},
          {"left", format_index(p)},
          {"right", format_index(q)},
          {"claimed", to_text(claim)},
          {"rule", to_text(rule)},
          {"oracle", to_text(oracle)},
          {"rule_equals_oracle", rule == oracle},
          {"claimed_equals_oracle", claim == oracle},
          {"differences", differences}};
}

nlohmann::ordered_json known_misprint_report(TableStore& tables) {
  return discrepancy_report(parse_index("[2,2]'", 4), parse_index("[4]'", 4),
                            "4*[2,2]' + 1*[1,3] + 1*[1,1,1,1]", tables.get(CoxeterType::D, 4));
}

}  // namespace descalg
