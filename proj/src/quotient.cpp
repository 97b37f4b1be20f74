#include "descalg/quotient.hpp"

#include <chrono>
#include <optional>

#include "descalg/error.hpp"
#include "descalg/filled_template.hpp"
#include "descalg/parallel.hpp"

namespace descalg {

bool is_in_ideal(const AlgebraElement& x) {
  for (const auto& [b, c] : x.terms())
    if (b.weight() != x.rank()) return false;
  return true;
}

BAlgebraElement project(const AlgebraElement& x) {
  BAlgebraElement out(x.rank() - 2);
  for (const auto& [b, c] : x.terms())
    if (b.weight() <= x.rank() - 2) out.add_term(b.composition(), c);
  return out;
}

namespace {

FilledTemplate shift_down(const FilledTemplate& t) {
  FilledTemplate s = t;
  s.set_z(0, 0, t.z(0, 0) - 2);
  return s;
}

std::vector<FilledTemplate> shifted_templates(const BasisIndex& p, const BasisIndex& q) {
  std::vector<FilledTemplate> out;
  for (const FilledTemplate& t : enumerate_z_d(p, q))
    if (t.z(0, 0) >= 2) out.push_back(shift_down(t));
  return out;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BAlgebraElement shifted_template_product(const BasisIndex& p, const BasisIndex& q) {
  BAlgebraElement out(p.rank() - 2);
  for (const FilledTemplate& t : shifted_templates(p, q)) out.add_term(reading_word_b(t), 1);
  return out;
}

IdealReport verify_ideal(int n, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  IdealReport report;
  report.check = "ideal";
  report.n = n;
  const auto basis = enumerate_basis(n);
  std::vector<BasisIndex> ideal;
  for (const auto& b : basis)
    if (b.class_tag() != ClassTag::CLess) ideal.push_back(b);

  const std::size_t pairs = basis.size() * ideal.size();
  auto results = parallel_map<std::vector<Counterexample>>(pairs, jobs, [&](std::size_t idx) {
    const BasisIndex& p = basis[idx / ideal.size()];
    const BasisIndex& q = ideal[idx % ideal.size()];
    std::vector<Counterexample> found;
    auto check = [&](const BasisIndex& a, const BasisIndex& b) {
      const AlgebraElement prod = multiply_basis(a, b);
      for (const auto& [term, c] : prod.terms())
        if (term.weight() != n) {
          found.push_back({format_index(a), format_index(b),
                           "term " + format_index(term) + " lies outside the ideal"});
          return;
        }
    };
    check(p, q);
    check(q, p);
    return found;
  });
  for (auto& r : results)
    for (auto& c : r) report.fail(std::move(c));
  report.cases = pairs * 2;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

QuotientReport verify_quotient_iso(int n, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  QuotientReport report;
  report.check = "quotient";
  report.n = n;
  if (n < 3) throw InvalidIndexError("the quotient check needs rank at least 3");
  std::vector<BasisIndex> low;
  for (const auto& b : enumerate_basis(n))
    if (b.class_tag() == ClassTag::CLess) low.push_back(b);

  const std::size_t pairs = low.size() * low.size();
  auto results = parallel_map<std::optional<Counterexample>>(
      pairs, jobs, [&](std::size_t idx) -> std::optional<Counterexample> {
        const BasisIndex& p = low[idx / low.size()];
        const BasisIndex& q = low[idx % low.size()];
        const auto mismatch = [&](const std::string& what) {
          return Counterexample{format_index(p), format_index(q), what};
        };
        const BAlgebraElement via_d = project(multiply_basis(p, q));
        const BAlgebraElement via_b = multiply_basis_b(p.composition(), q.composition(), n - 2);
        const BAlgebraElement via_shift = shifted_template_product(p, q);
        if (via_d != via_b)
          return mismatch("projected D product " + to_text(via_d) + " != B product " + to_text(via_b));
        if (via_shift != via_b)
          return mismatch("shifted templates give " + to_text(via_shift) + " != B product " +
                          to_text(via_b));
        if (shifted_templates(p, q) != enumerate_z_b(p.composition(), q.composition(), n - 2))
          return mismatch("shifted D templates differ from the type B template set");
        return std::nullopt;
      });
  for (auto& r : results)
    if (r) report.fail(std::move(*r));
  report.cases = pairs;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

}  // namespace descalg
