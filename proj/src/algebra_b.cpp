#include "descalg/algebra_b.hpp"

#include "descalg/error.hpp"
#include "descalg/filled_template.hpp"
#include "render_terms.hpp"

namespace descalg {

BAlgebraElement::BAlgebraElement(int rank) : rank_(rank) {
  if (rank < 0) throw InvalidIndexError("type B rank must be non-negative");
}

BAlgebraElement BAlgebraElement::basis(const Composition& q, int rank, Coeff c) {
  BAlgebraElement x(rank);
  x.add_term(q, c);
  return x;
}

void BAlgebraElement::add_term(const Composition& q, Coeff c) {
  if (q.weight() > rank_) throw InvalidIndexError("composition weight exceeds the type B rank");
  terms_.add(q, c);
}

BAlgebraElement& BAlgebraElement::operator+=(const BAlgebraElement& other) {
  if (other.rank_ != rank_) throw RankMismatchError("cannot add elements of different ranks");
  terms_.add(other.terms_);
  return *this;
}

BAlgebraElement identity_b(int rank) { return BAlgebraElement::basis(Composition{}, rank); }

BAlgebraElement add_b(const BAlgebraElement& x, const BAlgebraElement& y) {
  BAlgebraElement out = x;
  out += y;
  return out;
}

BAlgebraElement scale_b(const BAlgebraElement& x, Coeff c) {
  BAlgebraElement out(x.rank());
  for (const auto& [q, coeff] : x.terms()) out.add_term(q, checked_mul(coeff, c));
  return out;
}

BAlgebraElement multiply_basis_b(const Composition& p, const Composition& q, int rank) {
  BAlgebraElement out(rank);
  for (const FilledTemplate& t : enumerate_z_b(p, q, rank)) out.add_term(reading_word_b(t), 1);
  return out;
}

BAlgebraElement multiply_b(const BAlgebraElement& x, const BAlgebraElement& y) {
  if (x.rank() != y.rank()) throw RankMismatchError("factors have different ranks");
  BAlgebraElement out(x.rank());
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) {
      const Coeff c = checked_mul(cp, cq);
      const BAlgebraElement pq = multiply_basis_b(p, q, x.rank());
      for (const auto& [r, cr] : pq.terms()) out.add_term(r, checked_mul(c, cr));
    }
  return out;
}

std::string to_text(const BAlgebraElement& x) {
  return detail::render_terms(x.terms(), [](const Composition& q) { return format_composition(q); });
}

nlohmann::ordered_json to_json(const BAlgebraElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [q, c] : x.terms()) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (int part : q.parts()) parts.push_back(part);
    terms.push_back({{"q", parts}, {"primed", false}, {"c", c}});
  }
  return {{"algebra", "B"}, {"n", x.rank()}, {"terms", terms}};
}

}  // namespace descalg
