#include "descalg/algebra_d.hpp"

#include <cctype>
#include <charconv>

#include "descalg/error.hpp"
#include "render_terms.hpp"

namespace descalg {

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 2) throw InvalidIndexError("type D rank must be at least 2");
}

AlgebraElement AlgebraElement::basis(const BasisIndex& b, Coeff c) {
  AlgebraElement x(b.rank());
  x.add_term(b, c);
  return x;
}

void AlgebraElement::add_term(const BasisIndex& b, Coeff c) {
  if (b.rank() != n_) throw RankMismatchError("basis index rank differs from the element rank");
  terms_.add(b, c);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.n_ != n_) throw RankMismatchError("cannot add elements of different ranks");
  terms_.add(other.terms_);
  return *this;
}

AlgebraElement identity(int n) { return AlgebraElement::basis(BasisIndex(Composition{}, false, n)); }

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = x;
  out += y;
  return out;
}

AlgebraElement scale(const AlgebraElement& x, Coeff c) {
  AlgebraElement out(x.rank());
  for (const auto& [b, coeff] : x.terms()) out.add_term(b, checked_mul(coeff, c));
  return out;
}

bool equals(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.rank() != y.rank()) throw RankMismatchError("cannot compare elements of different ranks");
  return x == y;
}

std::string_view to_string(RuleCase c) {
  switch (c) {
    case RuleCase::Case1: return "1";
    case RuleCase::Case2: return "2";
    case RuleCase::Case3: return "3";
    case RuleCase::Case4a: return "4a";
    case RuleCase::Case4b: return "4b";
    case RuleCase::Case4c: return "4c";
  }
  return "?";
}

namespace {

BasisIndex make_term(const Composition& r, bool primed, int n) {
  if (r.weight() == n - 1)
    throw InvariantViolation("reading word " + format_composition(r) + " has weight n-1");
  if (primed && r.weight() != n)
    throw InvariantViolation("primed term " + format_composition(r) + " without weight n");
  try {
    return BasisIndex(r, primed, n);
  } catch (const InvalidIndexError& e) {
    throw InvariantViolation(std::string("rule produced an invalid index: ") + e.what());
  }
}

}  // namespace

TemplateContribution apply_rule(const BasisIndex& p, const BasisIndex& q, const FilledTemplate& t) {
  if (p.rank() != q.rank()) throw RankMismatchError("factors have different ranks");
  const int n = p.rank();
  const Composition r = reading_word(t);
  const bool leading_one = r.first() == 1;
  TemplateContribution out{RuleCase::Case4c, {}};
  auto emit = [&](bool primed, Coeff c) { out.terms.emplace_back(make_term(r, primed, n), c); };

  switch (q.class_tag()) {
    case ClassTag::C1:
      out.rule_case = RuleCase::Case1;
      emit(false, 1);
      return out;
    case ClassTag::Cn:
      out.rule_case = RuleCase::Case2;
      emit(false, 1);
      return out;
    case ClassTag::CnPrime:
      out.rule_case = RuleCase::Case3;
      emit(!leading_one, 1);
      return out;
    case ClassTag::CLess:
      break;
  }

  const ClassTag pc = p.class_tag();
  const bool odd = y_sum(t) % 2 == 1;
  const bool p_plain = pc == ClassTag::C1 || pc == ClassTag::Cn;
  if (r.first() >= 2 && ((p_plain && odd) || (pc == ClassTag::CnPrime && !odd))) {
    out.rule_case = RuleCase::Case4a;
    emit(true, 1);
  } else if (pc == ClassTag::CLess && t.z(0, 0) == 0) {
    out.rule_case = RuleCase::Case4b;
    if (leading_one) {
      emit(false, 2);
    } else {
      emit(false, 1);
      emit(true, 1);
    }
  } else {
    out.rule_case = RuleCase::Case4c;
    emit(false, 1);
  }
  return out;
}

AlgebraElement multiply_basis(const BasisIndex& p, const BasisIndex& q) {
  if (p.rank() != q.rank()) throw RankMismatchError("factors have different ranks");
  AlgebraElement out(p.rank());
  for (const FilledTemplate& t : enumerate_z_d(p, q))
    for (const auto& [b, c] : apply_rule(p, q, t).terms) out.add_term(b, c);
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.rank() != y.rank()) throw RankMismatchError("factors have different ranks");
  AlgebraElement out(x.rank());
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) {
      const Coeff c = checked_mul(cp, cq);
      const AlgebraElement pq = multiply_basis(p, q);
      for (const auto& [b, cb] : pq.terms()) out.add_term(b, checked_mul(c, cb));
    }
  return out;
}

std::string to_text(const AlgebraElement& x) {
  return detail::render_terms(x.terms(), [](const BasisIndex& b) { return format_index(b); });
}

AlgebraElement parse_element(std::string_view text, int n) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  AlgebraElement out(n);
  if (compact == "0") return out;
  if (compact.empty()) throw ParseError("empty element text");
  std::size_t pos = 0;
  while (pos < compact.size()) {
    Coeff sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' between terms");
    }
    const std::size_t end = compact.find_first_of("+-", pos);
    const std::string term = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    Coeff c = 1;
    std::string index = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      const std::string digits = term.substr(0, star);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError("bad coefficient \"" + digits + "\"");
      index = term.substr(star + 1);
    }
    out.add_term(parse_index(index, n), checked_mul(sign, c));
    pos = end == std::string::npos ? compact.size() : end;
  }
  return out;
}

nlohmann::ordered_json to_json(const AlgebraElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [b, c] : x.terms()) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (int part : b.composition().parts()) parts.push_back(part);
    terms.push_back({{"q", parts}, {"primed", b.primed()}, {"c", c}});
  }
  return {{"algebra", "D"}, {"n", x.rank()}, {"terms", terms}};
}

AlgebraElement algebra_element_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("algebra").get<std::string>() != "D") throw ParseError("expected a type D element");
    const int n = j.at("n").get<int>();
    AlgebraElement x(n);
    for (const auto& term : j.at("terms")) {
      Composition q(term.at("q").get<std::vector<int>>());
      x.add_term(BasisIndex(std::move(q), term.at("primed").get<bool>(), n), term.at("c").get<Coeff>());
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra element JSON: ") + e.what());
  }
}

}  // namespace descalg
