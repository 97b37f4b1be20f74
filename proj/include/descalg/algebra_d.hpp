#pragma once

// The descent algebra of type D in the B_q basis, multiplied by the
// filled-template rule.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "descalg/composition.hpp"
#include "descalg/filled_template.hpp"
#include "descalg/linear_combination.hpp"

namespace descalg {

class AlgebraElement {
 public:
  explicit AlgebraElement(int n);
  static AlgebraElement basis(const BasisIndex& b, Coeff c = 1);

  int rank() const { return n_; }
  const LinearCombination<BasisIndex>::Terms& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const BasisIndex& b) const { return terms_.coefficient(b); }

  void add_term(const BasisIndex& b, Coeff c);
  AlgebraElement& operator+=(const AlgebraElement& other);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int n_;
  LinearCombination<BasisIndex> terms_;
};

AlgebraElement identity(int n);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, Coeff c);
bool equals(const AlgebraElement& x, const AlgebraElement& y);

/// Which branch of the multiplication rule a template went through.
enum class RuleCase { Case1, Case2, Case3, Case4a, Case4b, Case4c };

std::string_view to_string(RuleCase c);

struct TemplateContribution {
  RuleCase rule_case;
  std::vector<std::pair<BasisIndex, Coeff>> terms;
};

/// Terms contributed by one template t in Z(p, q).
TemplateContribution apply_rule(const BasisIndex& p, const BasisIndex& q, const FilledTemplate& t);

AlgebraElement multiply_basis(const BasisIndex& p, const BasisIndex& q);
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// "2*[1,3] + 1*[1,2,1]"; the zero element renders as "0".
std::string to_text(const AlgebraElement& x);
/// Inverse of to_text; a missing coefficient means 1 and whitespace is ignored.
AlgebraElement parse_element(std::string_view text, int n);
/// {"algebra":"D","n":4,"terms":[{"q":[1,3],"primed":false,"c":2},...]}
nlohmann::ordered_json to_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const nlohmann::ordered_json& j);

}  // namespace descalg
