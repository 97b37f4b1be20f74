#pragma once

// Descent algebra of type B (hyperoctahedral group) in the B_q basis,
// q ranging over compositions of weight <= N.

#include <string>

#include <json.hpp>

#include "descalg/composition.hpp"
#include "descalg/linear_combination.hpp"

namespace descalg {

class BAlgebraElement {
 public:
  explicit BAlgebraElement(int rank);
  static BAlgebraElement basis(const Composition& q, int rank, Coeff c = 1);

  int rank() const { return rank_; }
  const LinearCombination<Composition>::Terms& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Composition& q) const { return terms_.coefficient(q); }

  void add_term(const Composition& q, Coeff c);
  BAlgebraElement& operator+=(const BAlgebraElement& other);

  friend bool operator==(const BAlgebraElement&, const BAlgebraElement&) = default;

 private:
  int rank_;
  LinearCombination<Composition> terms_;
};

BAlgebraElement identity_b(int rank);
BAlgebraElement add_b(const BAlgebraElement& x, const BAlgebraElement& y);
BAlgebraElement scale_b(const BAlgebraElement& x, Coeff c);

/// Sum of B_{r(t)} over the type B templates, r read without z_00.
BAlgebraElement multiply_basis_b(const Composition& p, const Composition& q, int rank);
BAlgebraElement multiply_b(const BAlgebraElement& x, const BAlgebraElement& y);

std::string to_text(const BAlgebraElement& x);
nlohmann::ordered_json to_json(const BAlgebraElement& x);

}  // namespace descalg
