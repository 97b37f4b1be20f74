#include <doctest.h>

#include <random>

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/quotient.hpp"

using namespace descalg;

namespace {

BasisIndex idx(const char* text, int n = 4) { return parse_index(text, n); }

}  // namespace

TEST_CASE("ideal membership") {
  CHECK(is_in_ideal(AlgebraElement::basis(idx("[1,3]"))));
  CHECK_FALSE(is_in_ideal(AlgebraElement::basis(idx("[2]"))));
  CHECK(is_in_ideal(AlgebraElement(4)));
  CHECK_FALSE(is_in_ideal(multiply_basis(idx("[2]"), idx("[2]"))));
}

TEST_CASE("projection") {
  CHECK(to_text(project(multiply_basis(idx("[2]"), idx("[2]")))) == "2*[2] + 1*[1,1]");
  CHECK(project(AlgebraElement::basis(idx("[4]"))).is_zero());
  CHECK(project(identity(4)) == identity_b(2));
  CHECK(project(identity(4)).rank() == 2);
  CHECK(to_text(shifted_template_product(idx("[1,1]"), idx("[2]"))) == "4*[1,1]");
}

TEST_CASE("projection is multiplicative on random elements") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 5; ++n) {
    const auto basis = enumerate_basis(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int k = 0; k < 10; ++k) {
      AlgebraElement x(n), y(n);
      for (int r = 0; r < 4; ++r) {
        x.add_term(basis[pick(rng)], coeff(rng));
        y.add_term(basis[pick(rng)], coeff(rng));
      }
      CHECK(project(multiply(x, y)) == multiply_b(project(x), project(y)));
    }
  }
}

TEST_CASE("ideal and quotient checks pass") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_ideal(n, 2);
    CHECK(r.pass);
    CHECK(r.check == "ideal");
    CHECK(r.counterexamples.empty());
  }
  CHECK(verify_ideal(4).cases == 16 * 12 * 2);
  for (int n = 3; n <= 4; ++n) {
    const auto r = verify_quotient_iso(n, 2);
    CHECK(r.pass);
    CHECK(r.cases == (std::size_t{1} << (2 * (n - 2))));
  }
  const auto j = verify_quotient_iso(4).to_json();
  CHECK(j["check"] == "quotient");
  CHECK(j["n"] == 4);
  CHECK(j["pass"] == true);
  CHECK(j["counterexamples"].empty());
  CHECK(j.contains("elapsed_ms"));
  CHECK_THROWS(verify_quotient_iso(2));
}
