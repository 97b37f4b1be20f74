#include <doctest.h>

#include <random>

#include "descalg/algebra_d.hpp"
#include "descalg/error.hpp"

using namespace descalg;

namespace {

BasisIndex idx(const char* text, int n = 4) { return parse_index(text, n); }

std::string product(const char* p, const char* q, int n = 4) {
  return to_text(multiply_basis(idx(p, n), idx(q, n)));
}

AlgebraElement random_element(int n, std::mt19937_64& rng) {
  const auto basis = enumerate_basis(n);
  AlgebraElement x(n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& b : basis)
    if (rng() % 3 == 0) x.add_term(b, coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("printed products in rank 4") {
  CHECK(product("[4]", "[1,3]") == "2*[1,3] + 1*[1,2,1] + 1*[1,1,2]");
  CHECK(product("[3,1]'", "[4]") == "1*[3,1] + 1*[1,3] + 2*[1,2,1]");
  CHECK(product("[4]", "[2]") == "2*[2,2] + 1*[2,1,1]'");
  CHECK(product("[2]", "[2]") == "2*[2] + 1*[1,1] + 1*[2,2] + 1*[2,2]' + 2*[1,1,1,1]");
  CHECK(product("[1,1]", "[2]") == "4*[1,1] + 2*[1,1,2] + 4*[1,1,1,1]");
}

TEST_CASE("the five templates of [2,2]' x [4]' give no [1,3] term") {
  const AlgebraElement x = multiply_basis(idx("[2,2]'"), idx("[4]'"));
  CHECK(x.coefficient(idx("[1,3]")) == 0);
  CHECK(to_text(x) == "4*[2,2]' + 1*[1,1,1,1]");
}

TEST_CASE("apply_rule case selection") {
  const auto p = idx("[2]"), q = idx("[2]");
  int case_b = 0;
  for (const auto& t : enumerate_z_d(p, q)) {
    const auto c = apply_rule(p, q, t);
    if (c.rule_case == RuleCase::Case4b) ++case_b;
  }
  CHECK(case_b > 0);
  for (const auto& t : enumerate_z_d(idx("[3,1]'"), idx("[4]")))
    CHECK(apply_rule(idx("[3,1]'"), idx("[4]"), t).rule_case == RuleCase::Case2);
  for (const auto& t : enumerate_z_d(idx("[4]"), idx("[1,3]")))
    CHECK(apply_rule(idx("[4]"), idx("[1,3]"), t).rule_case == RuleCase::Case1);
  CHECK(to_string(RuleCase::Case4a) == "4a");
}

TEST_CASE("identity") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& b : enumerate_basis(n)) {
      const auto e = BasisIndex({}, false, n);
      CHECK(multiply_basis(e, b) == AlgebraElement::basis(b));
      CHECK(multiply_basis(b, e) == AlgebraElement::basis(b));
    }
  CHECK(multiply(identity(2), identity(2)) == identity(2));
}

TEST_CASE("bilinear extension") {
  const auto x = scale(AlgebraElement::basis(idx("[4]")), 2);
  CHECK(to_text(multiply(x, AlgebraElement::basis(idx("[1,3]")))) == "4*[1,3] + 2*[1,2,1] + 2*[1,1,2]");
  CHECK(multiply(AlgebraElement(4), x).is_zero());
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_element(4, rng), b = random_element(4, rng), c = random_element(4, rng);
    CHECK(multiply(a, identity(4)) == a);
    CHECK(add(a, b) == add(b, a));
    CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    CHECK(equals(a, a));
  }
}

TEST_CASE("add and scale") {
  const auto b = AlgebraElement::basis(idx("[3,1]'"));
  CHECK(add(b, scale(b, -1)).is_zero());
  CHECK(scale(b, 0).is_zero());
  CHECK_THROWS_AS(add(identity(4), identity(3)), RankMismatchError);
  CHECK_THROWS_AS(multiply(identity(4), identity(3)), RankMismatchError);
  CHECK_THROWS_AS(multiply_basis(idx("[]", 4), idx("[]", 3)), RankMismatchError);
}

TEST_CASE("overflow is reported") {
  const auto big = AlgebraElement::basis(idx("[]"), std::numeric_limits<Coeff>::max());
  CHECK_THROWS_AS(add(big, big), OverflowError);
  CHECK_THROWS_AS(scale(big, 2), OverflowError);
  CHECK_THROWS_AS(multiply(big, AlgebraElement::basis(idx("[2]"), 2)), OverflowError);
}

TEST_CASE("text and JSON forms") {
  const auto x = multiply_basis(idx("[4]"), idx("[2]"));
  CHECK(parse_element(to_text(x), 4) == x);
  CHECK(parse_element("[2] + 3*[2,2]'", 4).coefficient(idx("[2,2]'")) == 3);
  CHECK(parse_element(" - [2] ", 4).coefficient(idx("[2]")) == -1);
  CHECK(to_text(AlgebraElement(4)) == "0");
  CHECK(parse_element("0", 4).is_zero());
  CHECK_THROWS_AS(parse_element("2*", 4), Error);
  CHECK_THROWS_AS(parse_element("[3]", 4), InvalidIndexError);
  const auto j = to_json(x);
  CHECK(j.dump() ==
        R"({"algebra":"D","n":4,"terms":[{"q":[2,2],"primed":false,"c":2},{"q":[2,1,1],"primed":true,"c":1}]})");
  CHECK(algebra_element_from_json(j) == x);
}
