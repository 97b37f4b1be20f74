#include <doctest.h>

#include "descalg/algebra_b.hpp"
#include "descalg/error.hpp"

using namespace descalg;

TEST_CASE("rank 2 products") {
  CHECK(to_text(multiply_basis_b({2}, {2}, 2)) == "2*[2] + 1*[1,1]");
  CHECK(to_text(multiply_basis_b({1, 1}, {2}, 2)) == "4*[1,1]");
  for (const auto& q : enumerate_b_basis(2)) CHECK(multiply_basis_b({}, q, 2) == BAlgebraElement::basis(q, 2));
}

TEST_CASE("rank 3 products") {
  CHECK(to_text(multiply_basis_b({1}, {2}, 3)) == "2*[1,1] + 1*[1,2]");
  CHECK(to_text(multiply_basis_b({2, 1}, {1, 2}, 3)) == "4*[1,2] + 10*[1,1,1]");
}

TEST_CASE("identity and zero") {
  CHECK(identity_b(2) == BAlgebraElement::basis({}, 2));
  for (int n = 0; n <= 4; ++n)
    for (const auto& q : enumerate_b_basis(n)) {
      CHECK(multiply_b(identity_b(n), BAlgebraElement::basis(q, n)) == BAlgebraElement::basis(q, n));
      CHECK(multiply_b(BAlgebraElement::basis(q, n), identity_b(n)) == BAlgebraElement::basis(q, n));
      CHECK(multiply_b(BAlgebraElement(n), BAlgebraElement::basis(q, n)).is_zero());
    }
}

TEST_CASE("associativity for N <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto basis = enumerate_b_basis(n);
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          const auto x = BAlgebraElement::basis(a, n), y = BAlgebraElement::basis(b, n),
                     z = BAlgebraElement::basis(c, n);
          CHECK(multiply_b(multiply_b(x, y), z) == multiply_b(x, multiply_b(y, z)));
        }
  }
}

TEST_CASE("element arithmetic") {
  const auto x = add_b(BAlgebraElement::basis({1}, 2), scale_b(BAlgebraElement::basis({2}, 2), 3));
  CHECK(to_text(x) == "1*[1] + 3*[2]");
  CHECK(add_b(x, scale_b(x, -1)).is_zero());
  CHECK_THROWS_AS(add_b(identity_b(2), identity_b(3)), RankMismatchError);
  CHECK_THROWS_AS(BAlgebraElement::basis({3}, 2), InvalidIndexError);
  CHECK(to_json(x).dump() ==
        R"({"algebra":"B","n":2,"terms":[{"q":[1],"primed":false,"c":1},{"q":[2],"primed":false,"c":3}]})");
  CHECK(to_text(BAlgebraElement(1)) == "0");
}
