#include <doctest.h>

#include <set>

#include "descalg/composition.hpp"
#include "descalg/error.hpp"

using namespace descalg;

namespace {

GeneratorSet gens(int n, bool branch, std::initializer_list<int> plain) {
  GeneratorSet j(n);
  if (branch) j.insert_branch();
  for (int i : plain) j.insert(i);
  return j;
}

}  // namespace

TEST_CASE("class_of distinguishes the four classes") {
  CHECK(class_of({1, 3}, false, 4) == ClassTag::C1);
  CHECK(class_of({2, 2}, true, 4) == ClassTag::CnPrime);
  CHECK(class_of({2, 2}, false, 4) == ClassTag::Cn);
  CHECK(class_of({}, false, 4) == ClassTag::CLess);
  CHECK(class_of({1, 1}, false, 4) == ClassTag::CLess);
}

TEST_CASE("class_of rejects indices that name no basis element") {
  CHECK_THROWS_AS(class_of({3}, false, 4), InvalidIndexError);       // weight n-1
  CHECK_THROWS_AS(class_of({1, 3}, true, 4), InvalidIndexError);     // prime with q_1 = 1
  CHECK_THROWS_AS(class_of({2}, true, 4), InvalidIndexError);        // prime below weight n
  CHECK_THROWS_AS(class_of({2, 3}, false, 4), InvalidIndexError);    // weight > n
  CHECK_THROWS_AS(class_of({}, false, 1), InvalidIndexError);        // rank < 2
  CHECK_THROWS_AS(Composition({2, 0}), InvalidIndexError);
}

TEST_CASE("subset_of follows the four-case bijection") {
  CHECK(subset_of(BasisIndex({}, false, 4)) == GeneratorSet(4));
  CHECK(subset_of(BasisIndex({1, 3}, false, 4)) == gens(4, true, {1}));
  CHECK(subset_of(BasisIndex({3, 1}, true, 4)) == gens(4, false, {1, 3}));
  CHECK(subset_of(BasisIndex({2}, false, 4)) == gens(4, false, {2}));
  CHECK(subset_of(BasisIndex({1, 2, 1}, false, 4)) == gens(4, true, {1, 3}));
  CHECK(subset_of(BasisIndex({4}, false, 4)) == gens(4, true, {}));
  CHECK(subset_of(BasisIndex({4}, true, 4)) == gens(4, false, {1}));
}

TEST_CASE("index_of_subset inverts the bijection") {
  CHECK(index_of_subset(gens(4, false, {2})) == BasisIndex({2}, false, 4));
  CHECK(index_of_subset(GeneratorSet(4)) == BasisIndex({}, false, 4));
  CHECK(index_of_subset(gens(4, true, {1, 3})) == BasisIndex({1, 2, 1}, false, 4));
}

TEST_CASE("complement within S") {
  CHECK(complement(gens(4, false, {2})) == gens(4, true, {1, 3}));
  CHECK(complement(GeneratorSet(4)) == GeneratorSet::full(4));
  CHECK(complement(GeneratorSet::full(4)) == GeneratorSet(4));
}

TEST_CASE("enumerate_basis") {
  const auto b2 = enumerate_basis(2);
  REQUIRE(b2.size() == 4);
  // Canonical order within a weight is descending lexicographic.
  CHECK(format_index(b2[0]) == "[]");
  CHECK(format_index(b2[1]) == "[2]");
  CHECK(format_index(b2[2]) == "[2]'");
  CHECK(format_index(b2[3]) == "[1,1]");
  CHECK(enumerate_basis(4).size() == 16);
  for (const auto& b : enumerate_basis(3)) CHECK(b.weight() != 2);
  CHECK_THROWS_AS(enumerate_basis(1), InvalidIndexError);
}

TEST_CASE("bijection properties for n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto basis = enumerate_basis(n);
    CHECK(basis.size() == (std::size_t{1} << n));
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    std::set<std::uint32_t> masks;
    for (const auto& b : basis) {
      CAPTURE(format_index(b));
      const GeneratorSet j = subset_of(b);
      masks.insert(j.mask());
      CHECK(index_of_subset(j) == b);
      CHECK(j.size() == b.composition().size());
      CHECK(b.weight() != n - 1);
      const bool branch = j.has_branch();
      const bool s1 = j.contains(1);
      switch (b.class_tag()) {
        case ClassTag::CLess: CHECK((!branch && !s1)); break;
        case ClassTag::C1: CHECK((branch && s1)); break;
        case ClassTag::Cn: CHECK((branch && !s1)); break;
        case ClassTag::CnPrime: CHECK((!branch && s1)); break;
      }
    }
    CHECK(masks.size() == basis.size());
    // Every subset of S round-trips.
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const GeneratorSet j = GeneratorSet::from_mask(n, m);
      CHECK(subset_of(index_of_subset(j)) == j);
    }
  }
}

TEST_CASE("type B bijection") {
  CHECK(b_subset_of({}, 2) == GeneratorSet(2));
  CHECK(b_subset_of({2}, 2) == gens(2, true, {}));
  CHECK(b_subset_of({1}, 2) == gens(2, false, {1}));
  CHECK(b_subset_of({1, 1}, 2) == gens(2, true, {1}));
  for (int n = 0; n <= 5; ++n) {
    const auto basis = enumerate_b_basis(n);
    CHECK(basis.size() == (std::size_t{1} << n));
    std::set<std::uint32_t> masks;
    for (const auto& q : basis) {
      masks.insert(b_subset_of(q, n).mask());
      CHECK(b_index_of_subset(b_subset_of(q, n)) == q);
    }
    CHECK(masks.size() == basis.size());
  }
}

TEST_CASE("parse and format indices") {
  const BasisIndex b = parse_index("[3,1]'", 4);
  CHECK(b.composition() == Composition{3, 1});
  CHECK(b.primed());
  CHECK(parse_index("[]", 4) == BasisIndex({}, false, 4));
  CHECK_THROWS_AS(parse_index("[1,3]'", 4), InvalidIndexError);
  CHECK_THROWS_AS(parse_index("[3]", 4), InvalidIndexError);
  for (const char* bad : {"", "[", "[1,", "[1 ,3]", "1,3", "[1,3]''", "[a]", "[-1]", "[1,,2]", "[+1]"})
    CHECK_THROWS_AS(parse_index(bad, 4), Error);
  for (int n = 2; n <= 5; ++n)
    for (const auto& x : enumerate_basis(n)) CHECK(parse_index(format_index(x), n) == x);
  CHECK(format_index(BasisIndex({2, 1, 1}, true, 4)) == "[2,1,1]'");
  CHECK_THROWS_AS(parse_composition("[2]'"), InvalidIndexError);
}

TEST_CASE("format_generators") {
  CHECK(format_generators(gens(4, true, {1}), CoxeterType::D) == "{s_1',s_1}");
  CHECK(format_generators(GeneratorSet(4), CoxeterType::D) == "∅");
  CHECK(format_generators(gens(3, true, {2}), CoxeterType::B) == "{t,s_2}");
}
