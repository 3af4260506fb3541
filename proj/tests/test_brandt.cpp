#include "doctest.h"
#include "endrank/brandt.hpp"
#include "endrank/errors.hpp"

using namespace endrank;

TEST_CASE("brandt_add") {
  auto const P = [](std::size_t i, std::size_t j) {
    return BrandtElement::pair(i, j);
  };
  CHECK(brandt_add(P(1, 2), P(2, 1), 2) == P(1, 1));
  CHECK(brandt_add(P(1, 2), P(1, 2), 2) == BrandtElement::zero());
  CHECK(brandt_add(P(1, 1), BrandtElement::zero(), 2) == BrandtElement::zero());
  CHECK(brandt_add(BrandtElement::zero(), P(1, 1), 2) == BrandtElement::zero());
  CHECK(brandt_add(P(2, 3), P(3, 1), 3) == P(2, 1));

  CHECK_THROWS_AS(brandt_add(P(1, 3), P(1, 1), 2), input_error);
  CHECK_THROWS_AS(brandt_add(P(0, 1), P(1, 1), 2), input_error);
}

TEST_CASE("BrandtIndexing is theta first, then pairs row-major") {
  BrandtIndexing const idx(3);
  CHECK(idx.size() == 10);
  CHECK(idx.id_of(BrandtElement::zero()) == 0);
  CHECK(idx.id_of(BrandtElement::pair(1, 1)) == 1);
  CHECK(idx.id_of(BrandtElement::pair(1, 3)) == 3);
  CHECK(idx.id_of(BrandtElement::pair(2, 1)) == 4);
  CHECK(idx.id_of(BrandtElement::pair(3, 3)) == 9);
  for (element_id id = 0; id < idx.size(); ++id) {
    CHECK(idx.id_of(idx.element_of(id)) == id);
  }
  CHECK_THROWS_AS(idx.element_of(10), input_error);
  CHECK_THROWS_AS(idx.id_of(BrandtElement::pair(4, 1)), input_error);
  CHECK_THROWS_AS(BrandtIndexing(0), input_error);
}

TEST_CASE("build_brandt") {
  CHECK_THROWS_AS(build_brandt(0), input_error);

  auto const b1 = build_brandt(1);
  CHECK(b1.size() == 2);
  CHECK(idempotents(b1).is_full());

  auto const b2 = build_brandt(2);
  CHECK(b2.size() == 5);
  CHECK(idempotents(b2) == ElementSet::of(5, {0, 1, 4}));
  CHECK(b2.labels()
        == std::vector<std::string>{"theta", "(1,1)", "(1,2)", "(2,1)",
                                    "(2,2)"});

  CHECK(build_brandt(3).size() == 10);
  CHECK(validate(build_brandt(3)).ok());
}

TEST_CASE("B_n properties for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto const           t = build_brandt(n);
    BrandtIndexing const idx(n);
    CHECK(validate(t).ok());
    CHECK(t.size() == n * n + 1);
    CHECK(idempotents(t).count() == n + 1);
    CHECK(is_band(t) == (n == 1));
    for (element_id x = 0; x < t.size(); ++x) {
      CHECK(t(0, x) == 0);
      CHECK(t(x, 0) == 0);
      for (element_id y = 0; y < t.size(); ++y) {
        CHECK(idx.element_of(t(x, y))
              == brandt_add(idx.element_of(x), idx.element_of(y), n));
      }
    }
  }
}
