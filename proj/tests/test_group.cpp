#include <doctest.h>

#include <vector>

#include "crystcohom/catalog.hpp"
#include "crystcohom/errors.hpp"
#include "crystcohom/group.hpp"
#include "generators.hpp"

using namespace crystcohom;

namespace {

HolonomyAction z4_group() { return find_catalog_entry("min.27-1.5").action(); }

std::vector<std::int64_t> vec(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

TEST_CASE("validation") {
  const MatrixZ m = find_catalog_entry("min.27-1.5").matrix;
  CHECK_NOTHROW(HolonomyAction::crystallographic(m, 4));
  CHECK_THROWS_AS(HolonomyAction::crystallographic(m, 2), ValidationError);
  CHECK_THROWS_AS(HolonomyAction::crystallographic(m, 8), ValidationError);
  const MatrixZ det2{{2, 0}, {0, 1}}, shear{{1, 1}, {0, 1}}, wide{{1, 0}};
  CHECK_THROWS_AS(HolonomyAction::crystallographic(det2, 2), ValidationError);
  CHECK_THROWS_AS(HolonomyAction::crystallographic(shear, 6), ValidationError);
  CHECK_THROWS_AS(HolonomyAction::crystallographic(wide, 1), ValidationError);
  CHECK_THROWS_AS(HolonomyAction::crystallographic(MatrixZ::identity(13), 1), ValidationError);
  CHECK_THROWS_AS(HolonomyAction::crystallographic(MatrixZ::identity(2), 3), ValidationError);
  CHECK_NOTHROW(HolonomyAction::semidirect(MatrixZ::identity(2), 3));
  CHECK(find_order(m, 100) == 4u);
  CHECK(find_order(shear, 100) == std::nullopt);
}

TEST_CASE("conjugation convention") {
  // x^{-1} t x = M^T t.
  const auto h = z4_group();
  const MatrixZ mt = h.matrix().transpose();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto t = h.translation(k);
    const auto x = h.generator();
    const auto conj = h.multiply(h.multiply(h.invert(x), t), x);
    CHECK(conj.a == 0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(conj.t[i] == mt(i, k).get_si());
  }
}

TEST_CASE("holonomy powers wrap around") {
  const auto h = z4_group();
  const auto x3 = h.element(vec({0, 0, 0, 0}), 3);
  const auto x2 = h.element(vec({0, 0, 0, 0}), 2);
  CHECK(h.multiply(x3, x2) == h.generator());
  CHECK(h.invert(h.generator()) == x3);
  CHECK(h.invert(h.identity()) == h.identity());
  const auto t = h.element(vec({1, -2, 0, 3}), 0);
  CHECK(h.invert(t) == h.element(vec({-1, 2, 0, -3}), 0));
}

TEST_CASE("group axioms on random elements") {
  testgen::Rng rng(31);
  for (const auto& entry : catalog()) {
    if (entry.n > 6) continue;
    const auto h = entry.action();
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = testgen::random_element(rng, h, 5);
      const auto b = testgen::random_element(rng, h, 5);
      const auto c = testgen::random_element(rng, h, 5);
      CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
      CHECK(h.multiply(a, h.identity()) == a);
      CHECK(h.multiply(h.identity(), a) == a);
      CHECK(h.multiply(a, h.invert(a)) == h.identity());
      CHECK(h.multiply(h.invert(a), a) == h.identity());
      const auto coset = h.coset_normal_form(a);
      CHECK(h.from_coset(coset) == a);
      CHECK(h.multiply(h.element(std::vector<std::int64_t>(h.rank(), 0), coset.a),
                       h.from_coset(CosetForm{0, coset.s})) == a);
      CHECK(h.unconjugate(a.a, h.conjugate(a.a, b.t)) == b.t);
    }
  }
}

TEST_CASE("mismatched groups are rejected") {
  const auto h = z4_group();
  const auto other = HolonomyAction::crystallographic(MatrixZ{{-1}}, 2);
  CHECK_THROWS_AS(h.multiply(h.identity(), other.identity()), MismatchedGroup);
  CHECK_THROWS_AS(h.translation(4), MismatchedGroup);
  CHECK_THROWS_AS(h.element(vec({1, 2}), 0), MismatchedGroup);
}

TEST_CASE("group ring arithmetic") {
  const auto h = z4_group();
  const auto x = h.generator();
  const auto one = h.identity();
  const GroupRingElement x_minus_1 = GroupRingElement(x) - GroupRingElement(one);
  GroupRingElement norm;
  for (int a = 0; a < 4; ++a) norm.add_term(h.element(vec({0, 0, 0, 0}), a), 1);
  CHECK(ring_multiply(h, x_minus_1, norm).empty());
  CHECK(norm.augmentation() == 4);
  CHECK(x_minus_1.augmentation() == 0);
  CHECK(GroupRingElement{}.augmentation() == 0);
  CHECK((x_minus_1 + (-x_minus_1)).empty());
  CHECK(x_minus_1.scaled(3).coefficient(x) == 3);
  CHECK(format_ring_element(h, x_minus_1) == "-1 + x");
  CHECK(format_element(h, h.from_coset(1, vec({-1, 0, 0, 1}))) == "x t1^-1 t4");
}

TEST_CASE("group ring properties on random elements") {
  testgen::Rng rng(32);
  const auto h = z4_group();
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = testgen::random_ring_element(rng, h, 4, 3);
    const auto s = testgen::random_ring_element(rng, h, 4, 3);
    const auto t = testgen::random_ring_element(rng, h, 3, 3);
    CHECK(ring_multiply(h, r, s).augmentation() == r.augmentation() * s.augmentation());
    CHECK(ring_multiply(h, ring_multiply(h, r, s), t) == ring_multiply(h, r, ring_multiply(h, s, t)));
    CHECK(ring_multiply(h, r, s + t) == ring_multiply(h, r, s) + ring_multiply(h, r, t));
    const auto g = testgen::random_element(rng, h, 3);
    CHECK(left_multiply(h, g, r) == ring_multiply(h, GroupRingElement(g), r));
    GroupRingElement acc = s;
    accumulate_left_product(h, 2, g, r, acc);
    CHECK(acc == s + left_multiply(h, g, r).scaled(2));
  }
}

TEST_CASE("accumulator agrees with the ordered map") {
  testgen::Rng rng(33);
  const auto h = z4_group();
  for (int trial = 0; trial < 20; ++trial) {
    GroupRingElement direct;
    GroupRingAccumulator acc;
    std::vector<std::pair<GroupElement, Coeff>> terms;
    for (int i = 0; i < 60; ++i) {
      const auto g = testgen::random_element(rng, h, 1);
      const Coeff c = rng.uniform(-2, 2);
      direct.add_term(g, c);
      acc.add_term(g, c);
      terms.emplace_back(g, c);
    }
    CHECK(acc.finish() == direct);
    CHECK(GroupRingElement::from_terms(terms) == direct);
  }
}

TEST_CASE("coefficient overflow is detected") {
  CHECK_THROWS_AS(checked_mul(Coeff{1} << 62, 4), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK(checked_add(2, 3) == 5);
}
