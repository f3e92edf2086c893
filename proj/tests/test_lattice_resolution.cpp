#include <doctest.h>

#include "crystcohom/lattice_resolution.hpp"
#include "generators.hpp"
#include "properties.hpp"

using namespace crystcohom;

namespace {

LatticeChain single(std::size_t n, CubeGenerator g, std::initializer_list<std::int32_t> exps, Coeff c = 1) {
  LatticeChain out;
  out.degree = static_cast<int>(g.degree());
  out.add(g, lattice_monomial(n, exps), c);
  return out;
}

}  // namespace

TEST_CASE("cube names and indices") {
  CHECK(CubeGenerator{}.name() == "e");
  CHECK(CubeGenerator::from_indices({0, 1, 3}).name() == "e_124");
  CHECK(CubeGenerator::from_indices({2, 0}).indices() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("cube boundary of small cubes") {
  const std::size_t n = 2;
  const auto e1 = CubeGenerator::from_indices({0});
  const auto e2 = CubeGenerator::from_indices({1});
  const auto e12 = CubeGenerator::from_indices({0, 1});

  LatticeChain want1;
  want1.degree = 0;
  want1.add(CubeGenerator{}, lattice_monomial(n, {1, 0}), 1);
  want1.add(CubeGenerator{}, lattice_monomial(n, {0, 0}), -1);
  CHECK(cube_boundary(single(n, e1, {0, 0}), n) == want1);

  LatticeChain want12;
  want12.degree = 1;
  want12.add(e2, lattice_monomial(n, {1, 0}), 1);
  want12.add(e2, lattice_monomial(n, {0, 0}), -1);
  want12.add(e1, lattice_monomial(n, {0, 1}), -1);
  want12.add(e1, lattice_monomial(n, {0, 0}), 1);
  CHECK(cube_boundary(single(n, e12, {0, 0}), n) == want12);

  const auto aug = cube_boundary(single(n, CubeGenerator{}, {3, -1}, 5), n);
  CHECK(aug.degree == -1);
  CHECK(aug.scalar == 5);
}

TEST_CASE("C symbol cases") {
  const std::size_t n = 4;
  const auto e1 = CubeGenerator::from_indices({0});
  LatticeChain plus;
  plus.degree = 1;
  plus.add(e1, lattice_monomial(n, {0, 0, 0, 0}), 1);
  plus.add(e1, lattice_monomial(n, {1, 0, 0, 0}), 1);
  CHECK(c_symbol(2, 0, e1, n) == plus);
  CHECK(c_symbol(0, 2, e1, n).is_zero());
  const auto e2 = CubeGenerator::from_indices({1});
  LatticeChain minus;
  minus.degree = 1;
  minus.add(e2, lattice_monomial(n, {0, 0, -1, 0}), -1);
  CHECK(c_symbol(-1, 2, e2, n) == minus);
}

TEST_CASE("homotopy base cases") {
  const std::size_t n = 4;
  LatticeChain one;
  one.degree = -1;
  one.scalar = 1;
  CHECK(contracting_homotopy(one, n) == single(n, CubeGenerator{}, {0, 0, 0, 0}));
  // Generators containing coordinate 1 are killed.
  CHECK(contracting_homotopy(single(n, CubeGenerator::from_indices({0, 2}), {2, -1, 3, 1}), n).is_zero());
  // Top-degree cubes have no image.
  CHECK(contracting_homotopy(single(n, CubeGenerator{15}, {1, 1, 1, 1}), n).is_zero());
}

TEST_CASE("boundary squares to zero") {
  testgen::Rng rng(41);
  CHECK(props::boundary_squares_zero(rng, 300).empty());
}

TEST_CASE("homotopy identity d h + h d = id") {
  testgen::Rng rng(42);
  const auto failures = props::homotopy_identity(rng, 400);
  CHECK_MESSAGE(failures.empty(), (failures.empty() ? "" : failures.front()));
}

TEST_CASE("homotopy matches the n = 4 closed forms") {
  testgen::Rng rng(43);
  const auto failures = props::homotopy_closed_forms_n4(rng, 25);
  CHECK_MESSAGE(failures.empty(), (failures.empty() ? "" : failures.front()));
}

TEST_CASE("B_m has C(n, m) generators") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 0; m <= n; ++m) CHECK(lexicographic_subsets(n, m).size() == props::binomial(n, m));
}
