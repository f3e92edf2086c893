#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "crystcohom/group.hpp"

namespace crystcohom {

/// The cube e_{i_1 ... i_m} of the standard cubical tessellation of R^n,
/// stored as a bitmask over zero-based coordinates.
struct CubeGenerator {
  std::uint32_t mask = 0;

  static CubeGenerator from_indices(std::initializer_list<std::size_t> zero_based);
  std::size_t degree() const { return static_cast<std::size_t>(std::popcount(mask)); }
  std::vector<std::size_t> indices() const;
  bool contains(std::size_t k) const { return (mask >> k) & 1u; }
  /// "e", "e_1", "e_124" (1-based).
  std::string name() const;

  friend auto operator<=>(const CubeGenerator&, const CubeGenerator&) = default;
};

/// Element of B_m over Z[Z^n] (coefficients have holonomy power 0); degree -1
/// is the augmentation target Z and is carried in `scalar`.
struct LatticeChain {
  int degree = 0;
  std::map<CubeGenerator, GroupRingElement> terms;
  Coeff scalar = 0;

  void add(CubeGenerator g, const GroupElement& monomial, Coeff c);
  bool is_zero() const { return terms.empty() && scalar == 0; }
  LatticeChain& operator+=(const LatticeChain& o);
  friend bool operator==(const LatticeChain&, const LatticeChain&) = default;
};

/// Lattice monomial t^u as a group element of rank n.
GroupElement lattice_monomial(std::size_t n, std::initializer_list<std::int32_t> exponents);

/// d(e_S) = sum_j (-1)^{j-1} (t_{i_j} - 1) e_{S minus i_j}; degree 0 maps to Z
/// by the augmentation.
LatticeChain cube_boundary(const LatticeChain& c, std::size_t n);

/// C(j, t_k, e_S): sum_{i=0}^{j-1} t_k^i e_S for j > 0,
/// -sum_{i=1}^{-j} t_k^{-i} e_S for j < 0, zero for j = 0.
LatticeChain c_symbol(long j, std::size_t k, CubeGenerator s, std::size_t n);

/// Contracting homotopy of the monomial t^u e_S, as the n-fold tensor power
/// of the rank-one homotopy with coordinate 1 innermost. Calls
/// emit(cube_mask, translation, coefficient) once per output term.
///
/// Only coordinates k below the smallest index of S contribute: coordinates
/// before k are collapsed by the augmentation and those after k are kept.
template <class Emit>
void homotopy_monomial(const Translation& u, std::uint32_t cube, std::size_t n, Emit&& emit) {
  const std::size_t limit =
      cube == 0 ? n : static_cast<std::size_t>(std::countr_zero(cube));
  for (std::size_t k = 0; k < limit; ++k) {
    const std::int32_t j = u[k];
    if (j == 0) continue;
    Translation v{};
    for (std::size_t m = k + 1; m < n; ++m) v[m] = u[m];
    const std::uint32_t target = cube | (1u << k);
    if (j > 0) {
      for (std::int32_t i = 0; i < j; ++i) {
        v[k] = i;
        emit(target, v, Coeff{1});
      }
    } else {
      for (std::int32_t i = 1; i <= -j; ++i) {
        v[k] = -i;
        emit(target, v, Coeff{-1});
      }
    }
  }
}

/// h: B_m -> B_{m+1} with h d + d h = id on the augmented complex; h(1) = e.
/// Z-linear (applied monomial by monomial), not Z[L]-linear.
LatticeChain contracting_homotopy(const LatticeChain& c, std::size_t n);

}  // namespace crystcohom
