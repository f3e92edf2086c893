#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crystcohom/matrix.hpp"

namespace crystcohom {

enum class Notation {
  invariant_factors,  // Z^2 + Z_12 + Z_3 (largest factor first)
  primary,            // Z^2 + Z_4 + Z_3^2 (by prime, then descending exponent)
};

/// A finitely generated abelian group Z^r + Z_{d_1} + ... + Z_{d_k} in
/// canonical form: d_1 | d_2 | ... | d_k, every d_i >= 2.
class AbelianGroupInvariants {
 public:
  AbelianGroupInvariants() = default;

  /// Validates the canonical-form invariants.
  AbelianGroupInvariants(std::size_t free_rank, std::vector<BigInt> invariant_factors);

  /// Any list of cyclic orders; zeros become free summands and units vanish.
  static AbelianGroupInvariants from_cyclic_orders(std::size_t free_rank,
                                                   const std::vector<BigInt>& orders);
  static AbelianGroupInvariants free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroupInvariants cyclic(long order);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  BigInt torsion_order() const;

  /// prime -> exponents, each list sorted descending.
  std::map<BigInt, std::vector<unsigned>> primary_parts() const;

  AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& other) const;

  std::string render(Notation notation = Notation::invariant_factors) const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// Trial-division factorisation of a positive integer.
std::map<BigInt, unsigned> factorize(BigInt value);

/// Parses the rendered form ("0", "Z^2 + Z_4 + Z_2^3", with "+" or the
/// Unicode direct-sum sign). Throws ParseError.
AbelianGroupInvariants parse_group_notation(const std::string& text);

}  // namespace crystcohom
