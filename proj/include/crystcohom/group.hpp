#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crystcohom/matrix.hpp"

namespace crystcohom {

inline constexpr std::size_t kMaxLatticeRank = 12;

/// Group-ring coefficients: checked 64-bit, overflow raises OverflowError.
using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Lattice vector with inline storage; only the first `rank` entries are used.
using Translation = std::array<std::int32_t, kMaxLatticeRank>;

/// The element t * x^a of Z^n x| Z_q (translation first, then holonomy power),
/// with 0 <= a < q.
struct GroupElement {
  Translation t{};
  std::int32_t a = 0;
  std::uint8_t rank = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// g = x^a * s, the decomposition used to move a group element across the
/// tensor product with the lattice resolution.
struct CosetForm {
  std::int32_t a = 0;
  Translation s{};
  friend bool operator==(const CosetForm&, const CosetForm&) = default;
};

/// Order-q integer matrix M defining Gamma = Z^n x| Z_q.
///
/// Conjugation convention: with x the holonomy generator and t a lattice
/// vector, x^{-1} t x = M^T t (equivalently, row vectors are acted on from the
/// right by M). This is the convention under which the holonomy matrices of
/// the bundled catalog are printed.
class HolonomyAction {
 public:
  /// Validates |det M| = 1 and that q is the exact order of M.
  static HolonomyAction crystallographic(const MatrixZ& m, int q);

  /// Only requires M^q = I, so non-faithful actions (e.g. M = I with q > 1,
  /// the product Z^n x Z_q) are allowed.
  static HolonomyAction semidirect(const MatrixZ& m, int q);

  std::size_t rank() const { return n_; }
  int order() const { return q_; }
  const MatrixZ& matrix() const { return m_; }
  bool faithful() const { return faithful_; }

  GroupElement identity() const;
  /// x = (0, x^1).
  GroupElement generator() const;
  /// t_k, zero-based coordinate k.
  GroupElement translation(std::size_t k) const;
  GroupElement element(std::span<const std::int64_t> t, long a) const;
  GroupElement from_coset(long a, std::span<const std::int64_t> s) const;
  GroupElement from_coset(const CosetForm& c) const;

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement invert(const GroupElement& g) const;
  CosetForm coset_normal_form(const GroupElement& g) const;

  /// The lattice automorphism t -> x^a t x^{-a}.
  Translation conjugate(int a, const Translation& t) const;
  /// The lattice automorphism t -> x^{-a} t x^{a}.
  Translation unconjugate(int a, const Translation& t) const;

  /// Throws MismatchedGroup unless g has this rank and a residue in range.
  void check(const GroupElement& g) const;

  friend bool operator==(const HolonomyAction& a, const HolonomyAction& b) {
    return a.q_ == b.q_ && a.m_ == b.m_;
  }

 private:
  HolonomyAction(const MatrixZ& m, int q, bool require_faithful);
  Translation apply(const std::vector<std::int64_t>& mat, const Translation& t) const;

  std::size_t n_ = 0;
  int q_ = 1;
  bool faithful_ = true;
  MatrixZ m_;
  // transpose_powers_[a] = (M^T)^a, row-major n x n.
  std::vector<std::vector<std::int64_t>> transpose_powers_;
};

/// Smallest k in [1, bound] with M^k = I, or nullopt (including when the
/// powers overflow 64-bit entries, which finite-order matrices never do).
std::optional<unsigned> find_order(const MatrixZ& m, unsigned long bound);

/// Sparse Z-combination of group elements; zero coefficients are never stored.
class GroupRingElement {
 public:
  using Terms = std::map<GroupElement, Coeff>;

  GroupRingElement() = default;
  GroupRingElement(const GroupElement& g, Coeff c = 1) { add_term(g, c); }

  /// Any list of terms; duplicates are merged and zeros dropped.
  static GroupRingElement from_terms(std::vector<std::pair<GroupElement, Coeff>> terms);

  static GroupRingElement integer(const HolonomyAction& h, Coeff c) {
    return GroupRingElement(h.identity(), c);
  }

  void add_term(const GroupElement& g, Coeff c);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const GroupElement& g) const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator-() const;
  GroupRingElement scaled(Coeff c) const;

  /// Sum of coefficients (the ring map to Z).
  Coeff augmentation() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Unordered accumulation buffer for long sums of group-ring terms; much
/// cheaper per term than GroupRingElement::add_term on large elements.
class GroupRingAccumulator {
 public:
  void add_term(const GroupElement& g, Coeff c);
  bool empty() const { return terms_.empty(); }
  GroupRingElement finish() const;

 private:
  std::unordered_map<GroupElement, Coeff, GroupElementHash> terms_;
};

/// rho * sigma in Z[Gamma].
GroupRingElement ring_multiply(const HolonomyAction& h, const GroupRingElement& rho,
                               const GroupRingElement& sigma);
/// g * rho.
GroupRingElement left_multiply(const HolonomyAction& h, const GroupElement& g,
                               const GroupRingElement& rho);
/// Accumulates c * g * rho into out.
void accumulate_left_product(const HolonomyAction& h, Coeff c, const GroupElement& g,
                             const GroupRingElement& rho, GroupRingElement& out);

/// "x^2 t1^-1 t4" (coset normal form, coordinates 1-based).
std::string format_element(const HolonomyAction& h, const GroupElement& g);
/// "x^2 t1^-1 t4 - 1 + 3 x".
std::string format_ring_element(const HolonomyAction& h, const GroupRingElement& rho);

}  // namespace crystcohom
