#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystcohom/execution.hpp"
#include "crystcohom/group.hpp"
#include "crystcohom/lattice_resolution.hpp"

namespace crystcohom {

/// 1 (x)_L e^s_S, a free generator of A_{|S|, s}.
struct WallGenerator {
  int twist = 0;
  CubeGenerator cube;

  std::size_t r() const { return cube.degree(); }
  std::size_t total_degree() const { return cube.degree() + static_cast<std::size_t>(twist); }
  /// "e^3_14".
  std::string name() const;

  friend auto operator<=>(const WallGenerator&, const WallGenerator&) = default;
};

/// Element of the free Z[Gamma]-module A = sum A_{r,s}.
class WallChain {
 public:
  using Terms = std::map<WallGenerator, GroupRingElement>;

  WallChain() = default;
  /// Entries with an empty coefficient are dropped.
  explicit WallChain(Terms terms);

  void add(const WallGenerator& g, const GroupElement& e, Coeff c);
  void add(const WallGenerator& g, const GroupRingElement& rho);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  const GroupRingElement& coefficient(const WallGenerator& g) const;

  WallChain& operator+=(const WallChain& o);
  WallChain& operator-=(const WallChain& o);
  WallChain negated() const;
  /// Every generator's twist moved by `delta`.
  WallChain shifted(int delta) const;

  friend bool operator==(const WallChain&, const WallChain&) = default;

 private:
  Terms terms_;
};

/// Unordered accumulation buffer for WallChain sums.
class WallChainAccumulator {
 public:
  void add(const WallGenerator& g, const GroupElement& e, Coeff c) { parts_[g].add_term(e, c); }
  WallChain finish() const;

 private:
  std::map<WallGenerator, GroupRingAccumulator> parts_;
};

/// d0: the induced cube boundary, twist unchanged. Zero on r = 0.
WallChain d0(const WallGenerator& g, std::size_t n);

/// f: (1, x^a) (x)_L y -> (1, x^a) (x)_L h(y), applied termwise after moving
/// each coefficient to coset normal form.
WallChain homotopy_f(const HolonomyAction& h, const WallChain& c);
void homotopy_f(const HolonomyAction& h, const WallChain& c, WallChainAccumulator& out);

/// f on the augmentation target: x^a in C_s = ZG goes to x^a e^s.
WallChain lift_cyclic(const HolonomyAction& h, const GroupRingElement& zg, int twist);

/// epsilon_s: A_{0,s} -> C_s, (t, x^a) e^s -> x^a. Returns the ZG element
/// (translation parts zero); terms with r > 0 are ignored.
GroupRingElement augment_to_cyclic(const HolonomyAction& h, const WallChain& c);

/// The differential C_s -> C_{s-1} of the 2-periodic resolution as a ZG
/// element: x - 1 for odd s, 1 + x + ... + x^{q-1} for even s.
GroupRingElement cyclic_boundary(const HolonomyAction& h, int s);

/// Free Z[Gamma]-resolution (A, d = d0 + d1 + ...) of Z built by Wall's
/// recursion, through a fixed total degree.
///
/// d_k on A_{r,s} only depends on the parity of s once s >= k, so each d_k is
/// computed directly at s = k and s = k + 1 and reused (with the twist
/// shifted) beyond. Whenever the window reaches s = k + 2 that level is also
/// computed directly and compared against the reused one.
class WallResolution {
 public:
  WallResolution(HolonomyAction action, std::size_t max_total_degree,
                 Execution exec = Execution::parallel);

  const HolonomyAction& action() const { return action_; }
  std::size_t lattice_rank() const { return n_; }
  std::size_t max_total_degree() const { return max_degree_; }

  /// d_k(g); k = 0 gives d0. Zero outside the range of Wall's maps.
  WallChain dk(std::size_t k, const WallGenerator& g) const;
  /// d = sum_k d_k on a generator.
  WallChain differential(const WallGenerator& g) const;

  /// Z[Gamma]-linear extension of d_k (k = 0 allowed) to a chain.
  WallChain apply(std::size_t k, const WallChain& c) const;
  WallChain apply_total(const WallChain& c) const;

  /// Generators of A_m ordered by r, then lexicographically by index set.
  std::vector<WallGenerator> generators(std::size_t total_degree) const;

  /// Number of (k, generator) pairs whose reused value was rechecked exactly.
  std::size_t rechecked_count() const { return rechecked_; }

 private:
  const WallChain* lookup(std::size_t k, const WallGenerator& g, int& shift) const;
  void accumulate_apply(std::size_t k, const WallChain& c, WallChainAccumulator& out) const;
  WallChain compute(std::size_t k, const WallGenerator& g) const;
  void build(Execution exec);

  HolonomyAction action_;
  std::size_t n_;
  std::size_t max_degree_;
  std::size_t rechecked_ = 0;
  // memo_[k][mask][s - k] for s in {k, k + 1}; index 0 of the outer vector is d0.
  std::vector<std::vector<std::array<std::optional<WallChain>, 2>>> memo_;
};

}  // namespace crystcohom
