#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crystcohom/abelian.hpp"
#include "crystcohom/execution.hpp"
#include "crystcohom/group.hpp"
#include "crystcohom/matrix.hpp"
#include "crystcohom/wall_resolution.hpp"

namespace crystcohom {

/// (F, delta) = Hom_{Z Gamma}(A, Z). deltas[m] maps F_m -> F_{m+1} and is a
/// dims[m+1] x dims[m] matrix.
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<MatrixZ> deltas;
};

/// Coboundaries delta_0 .. delta_{top}; needs the resolution through total
/// degree top + 1. Entry (i, j) of delta_m is the augmentation of the
/// coefficient of the j-th generator of A_m in d of the i-th generator of A_{m+1}.
CochainComplex hom_to_coboundaries(const WallResolution& res, std::size_t top,
                                   Execution exec = Execution::parallel);

/// Period-2 behaviour of a cohomology sequence above the lattice rank.
struct PeriodicTail {
  std::size_t start = 0;  // n + 1
  AbelianGroupInvariants even;
  AbelianGroupInvariants odd;
  const AbelianGroupInvariants& at(std::size_t degree) const {
    return degree % 2 == 0 ? even : odd;
  }
};

struct CohomologyOptions {
  Execution exec = Execution::parallel;
  /// Compute through n + 3 and report the verified period-2 tail. Without it
  /// only H^0 .. H^top are computed (top may then be below n + 2).
  bool periodic_tail = true;
};

struct GammaCohomology {
  std::vector<std::size_t> dims;                     // rank of F_m, m = 0 .. computed
  std::vector<std::vector<BigInt>> smith_diagonals;  // [m] is the diagonal of delta_m
  std::vector<AbelianGroupInvariants> groups;        // H^0 .. H^top
  std::optional<PeriodicTail> tail;
  std::size_t rechecked = 0;  // parity rechecks performed while building the resolution
};

/// H^*(Gamma; Z) through `top`. Throws ConsistencyError if H^{n+1} and H^{n+3}
/// disagree.
GammaCohomology gamma_cohomology(const HolonomyAction& h, std::size_t top,
                                 const CohomologyOptions& options = {});

/// H^*(Z_q; Z^k) with the generator acting by mj.
struct CyclicCohomology {
  AbelianGroupInvariants h0;
  AbelianGroupInvariants even;  // degrees 2, 4, ...
  AbelianGroupInvariants odd;
  std::vector<BigInt> smith_minus_identity;  // SNF diagonal of mj - I
  std::vector<BigInt> smith_norm;            // SNF diagonal of the norm
  const AbelianGroupInvariants& at(std::size_t i) const {
    return i == 0 ? h0 : (i % 2 == 0 ? even : odd);
  }
};

CyclicCohomology cyclic_cohomology_with_coeffs(const MatrixZ& mj, int q);

/// E_2^{i,j} = H^i(Z_q, H^j(Z^n)), with H^j(Z^n) = Lambda^j acted on by the
/// compound of M^T.
struct E2Page {
  std::size_t n = 0;
  int q = 1;
  std::vector<MatrixZ> actions;       // [j] = Lambda^j(M^T)
  std::vector<CyclicCohomology> rows;  // [j]

  const AbelianGroupInvariants& term(std::size_t i, std::size_t j) const { return rows.at(j).at(i); }
  /// The sum over i + j = k.
  AbelianGroupInvariants total(std::size_t k) const;
};

E2Page e2_page(const HolonomyAction& h);

/// nullity(Lambda^k(M^T) - I) for k = 0 .. n.
std::vector<std::size_t> rational_betti_numbers(const HolonomyAction& h);

enum class Verdict { equal, rank_mismatch, torsion_mismatch, extension_problem };

std::string to_string(Verdict v);
/// Throws ParseError.
Verdict parse_verdict(const std::string& text);

Verdict classify(const AbelianGroupInvariants& lhs, const AbelianGroupInvariants& rhs);

struct DegreeComparison {
  std::size_t degree = 0;
  AbelianGroupInvariants lhs;  // H^k(Gamma)
  AbelianGroupInvariants rhs;  // E2 sum
  Verdict verdict = Verdict::equal;
  friend bool operator==(const DegreeComparison&, const DegreeComparison&) = default;
};

struct TailComparison {
  std::size_t start = 0;
  DegreeComparison even;  // degree field holds the first even degree >= start
  DegreeComparison odd;
  friend bool operator==(const TailComparison&, const TailComparison&) = default;
};

struct ConjectureReport {
  std::string label;
  std::size_t n = 0;
  int q = 1;
  std::vector<DegreeComparison> degrees;  // 1 .. top
  std::optional<TailComparison> tail;

  /// Smallest degree whose verdict is not `equal`, tail included.
  std::optional<std::size_t> first_counterexample() const;
  bool holds() const { return !first_counterexample(); }
  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Builds both sides and the per-degree verdicts. Throws ConsistencyError when
/// the free ranks of the two sides, or either side and the rational Betti
/// numbers, disagree.
ConjectureReport compare_conjecture(const HolonomyAction& h, std::size_t top,
                                    const CohomologyOptions& options = {},
                                    std::string label = {});

/// Same, reusing already computed sides.
ConjectureReport compare_conjecture(const HolonomyAction& h, const GammaCohomology& lhs,
                                    const E2Page& rhs, std::string label = {});

}  // namespace crystcohom
