#include "crystcohom/cohomology.hpp"

#include <algorithm>
#include <map>

#include "crystcohom/errors.hpp"
#include "crystcohom/linalg.hpp"

namespace crystcohom {

CochainComplex hom_to_coboundaries(const WallResolution& res, std::size_t top, Execution exec) {
  if (top + 1 > res.max_total_degree())
    throw DimensionError("coboundary delta_" + std::to_string(top) + " needs the resolution through degree " +
                         std::to_string(top + 1));
  CochainComplex out;
  std::vector<std::vector<WallGenerator>> gens;
  for (std::size_t m = 0; m <= top + 1; ++m) {
    gens.push_back(res.generators(m));
    out.dims.push_back(gens.back().size());
  }
  for (std::size_t m = 0; m <= top; ++m) {
    std::map<WallGenerator, std::size_t> column;
    for (std::size_t j = 0; j < gens[m].size(); ++j) column.emplace(gens[m][j], j);
    MatrixZ delta(out.dims[m + 1], out.dims[m]);
    const auto& sources = gens[m + 1];
    const long count = static_cast<long>(sources.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel && count > 1)
    for (long i = 0; i < count; ++i) {
      const WallChain image = res.differential(sources[static_cast<std::size_t>(i)]);
      for (const auto& [target, rho] : image.terms()) {
        auto it = column.find(target);
        if (it == column.end()) continue;
        delta(static_cast<std::size_t>(i), it->second) += static_cast<long>(rho.augmentation());
      }
    }
    out.deltas.push_back(std::move(delta));
  }
  return out;
}

GammaCohomology gamma_cohomology(const HolonomyAction& h, std::size_t top,
                                 const CohomologyOptions& options) {
  const std::size_t n = h.rank();
  if (options.periodic_tail && top < n + 2)
    throw DimensionError("top degree " + std::to_string(top) + " is below n + 2 = " +
                         std::to_string(n + 2));
  if (top < 1) throw DimensionError("top degree must be at least 1");
  const std::size_t reach = options.periodic_tail ? std::max(top, n + 3) : top;

  const WallResolution res(h, reach + 1, options.exec);
  const CochainComplex complex = hom_to_coboundaries(res, reach, options.exec);

  GammaCohomology out;
  out.rechecked = res.rechecked_count();
  out.dims = complex.dims;
  for (std::size_t m = 0; m < complex.deltas.size(); ++m) {
    if (m > 0 && !(complex.deltas[m] * complex.deltas[m - 1]).is_zero())
      throw ChainConditionError("delta_" + std::to_string(m) + " delta_" + std::to_string(m - 1) +
                                " != 0");
    out.smith_diagonals.push_back(smith_diagonal(complex.deltas[m], options.exec));
  }
  // The last module has no outgoing coboundary in the list, so its group is
  // not final and is dropped.
  out.groups = cohomology_from_smith_diagonals(out.smith_diagonals, out.dims);
  out.groups.resize(reach + 1);

  if (options.periodic_tail) {
    if (!(out.groups[n + 1] == out.groups[n + 3]))
      throw ConsistencyError("H^" + std::to_string(n + 1) + " = " + out.groups[n + 1].render() +
                             " but H^" + std::to_string(n + 3) + " = " +
                             out.groups[n + 3].render());
    if (reach >= n + 4 && !(out.groups[n + 2] == out.groups[n + 4]))
      throw ConsistencyError("H^" + std::to_string(n + 2) + " and H^" + std::to_string(n + 4) +
                             " differ");
    PeriodicTail tail;
    tail.start = n + 1;
    tail.even = out.groups[(n + 1) % 2 == 0 ? n + 1 : n + 2];
    tail.odd = out.groups[(n + 1) % 2 == 1 ? n + 1 : n + 2];
    out.tail = std::move(tail);
  }
  out.groups.resize(top + 1);
  return out;
}

CyclicCohomology cyclic_cohomology_with_coeffs(const MatrixZ& mj, int q) {
  if (!mj.is_square()) throw DimensionError("coefficient action must be square");
  if (q < 1) throw ValidationError("cyclic group order must be positive");
  const std::size_t k = mj.rows();
  const MatrixZ id = MatrixZ::identity(k);
  if (!(power(mj, static_cast<unsigned>(q)) == id))
    throw ValidationError("coefficient action does not have order dividing " + std::to_string(q));

  const MatrixZ minus_identity = mj - id;
  MatrixZ norm = MatrixZ::zero(k, k);
  MatrixZ p = id;
  for (int a = 0; a < q; ++a) {
    norm = norm + p;
    p = p * mj;
  }

  CyclicCohomology out;
  out.h0 = AbelianGroupInvariants::free(k - rank(minus_identity));
  out.even = subquotient_invariants(minus_identity, norm);
  out.odd = subquotient_invariants(norm, minus_identity);
  out.smith_minus_identity = smith_diagonal(minus_identity);
  out.smith_norm = smith_diagonal(norm);
  return out;
}

AbelianGroupInvariants E2Page::total(std::size_t k) const {
  AbelianGroupInvariants sum;
  for (std::size_t j = 0; j <= std::min(n, k); ++j) sum = sum.direct_sum(term(k - j, j));
  return sum;
}

E2Page e2_page(const HolonomyAction& h) {
  E2Page out;
  out.n = h.rank();
  out.q = h.order();
  const MatrixZ p = h.matrix().transpose();
  for (std::size_t j = 0; j <= out.n; ++j) {
    out.actions.push_back(compound_matrix(p, j));
    out.rows.push_back(cyclic_cohomology_with_coeffs(out.actions.back(), out.q));
  }
  return out;
}

std::vector<std::size_t> rational_betti_numbers(const HolonomyAction& h) {
  const MatrixZ p = h.matrix().transpose();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= h.rank(); ++k) {
    const MatrixZ c = compound_matrix(p, k);
    out.push_back(c.rows() - rank(c - MatrixZ::identity(c.rows())));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::rank_mismatch: return "rank-mismatch";
    case Verdict::torsion_mismatch: return "torsion-mismatch";
    case Verdict::extension_problem: return "extension-problem";
  }
  return "?";
}

Verdict parse_verdict(const std::string& text) {
  for (Verdict v : {Verdict::equal, Verdict::rank_mismatch, Verdict::torsion_mismatch,
                    Verdict::extension_problem})
    if (to_string(v) == text) return v;
  throw ParseError("unknown verdict '" + text + "'");
}

Verdict classify(const AbelianGroupInvariants& lhs, const AbelianGroupInvariants& rhs) {
  if (lhs == rhs) return Verdict::equal;
  if (lhs.free_rank() != rhs.free_rank()) return Verdict::rank_mismatch;
  if (lhs.torsion_order() == rhs.torsion_order()) return Verdict::extension_problem;
  return Verdict::torsion_mismatch;
}

std::optional<std::size_t> ConjectureReport::first_counterexample() const {
  std::optional<std::size_t> first;
  auto consider = [&](const DegreeComparison& c) {
    if (c.verdict != Verdict::equal && (!first || c.degree < *first)) first = c.degree;
  };
  for (const auto& c : degrees) consider(c);
  if (tail) {
    consider(tail->even);
    consider(tail->odd);
  }
  return first;
}

namespace {

DegreeComparison compare_degree(std::size_t degree, const AbelianGroupInvariants& lhs,
                                const AbelianGroupInvariants& rhs,
                                const std::vector<std::size_t>& betti) {
  const std::size_t rational = degree < betti.size() ? betti[degree] : 0;
  if (lhs.free_rank() != rhs.free_rank() || lhs.free_rank() != rational)
    throw ConsistencyError("rational check failed in degree " + std::to_string(degree) +
                           ": H^k has rank " + std::to_string(lhs.free_rank()) +
                           ", E2 sum has rank " + std::to_string(rhs.free_rank()) +
                           ", expected " + std::to_string(rational));
  return {degree, lhs, rhs, classify(lhs, rhs)};
}

}  // namespace

ConjectureReport compare_conjecture(const HolonomyAction& h, const GammaCohomology& lhs,
                                    const E2Page& rhs, std::string label) {
  ConjectureReport out;
  out.label = std::move(label);
  out.n = h.rank();
  out.q = h.order();
  const auto betti = rational_betti_numbers(h);
  for (std::size_t k = 1; k < lhs.groups.size(); ++k)
    out.degrees.push_back(compare_degree(k, lhs.groups[k], rhs.total(k), betti));
  if (lhs.tail) {
    TailComparison tail;
    tail.start = lhs.tail->start;
    const std::size_t even = tail.start % 2 == 0 ? tail.start : tail.start + 1;
    const std::size_t odd = tail.start % 2 == 1 ? tail.start : tail.start + 1;
    tail.even = compare_degree(even, lhs.tail->even, rhs.total(even), betti);
    tail.odd = compare_degree(odd, lhs.tail->odd, rhs.total(odd), betti);
    out.tail = std::move(tail);
  }
  return out;
}

ConjectureReport compare_conjecture(const HolonomyAction& h, std::size_t top,
                                    const CohomologyOptions& options, std::string label) {
  const GammaCohomology lhs = gamma_cohomology(h, top, options);
  return compare_conjecture(h, lhs, e2_page(h), std::move(label));
}

}  // namespace crystcohom
