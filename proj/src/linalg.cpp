#include "crystcohom/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "crystcohom/errors.hpp"

namespace crystcohom {

namespace {

// Below this many entries per elimination sweep the OpenMP fork costs more
// than the sweep itself.
constexpr std::size_t kParallelThreshold = 2048;

class SmithReducer {
 public:
  SmithReducer(const MatrixZ& a, bool with_transforms, Execution exec)
      : a_(a), track_(with_transforms), exec_(exec) {
    if (track_) {
      u_ = MatrixZ::identity(a.rows());
      v_ = MatrixZ::identity(a.cols());
    }
  }

  void run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_step(t)) break;
    }
  }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d(std::min(a_.rows(), a_.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a_(i, i);
    return d;
  }

  MatrixZ& reduced() { return a_; }
  MatrixZ& left() { return u_; }
  MatrixZ& right() { return v_; }

 private:
  bool parallel_for(std::size_t work) const {
    return exec_ == Execution::parallel && work >= kParallelThreshold;
  }

  // Returns false when the remaining block is zero.
  bool reduce_step(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (;;) {
      std::size_t pi = m, pj = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const BigInt& v = a_(i, j);
          if (v == 0) continue;
          if (pi == m || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
            best = abs(v);
            pi = i;
            pj = j;
            if (best == 1) goto found;
          }
        }
    found:
      if (pi == m) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      eliminate_column(t);
      eliminate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = a_(i, t) == 0;
      for (std::size_t j = t + 1; j < n && clean; ++j) clean = a_(t, j) == 0;
      if (!clean) continue;

      const BigInt pivot = a_(t, t);
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row != m) {
        add_row(t, bad_row);
        continue;
      }
      if (pivot < 0) negate_row(t);
      return true;
    }
  }

  void eliminate_column(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t ucols = track_ ? u_.cols() : 0;
    const long first = static_cast<long>(t + 1);
    const long last = static_cast<long>(m);
#pragma omp parallel for schedule(static) if (parallel_for((m - t) * (n - t + ucols)))
    for (long ii = first; ii < last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (a_(i, t) == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = t; j < n; ++j) a_(i, j) -= q * a_(t, j);
      for (std::size_t j = 0; j < ucols; ++j) u_(i, j) -= q * u_(t, j);
    }
  }

  void eliminate_row(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t vrows = track_ ? v_.rows() : 0;
    const long first = static_cast<long>(t + 1);
    const long last = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (parallel_for((n - t) * (m - t + vrows)))
    for (long jj = first; jj < last; ++jj) {
      const auto j = static_cast<std::size_t>(jj);
      if (a_(t, j) == 0) continue;
      BigInt q;
      mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = t; i < m; ++i) a_(i, j) -= q * a_(i, t);
      for (std::size_t i = 0; i < vrows; ++i) v_(i, j) -= q * v_(i, t);
    }
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(r, j), a_(s, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(r, j), u_(s, j));
  }

  void swap_cols(std::size_t c, std::size_t d) {
    if (c == d) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, c), a_(i, d));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, c), v_(i, d));
  }

  // row_dst += row_src
  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += a_(src, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += u_(src, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  MatrixZ a_;
  MatrixZ u_;
  MatrixZ v_;
  bool track_;
  Execution exec_;
};

std::size_t count_nonzero(const std::vector<BigInt>& d) {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const BigInt& x) { return x != 0; }));
}

}  // namespace

SmithForm smith_normal_form(const MatrixZ& a, Execution exec) {
  SmithReducer reducer(a, true, exec);
  reducer.run();
  SmithForm out;
  out.diagonal = reducer.diagonal();
  out.rank = count_nonzero(out.diagonal);
  out.D = std::move(reducer.reduced());
  out.U = std::move(reducer.left());
  out.V = std::move(reducer.right());
  return out;
}

std::vector<BigInt> smith_diagonal(const MatrixZ& a, Execution exec) {
  SmithReducer reducer(a, false, exec);
  reducer.run();
  return reducer.diagonal();
}

std::size_t rank(const MatrixZ& a, Execution exec) {
  return count_nonzero(smith_diagonal(a, exec));
}

MatrixZ integer_kernel(const MatrixZ& a) {
  const SmithForm snf = smith_normal_form(a);
  MatrixZ k = snf.V.column_block(snf.rank, a.cols() - snf.rank);
  // Fix signs so that the first nonzero entry of each column is positive.
  for (std::size_t j = 0; j < k.cols(); ++j) {
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (k(i, j) == 0) continue;
      if (k(i, j) < 0)
        for (std::size_t r = 0; r < k.rows(); ++r) k(r, j) = -k(r, j);
      break;
    }
  }
  return k;
}

MatrixZ solve_exact(const MatrixZ& a, const MatrixZ& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve_exact: row count mismatch");
  const SmithForm snf = smith_normal_form(a);
  const MatrixZ c = snf.U * b;
  MatrixZ y(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < snf.rank) {
        if (!mpz_divisible_p(c(i, j).get_mpz_t(), snf.diagonal[i].get_mpz_t()))
          throw NoIntegerSolution("right-hand side is not in the integer column span");
        y(i, j) = c(i, j) / snf.diagonal[i];
      } else if (c(i, j) != 0) {
        throw NoIntegerSolution("right-hand side is not in the column span");
      }
    }
  }
  return snf.V * y;
}

AbelianGroupInvariants subquotient_invariants(const MatrixZ& a, const MatrixZ& b) {
  if (a.cols() != b.rows()) throw DimensionError("subquotient: A.cols != B.rows");
  if (!(a * b).is_zero()) throw ChainConditionError("subquotient: A * B is nonzero");
  const MatrixZ kernel = integer_kernel(a);
  const MatrixZ coords = solve_exact(kernel, b);
  const auto diag = smith_diagonal(coords);
  const std::size_t r = count_nonzero(diag);
  std::vector<BigInt> torsion;
  for (const auto& d : diag)
    if (d > 1) torsion.push_back(d);
  return {kernel.cols() - r, std::move(torsion)};
}

BigInt determinant(const MatrixZ& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  MatrixZ m = a;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_with, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  if (j > n) return out;
  std::vector<std::size_t> current(j);
  for (std::size_t i = 0; i < j; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = j;
    while (i > 0 && current[i - 1] == n - j + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t k = i; k < j; ++k) current[k] = current[k - 1] + 1;
  }
  return out;
}

MatrixZ compound_matrix(const MatrixZ& a, std::size_t degree) {
  if (!a.is_square()) throw DimensionError("compound of a non-square matrix");
  if (degree > a.rows())
    throw DimensionError("compound degree " + std::to_string(degree) + " exceeds size " +
                         std::to_string(a.rows()));
  const auto subsets = lexicographic_subsets(a.rows(), degree);
  MatrixZ out(subsets.size(), subsets.size());
  MatrixZ minor(degree, degree);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      for (std::size_t i = 0; i < degree; ++i)
        for (std::size_t j = 0; j < degree; ++j) minor(i, j) = a(subsets[r][i], subsets[c][j]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

std::vector<AbelianGroupInvariants> cohomology_from_smith_diagonals(
    const std::vector<std::vector<BigInt>>& diagonals, const std::vector<std::size_t>& dims) {
  if (dims.empty()) return {};
  if (diagonals.size() + 1 > dims.size())
    throw DimensionError("more coboundaries than cochain modules");
  std::vector<std::size_t> ranks;
  for (const auto& d : diagonals) ranks.push_back(count_nonzero(d));
  std::vector<AbelianGroupInvariants> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t out_rank = i < ranks.size() ? ranks[i] : 0;
    const std::size_t in_rank = i > 0 && i - 1 < ranks.size() ? ranks[i - 1] : 0;
    if (out_rank + in_rank > dims[i]) throw ChainConditionError("ranks exceed module dimension");
    std::vector<BigInt> torsion;
    if (i > 0 && i - 1 < diagonals.size())
      for (const auto& d : diagonals[i - 1])
        if (d > 1) torsion.push_back(d);
    out.emplace_back(dims[i] - out_rank - in_rank, std::move(torsion));
  }
  return out;
}

std::vector<AbelianGroupInvariants> cohomology_from_coboundaries(
    const std::vector<MatrixZ>& deltas, const std::vector<std::size_t>& dims, Execution exec) {
  if (deltas.size() + 1 > dims.size())
    throw DimensionError("more coboundaries than cochain modules");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i].cols() != dims[i] || deltas[i].rows() != dims[i + 1])
      throw DimensionError("coboundary " + std::to_string(i) + " has shape " +
                           std::to_string(deltas[i].rows()) + "x" +
                           std::to_string(deltas[i].cols()));
    if (i > 0 && !(deltas[i] * deltas[i - 1]).is_zero())
      throw ChainConditionError("coboundaries " + std::to_string(i - 1) + ", " +
                                std::to_string(i) + " do not compose to zero");
  }
  std::vector<std::vector<BigInt>> diagonals;
  diagonals.reserve(deltas.size());
  for (const auto& d : deltas) diagonals.push_back(smith_diagonal(d, exec));
  return cohomology_from_smith_diagonals(diagonals, dims);
}

}  // namespace crystcohom
