#pragma once

// Hand-rolled random inputs for the property tests.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crystcohom/group.hpp"
#include "crystcohom/lattice_resolution.hpp"
#include "crystcohom/matrix.hpp"

namespace testgen {

using crystcohom::MatrixZ;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

inline MatrixZ random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  MatrixZ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

/// rows x cols matrix of rank at most `rank`, as a product of two random factors.
inline MatrixZ random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank,
                               long bound) {
  return random_matrix(rng, rows, rank, bound) * random_matrix(rng, rank, cols, bound);
}

/// A random product of elementary matrices, together with its inverse.
inline std::pair<MatrixZ, MatrixZ> random_unimodular(Rng& rng, std::size_t n, int steps) {
  MatrixZ u = MatrixZ::identity(n);
  MatrixZ inv = MatrixZ::identity(n);
  for (int step = 0; step < steps; ++step) {
    MatrixZ e = MatrixZ::identity(n);
    MatrixZ e_inv = MatrixZ::identity(n);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i != j && rng.coin(0.8)) {
      const long c = rng.coin() ? 1 : -1;
      e(i, j) = c;
      e_inv(i, j) = -c;
    } else if (i != j) {
      e(i, i) = 0;
      e(j, j) = 0;
      e(i, j) = 1;
      e(j, i) = 1;
      e_inv = e;
    } else {
      e(i, i) = -1;
      e_inv(i, i) = -1;
    }
    u = u * e;
    inv = e_inv * inv;
  }
  return {u, inv};
}

/// Block-diagonal matrix assembled from square blocks.
inline MatrixZ block_diagonal(const std::vector<MatrixZ>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatrixZ out(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return out;
}

/// An integral matrix of exact order q in {2, 3, 5} (n >= 2 for q = 3, n == 4 for q = 5),
/// built from rational canonical blocks and conjugated by a small random
/// unimodular matrix.
inline MatrixZ random_prime_order_matrix(Rng& rng, std::size_t n, int q) {
  std::vector<MatrixZ> nontrivial;
  if (q == 2) nontrivial = {MatrixZ{{-1}}, MatrixZ{{0, 1}, {1, 0}}};
  if (q == 3) nontrivial = {MatrixZ{{0, -1}, {1, -1}}, MatrixZ{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  if (q == 5) nontrivial = {MatrixZ{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}};
  std::vector<MatrixZ> blocks;
  std::size_t used = 0;
  bool faithful = false;
  while (used < n) {
    std::vector<MatrixZ> fitting;
    for (const auto& b : nontrivial)
      if (used + b.rows() <= n) fitting.push_back(b);
    if (!fitting.empty() && (!faithful || rng.coin(0.6))) {
      blocks.push_back(rng.pick(fitting));
      faithful = true;
    } else if (faithful) {
      blocks.push_back(MatrixZ{{1}});
    } else {
      throw std::invalid_argument("no block of order q fits in rank n");
    }
    used += blocks.back().rows();
  }
  const auto [u, u_inv] = random_unimodular(rng, n, static_cast<int>(rng.uniform(1, 3)));
  return u * block_diagonal(blocks) * u_inv;
}

inline crystcohom::GroupElement random_element(Rng& rng, const crystcohom::HolonomyAction& h,
                                               long bound) {
  std::vector<std::int64_t> t(h.rank());
  for (auto& v : t) v = rng.uniform(-bound, bound);
  return h.element(t, rng.uniform(0, h.order() - 1));
}

inline crystcohom::GroupRingElement random_ring_element(Rng& rng, const crystcohom::HolonomyAction& h,
                                                        int terms, long bound) {
  crystcohom::GroupRingElement out;
  for (int i = 0; i < terms; ++i) out.add_term(random_element(rng, h, bound), rng.uniform(-3, 3));
  return out;
}

inline crystcohom::GroupElement random_monomial(Rng& rng, std::size_t n, long bound) {
  crystcohom::GroupElement g;
  g.rank = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) g.t[i] = static_cast<std::int32_t>(rng.uniform(-bound, bound));
  return g;
}

inline crystcohom::CubeGenerator random_cube(Rng& rng, std::size_t n, std::size_t degree) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  crystcohom::CubeGenerator g;
  for (std::size_t picked = 0; picked < degree; ++picked) {
    const auto at = static_cast<std::size_t>(rng.uniform(static_cast<long>(picked), static_cast<long>(n) - 1));
    std::swap(all[picked], all[at]);
    g.mask |= 1u << all[picked];
  }
  return g;
}

/// Random element of B_degree (degree -1 is a bare integer).
inline crystcohom::LatticeChain random_lattice_chain(Rng& rng, std::size_t n, int degree, int terms,
                                                     long bound) {
  crystcohom::LatticeChain c;
  c.degree = degree;
  if (degree < 0) {
    c.scalar = rng.uniform(-5, 5);
    return c;
  }
  for (int i = 0; i < terms; ++i)
    c.add(random_cube(rng, n, static_cast<std::size_t>(degree)), random_monomial(rng, n, bound),
          rng.uniform(-3, 3));
  return c;
}

}  // namespace testgen
