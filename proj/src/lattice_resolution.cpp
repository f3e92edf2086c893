#include "crystcohom/lattice_resolution.hpp"

#include "crystcohom/errors.hpp"

namespace crystcohom {

CubeGenerator CubeGenerator::from_indices(std::initializer_list<std::size_t> zero_based) {
  CubeGenerator g;
  for (std::size_t i : zero_based) {
    if (i >= kMaxLatticeRank) throw DimensionError("cube index out of range");
    g.mask |= 1u << i;
  }
  return g;
}

std::vector<std::size_t> CubeGenerator::indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::string CubeGenerator::name() const {
  std::string s = "e";
  if (mask == 0) return s;
  s += '_';
  for (std::size_t i : indices()) s += std::to_string(i + 1);
  return s;
}

void LatticeChain::add(CubeGenerator g, const GroupElement& monomial, Coeff c) {
  if (c == 0) return;
  auto& slot = terms[g];
  slot.add_term(monomial, c);
  if (slot.empty()) terms.erase(g);
}

LatticeChain& LatticeChain::operator+=(const LatticeChain& o) {
  if (o.degree != degree) throw DimensionError("adding lattice chains of different degree");
  scalar = checked_add(scalar, o.scalar);
  for (const auto& [g, rho] : o.terms)
    for (const auto& [m, c] : rho.terms()) add(g, m, c);
  return *this;
}

GroupElement lattice_monomial(std::size_t n, std::initializer_list<std::int32_t> exponents) {
  if (exponents.size() != n) throw DimensionError("monomial exponent count != rank");
  GroupElement g;
  g.rank = static_cast<std::uint8_t>(n);
  std::size_t i = 0;
  for (auto e : exponents) g.t[i++] = e;
  return g;
}

namespace {

void require_lattice(const GroupElement& g, std::size_t n) {
  if (g.a != 0 || g.rank != n)
    throw MismatchedGroup("lattice chains need pure-translation coefficients of rank n");
}

GroupElement monomial_of(const Translation& t, std::size_t n) {
  GroupElement g;
  g.rank = static_cast<std::uint8_t>(n);
  g.t = t;
  return g;
}

}  // namespace

LatticeChain cube_boundary(const LatticeChain& c, std::size_t n) {
  LatticeChain out;
  out.degree = c.degree - 1;
  if (c.degree <= -1) return out;
  for (const auto& [gen, rho] : c.terms) {
    if (static_cast<int>(gen.degree()) != c.degree)
      throw DimensionError("chain generator degree mismatch");
    if (c.degree == 0) {
      out.scalar = checked_add(out.scalar, rho.augmentation());
      continue;
    }
    const auto idx = gen.indices();
    for (const auto& [mono, coeff] : rho.terms()) {
      require_lattice(mono, n);
      for (std::size_t p = 0; p < idx.size(); ++p) {
        const Coeff sign = (p % 2 == 0) ? coeff : checked_mul(coeff, -1);
        const CubeGenerator face{gen.mask & ~(1u << idx[p])};
        GroupElement shifted = mono;
        shifted.t[idx[p]] += 1;
        out.add(face, shifted, sign);
        out.add(face, mono, checked_mul(sign, -1));
      }
    }
  }
  return out;
}

LatticeChain c_symbol(long j, std::size_t k, CubeGenerator s, std::size_t n) {
  if (k >= n) throw DimensionError("c_symbol coordinate out of range");
  LatticeChain out;
  out.degree = static_cast<int>(s.degree());
  GroupElement m;
  m.rank = static_cast<std::uint8_t>(n);
  if (j > 0) {
    for (long i = 0; i < j; ++i) {
      m.t[k] = static_cast<std::int32_t>(i);
      out.add(s, m, 1);
    }
  } else {
    for (long i = 1; i <= -j; ++i) {
      m.t[k] = static_cast<std::int32_t>(-i);
      out.add(s, m, -1);
    }
  }
  return out;
}

LatticeChain contracting_homotopy(const LatticeChain& c, std::size_t n) {
  LatticeChain out;
  out.degree = c.degree + 1;
  if (c.degree < -1 || c.degree >= static_cast<int>(n)) return out;
  if (c.degree == -1) {
    out.add(CubeGenerator{}, monomial_of(Translation{}, n), c.scalar);
    return out;
  }
  for (const auto& [gen, rho] : c.terms) {
    for (const auto& [mono, coeff] : rho.terms()) {
      require_lattice(mono, n);
      homotopy_monomial(mono.t, gen.mask, n,
                        [&](std::uint32_t cube, const Translation& v, Coeff sign) {
                          out.add(CubeGenerator{cube}, monomial_of(v, n), checked_mul(coeff, sign));
                        });
    }
  }
  return out;
}

}  // namespace crystcohom
