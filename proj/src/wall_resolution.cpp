#include "crystcohom/wall_resolution.hpp"

#include <exception>
#include <mutex>

#include "crystcohom/errors.hpp"
#include "crystcohom/linalg.hpp"

namespace crystcohom {

std::string WallGenerator::name() const {
  std::string s = "e^" + std::to_string(twist);
  const std::string cube_name = cube.name();
  if (cube_name.size() > 1) s += cube_name.substr(1);
  return s;
}

WallChain::WallChain(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& entry) { return entry.second.empty(); });
}

WallChain WallChainAccumulator::finish() const {
  WallChain::Terms terms;
  for (const auto& [g, acc] : parts_) terms.emplace_hint(terms.end(), g, acc.finish());
  return WallChain(std::move(terms));
}

void WallChain::add(const WallGenerator& g, const GroupElement& e, Coeff c) {
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, GroupRingElement(e, c));
    return;
  }
  it->second.add_term(e, c);
  if (it->second.empty()) terms_.erase(it);
}

void WallChain::add(const WallGenerator& g, const GroupRingElement& rho) {
  for (const auto& [e, c] : rho.terms()) add(g, e, c);
}

const GroupRingElement& WallChain::coefficient(const WallGenerator& g) const {
  static const GroupRingElement zero;
  auto it = terms_.find(g);
  return it == terms_.end() ? zero : it->second;
}

WallChain& WallChain::operator+=(const WallChain& o) {
  for (const auto& [g, rho] : o.terms_) add(g, rho);
  return *this;
}

WallChain& WallChain::operator-=(const WallChain& o) {
  for (const auto& [g, rho] : o.terms_) add(g, -rho);
  return *this;
}

WallChain WallChain::negated() const {
  WallChain out;
  for (const auto& [g, rho] : terms_) out.terms_.emplace_hint(out.terms_.end(), g, -rho);
  return out;
}

WallChain WallChain::shifted(int delta) const {
  WallChain out;
  for (const auto& [g, rho] : terms_) {
    WallGenerator moved = g;
    moved.twist += delta;
    out.terms_.emplace_hint(out.terms_.end(), moved, rho);
  }
  return out;
}

WallChain d0(const WallGenerator& g, std::size_t n) {
  WallChain out;
  const auto idx = g.cube.indices();
  GroupElement one;
  one.rank = static_cast<std::uint8_t>(n);
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const Coeff sign = p % 2 == 0 ? 1 : -1;
    const WallGenerator face{g.twist, CubeGenerator{g.cube.mask & ~(1u << idx[p])}};
    GroupElement t = one;
    t.t[idx[p]] = 1;
    out.add(face, t, sign);
    out.add(face, one, -sign);
  }
  return out;
}

void homotopy_f(const HolonomyAction& h, const WallChain& c, WallChainAccumulator& out) {
  const std::size_t n = h.rank();
  for (const auto& [gen, rho] : c.terms()) {
    for (const auto& [g, coeff] : rho.terms()) {
      const CosetForm coset = h.coset_normal_form(g);
      homotopy_monomial(coset.s, gen.cube.mask, n,
                        [&](std::uint32_t cube, const Translation& v, Coeff sign) {
                          out.add(WallGenerator{gen.twist, CubeGenerator{cube}},
                                  h.from_coset(CosetForm{coset.a, v}), checked_mul(coeff, sign));
                        });
    }
  }
}

WallChain homotopy_f(const HolonomyAction& h, const WallChain& c) {
  WallChainAccumulator out;
  homotopy_f(h, c, out);
  return out.finish();
}

WallChain lift_cyclic(const HolonomyAction& h, const GroupRingElement& zg, int twist) {
  WallChain out;
  for (const auto& [g, c] : zg.terms()) {
    GroupElement x = h.identity();
    x.a = g.a;
    out.add(WallGenerator{twist, CubeGenerator{}}, x, c);
  }
  return out;
}

GroupRingElement augment_to_cyclic(const HolonomyAction& h, const WallChain& c) {
  GroupRingElement out;
  for (const auto& [gen, rho] : c.terms()) {
    if (gen.cube.mask != 0) continue;
    for (const auto& [g, coeff] : rho.terms()) {
      GroupElement x = h.identity();
      x.a = g.a;
      out.add_term(x, coeff);
    }
  }
  return out;
}

GroupRingElement cyclic_boundary(const HolonomyAction& h, int s) {
  GroupRingElement out;
  GroupElement x = h.identity();
  if (s % 2 == 1) {
    x.a = h.order() > 1 ? 1 : 0;
    out.add_term(x, 1);
    out.add_term(h.identity(), -1);
  } else {
    for (int a = 0; a < h.order(); ++a) {
      x.a = a;
      out.add_term(x, 1);
    }
  }
  return out;
}

WallResolution::WallResolution(HolonomyAction action, std::size_t max_total_degree,
                               Execution exec)
    : action_(std::move(action)), n_(action_.rank()), max_degree_(max_total_degree) {
  if (max_degree_ < 1) throw DimensionError("resolution window must reach total degree 1");
  build(exec);
}

const WallChain* WallResolution::lookup(std::size_t k, const WallGenerator& g, int& shift) const {
  const std::size_t r = g.r();
  if (k == 0) {
    if (r == 0) return nullptr;
    shift = g.twist;
    return &*memo_[0][g.cube.mask][0];
  }
  if (g.twist < static_cast<int>(k) || r + k - 1 > n_) return nullptr;
  const int canonical = static_cast<int>(k) + (g.twist - static_cast<int>(k)) % 2;
  const auto& slot = memo_[k][g.cube.mask][static_cast<std::size_t>(canonical) - k];
  if (!slot) throw DimensionError("d_" + std::to_string(k) + " on " + g.name() +
                                  " lies outside the constructed window");
  shift = g.twist - canonical;
  return &*slot;
}

void WallResolution::accumulate_apply(std::size_t k, const WallChain& c,
                                      WallChainAccumulator& out) const {
  for (const auto& [gen, rho] : c.terms()) {
    int shift = 0;
    const WallChain* image = lookup(k, gen, shift);
    if (!image) continue;
    for (const auto& [target, sigma] : image->terms()) {
      WallGenerator moved = target;
      moved.twist += shift;
      for (const auto& [g1, c1] : rho.terms())
        for (const auto& [g2, c2] : sigma.terms())
          out.add(moved, action_.multiply(g1, g2), checked_mul(c1, c2));
    }
  }
}

WallChain WallResolution::apply(std::size_t k, const WallChain& c) const {
  WallChainAccumulator out;
  accumulate_apply(k, c, out);
  return out.finish();
}

WallChain WallResolution::apply_total(const WallChain& c) const {
  WallChainAccumulator out;
  for (std::size_t k = 0; k <= n_ + 1; ++k) accumulate_apply(k, c, out);
  return out.finish();
}

WallChain WallResolution::dk(std::size_t k, const WallGenerator& g) const {
  if (g.total_degree() > max_degree_)
    throw DimensionError(g.name() + " lies outside the constructed window");
  int shift = 0;
  const WallChain* image = lookup(k, g, shift);
  if (!image) return {};
  return shift == 0 ? *image : image->shifted(shift);
}

WallChain WallResolution::differential(const WallGenerator& g) const {
  WallChain out;
  for (std::size_t k = 0; k <= n_ + 1; ++k) out += dk(k, g);
  return out;
}

WallChain WallResolution::compute(std::size_t k, const WallGenerator& g) const {
  if (k == 1 && g.r() == 0)
    return lift_cyclic(action_, cyclic_boundary(action_, g.twist), g.twist - 1);
  // sum_{i=1}^{k} d_i d_{k-i}, then -f.
  WallChainAccumulator sum;
  for (std::size_t i = 1; i <= k; ++i) {
    int shift = 0;
    const WallChain* inner = lookup(k - i, g, shift);
    if (!inner) continue;
    if (shift == 0) {
      accumulate_apply(i, *inner, sum);
    } else {
      accumulate_apply(i, inner->shifted(shift), sum);
    }
  }
  return homotopy_f(action_, sum.finish()).negated();
}

void WallResolution::build(Execution exec) {
  const std::size_t masks = std::size_t{1} << n_;
  memo_.assign(n_ + 2, std::vector<std::array<std::optional<WallChain>, 2>>(masks));
  for (std::uint32_t mask = 0; mask < masks; ++mask)
    memo_[0][mask][0] = d0(WallGenerator{0, CubeGenerator{mask}}, n_);

  std::vector<std::vector<std::uint32_t>> by_degree(n_ + 1);
  for (std::size_t r = 0; r <= n_; ++r)
    for (const auto& subset : lexicographic_subsets(n_, r)) {
      std::uint32_t mask = 0;
      for (std::size_t i : subset) mask |= 1u << i;
      by_degree[r].push_back(mask);
    }

  for (std::size_t s = 1; s <= max_degree_; ++s) {
    for (std::size_t k = 1; k <= std::min(s, n_ + 1); ++k) {
      if (s > k + 2) continue;
      for (std::size_t r = 0; r <= n_ && r + s <= max_degree_; ++r) {
        if (r + k - 1 > n_) continue;
        const auto& layer = by_degree[r];
        std::vector<WallChain> results(layer.size());
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const long count = static_cast<long>(layer.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel && count > 1)
        for (long idx = 0; idx < count; ++idx) {
          try {
            results[static_cast<std::size_t>(idx)] =
                compute(k, WallGenerator{static_cast<int>(s), CubeGenerator{layer[static_cast<std::size_t>(idx)]}});
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
        if (failure) std::rethrow_exception(failure);

        for (std::size_t idx = 0; idx < layer.size(); ++idx) {
          if (s <= k + 1) {
            memo_[k][layer[idx]][s - k] = std::move(results[idx]);
            continue;
          }
          const WallGenerator g{static_cast<int>(s), CubeGenerator{layer[idx]}};
          if (!(results[idx] == memo_[k][layer[idx]][0]->shifted(2)))
            throw ConsistencyError("d_" + std::to_string(k) + " on " + g.name() +
                                   " is not 2-periodic in the twist degree");
          ++rechecked_;
        }
      }
    }
  }
}

std::vector<WallGenerator> WallResolution::generators(std::size_t total_degree) const {
  std::vector<WallGenerator> out;
  for (std::size_t r = 0; r <= std::min(n_, total_degree); ++r) {
    for (const auto& subset : lexicographic_subsets(n_, r)) {
      std::uint32_t mask = 0;
      for (std::size_t i : subset) mask |= 1u << i;
      out.push_back(WallGenerator{static_cast<int>(total_degree - r), CubeGenerator{mask}});
    }
  }
  return out;
}

}  // namespace crystcohom
