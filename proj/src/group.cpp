#include "crystcohom/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "crystcohom/errors.hpp"
#include "crystcohom/linalg.hpp"

namespace crystcohom {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("group-ring coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("group-ring coefficient overflow");
  return r;
}

namespace {

std::int32_t narrow(std::int64_t v) {
  if (v < std::numeric_limits<std::int32_t>::min() ||
      v > std::numeric_limits<std::int32_t>::max())
    throw OverflowError("translation component exceeds 32 bits");
  return static_cast<std::int32_t>(v);
}

std::int32_t add32(std::int32_t a, std::int32_t b) {
  return narrow(static_cast<std::int64_t>(a) + b);
}

int mod(long a, int q) {
  long r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

std::vector<std::int64_t> multiply_small(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b, std::size_t n) {
  std::vector<std::int64_t> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i * n + j] = checked_add(c[i * n + j], checked_mul(aik, b[k * n + j]));
    }
  return c;
}

std::vector<std::int64_t> flatten(const MatrixZ& m) {
  std::vector<std::int64_t> out;
  for (const auto& row : m.to_int64_rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool is_identity(const std::vector<std::int64_t>& a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i * n + j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

std::optional<unsigned> find_order(const MatrixZ& m, unsigned long bound) {
  if (!m.is_square()) throw DimensionError("order of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::int64_t> base;
  try {
    base = flatten(m);
  } catch (const OverflowError&) {
    return std::nullopt;
  }
  std::vector<std::int64_t> p = base;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (is_identity(p, n)) return static_cast<unsigned>(k);
    try {
      p = multiply_small(p, base, n);
    } catch (const OverflowError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

HolonomyAction::HolonomyAction(const MatrixZ& m, int q, bool require_faithful) {
  if (!m.is_square() || m.rows() == 0)
    throw ValidationError("holonomy matrix must be square and non-empty");
  if (m.rows() > kMaxLatticeRank)
    throw ValidationError("lattice rank " + std::to_string(m.rows()) + " exceeds the supported " +
                          std::to_string(kMaxLatticeRank));
  if (q < 1) throw ValidationError("holonomy order must be positive");
  n_ = m.rows();
  q_ = q;
  m_ = m;
  const BigInt det = determinant(m);
  if (abs(det) != 1)
    throw ValidationError("holonomy matrix has determinant " + det.get_str() +
                          ", not invertible over Z");

  std::vector<std::int64_t> pt;
  try {
    pt = flatten(m.transpose());
  } catch (const OverflowError&) {
    throw ValidationError("holonomy matrix entries exceed 64 bits");
  }
  transpose_powers_.reserve(static_cast<std::size_t>(q));
  std::vector<std::int64_t> current(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) current[i * n_ + i] = 1;
  std::vector<std::int64_t> full;
  try {
    for (int a = 0; a < q; ++a) {
      transpose_powers_.push_back(current);
      current = multiply_small(current, pt, n_);
    }
    full = current;
  } catch (const OverflowError&) {
    full.clear();
  }
  if (full.empty() || !is_identity(full, n_)) {
    std::string detail;
    unsigned long bound = 1;
    for (std::size_t i = 0; i < n_ && bound < 1000000; ++i) bound *= 6;
    if (auto true_order = find_order(m, bound))
      detail = " (its order is " + std::to_string(*true_order) + ")";
    else
      detail = " (it has infinite order)";
    throw ValidationError("M^" + std::to_string(q) + " != I" + detail);
  }

  faithful_ = true;
  for (int a = 1; a < q; ++a)
    if (is_identity(transpose_powers_[static_cast<std::size_t>(a)], n_)) {
      faithful_ = false;
      if (require_faithful)
        throw ValidationError("declared order " + std::to_string(q) +
                              " is not exact: M^" + std::to_string(a) + " = I");
      break;
    }
}

HolonomyAction HolonomyAction::crystallographic(const MatrixZ& m, int q) {
  return HolonomyAction(m, q, true);
}

HolonomyAction HolonomyAction::semidirect(const MatrixZ& m, int q) {
  return HolonomyAction(m, q, false);
}

GroupElement HolonomyAction::identity() const {
  GroupElement g;
  g.rank = static_cast<std::uint8_t>(n_);
  return g;
}

GroupElement HolonomyAction::generator() const {
  GroupElement g = identity();
  g.a = q_ > 1 ? 1 : 0;
  return g;
}

GroupElement HolonomyAction::translation(std::size_t k) const {
  if (k >= n_) throw MismatchedGroup("translation index out of range");
  GroupElement g = identity();
  g.t[k] = 1;
  return g;
}

GroupElement HolonomyAction::element(std::span<const std::int64_t> t, long a) const {
  if (t.size() != n_) throw MismatchedGroup("translation has wrong length");
  GroupElement g = identity();
  for (std::size_t i = 0; i < n_; ++i) g.t[i] = narrow(t[i]);
  g.a = mod(a, q_);
  return g;
}

GroupElement HolonomyAction::from_coset(long a, std::span<const std::int64_t> s) const {
  if (s.size() != n_) throw MismatchedGroup("translation has wrong length");
  CosetForm c;
  c.a = mod(a, q_);
  for (std::size_t i = 0; i < n_; ++i) c.s[i] = narrow(s[i]);
  return from_coset(c);
}

GroupElement HolonomyAction::from_coset(const CosetForm& c) const {
  GroupElement g = identity();
  g.a = mod(c.a, q_);
  g.t = conjugate(g.a, c.s);
  return g;
}

void HolonomyAction::check(const GroupElement& g) const {
  if (g.rank != n_ || g.a < 0 || g.a >= q_)
    throw MismatchedGroup("group element does not belong to this group");
}

Translation HolonomyAction::apply(const std::vector<std::int64_t>& mat,
                                  const Translation& t) const {
  Translation out{};
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (t[j] == 0) continue;
      acc = checked_add(acc, checked_mul(mat[i * n_ + j], t[j]));
    }
    out[i] = narrow(acc);
  }
  return out;
}

Translation HolonomyAction::conjugate(int a, const Translation& t) const {
  const int inverse = mod(-static_cast<long>(a), q_);
  return apply(transpose_powers_[static_cast<std::size_t>(inverse)], t);
}

Translation HolonomyAction::unconjugate(int a, const Translation& t) const {
  return apply(transpose_powers_[static_cast<std::size_t>(mod(a, q_))], t);
}

GroupElement HolonomyAction::multiply(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out = identity();
  const Translation moved = h.a == 0 && g.a == 0 ? h.t : conjugate(g.a, h.t);
  for (std::size_t i = 0; i < n_; ++i) out.t[i] = add32(g.t[i], moved[i]);
  out.a = (g.a + h.a) % q_;
  return out;
}

GroupElement HolonomyAction::invert(const GroupElement& g) const {
  check(g);
  GroupElement out = identity();
  const Translation back = unconjugate(g.a, g.t);
  for (std::size_t i = 0; i < n_; ++i) out.t[i] = narrow(-static_cast<std::int64_t>(back[i]));
  out.a = mod(-static_cast<long>(g.a), q_);
  return out;
}

CosetForm HolonomyAction::coset_normal_form(const GroupElement& g) const {
  check(g);
  return {g.a, unconjugate(g.a, g.t)};
}

void GroupRingElement::add_term(const GroupElement& g, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::from_terms(std::vector<std::pair<GroupElement, Coeff>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  GroupRingElement out;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c = checked_add(c, terms[j].second);
    if (c != 0) out.terms_.emplace_hint(out.terms_.end(), terms[i].first, c);
    i = j;
  }
  return out;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.a);
  for (std::size_t i = 0; i < g.rank; ++i) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(g.t[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void GroupRingAccumulator::add_term(const GroupElement& g, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) it->second = checked_add(it->second, c);
}

GroupRingElement GroupRingAccumulator::finish() const {
  std::vector<std::pair<GroupElement, Coeff>> terms;
  terms.reserve(terms_.size());
  for (const auto& [g, c] : terms_)
    if (c != 0) terms.emplace_back(g, c);
  return GroupRingElement::from_terms(std::move(terms));
}

Coeff GroupRingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, checked_mul(c, -1));
  return *this;
}

GroupRingElement GroupRingElement::operator-() const { return scaled(-1); }

GroupRingElement GroupRingElement::scaled(Coeff c) const {
  GroupRingElement out;
  if (c == 0) return out;
  for (const auto& [g, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), g, checked_mul(v, c));
  return out;
}

Coeff GroupRingElement::augmentation() const {
  Coeff s = 0;
  for (const auto& [g, c] : terms_) s = checked_add(s, c);
  return s;
}

GroupRingElement ring_multiply(const HolonomyAction& h, const GroupRingElement& rho,
                               const GroupRingElement& sigma) {
  GroupRingElement out;
  for (const auto& [g, c] : rho.terms()) accumulate_left_product(h, c, g, sigma, out);
  return out;
}

GroupRingElement left_multiply(const HolonomyAction& h, const GroupElement& g,
                               const GroupRingElement& rho) {
  GroupRingElement out;
  accumulate_left_product(h, 1, g, rho, out);
  return out;
}

void accumulate_left_product(const HolonomyAction& h, Coeff c, const GroupElement& g,
                             const GroupRingElement& rho, GroupRingElement& out) {
  for (const auto& [k, v] : rho.terms()) out.add_term(h.multiply(g, k), checked_mul(c, v));
}

std::string format_element(const HolonomyAction& h, const GroupElement& g) {
  const CosetForm c = h.coset_normal_form(g);
  std::ostringstream os;
  bool any = false;
  if (c.a != 0) {
    os << 'x';
    if (c.a != 1) os << '^' << c.a;
    any = true;
  }
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (c.s[i] == 0) continue;
    if (any) os << ' ';
    os << 't' << (i + 1);
    if (c.s[i] != 1) os << '^' << c.s[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string format_ring_element(const HolonomyAction& h, const GroupRingElement& rho) {
  if (rho.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : rho.terms()) {
    const std::string body = format_element(h, g);
    const Coeff mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1)
      os << mag << (body == "1" ? "" : " " + body);
    else
      os << body;
    first = false;
  }
  return os.str();
}

}  // namespace crystcohom
