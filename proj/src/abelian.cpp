#include "crystcohom/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "crystcohom/errors.hpp"

namespace crystcohom {

AbelianGroupInvariants::AbelianGroupInvariants(std::size_t free_rank,
                                               std::vector<BigInt> invariant_factors)
    : free_rank_(free_rank), torsion_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error("invariant factor below 2: " + torsion_[i].get_str());
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error("invariant factors do not form a divisibility chain");
  }
}

std::map<BigInt, unsigned> factorize(BigInt value) {
  std::map<BigInt, unsigned> out;
  if (value < 0) value = -value;
  if (value < 2) return out;
  for (BigInt p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      ++out[p];
      value /= p;
    }
  }
  if (value > 1) ++out[value];
  return out;
}

namespace {

BigInt prime_power(const BigInt& p, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

// Rebuild invariant factors from prime -> exponent lists.
std::vector<BigInt> invariant_factors_from_primary(
    std::map<BigInt, std::vector<unsigned>> parts) {
  std::size_t length = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  // Largest factor collects the largest power of every prime.
  std::vector<BigInt> descending(length, BigInt(1));
  for (const auto& [p, exps] : parts)
    for (std::size_t i = 0; i < exps.size(); ++i) descending[i] *= prime_power(p, exps[i]);
  std::reverse(descending.begin(), descending.end());
  return descending;
}

}  // namespace

AbelianGroupInvariants AbelianGroupInvariants::from_cyclic_orders(
    std::size_t free_rank, const std::vector<BigInt>& orders) {
  std::map<BigInt, std::vector<unsigned>> parts;
  for (const auto& raw : orders) {
    BigInt d = abs(raw);
    if (d == 0) {
      ++free_rank;
      continue;
    }
    for (const auto& [p, e] : factorize(d)) parts[p].push_back(e);
  }
  return {free_rank, invariant_factors_from_primary(std::move(parts))};
}

AbelianGroupInvariants AbelianGroupInvariants::cyclic(long order) {
  return from_cyclic_orders(0, {BigInt(order)});
}

BigInt AbelianGroupInvariants::torsion_order() const {
  BigInt r = 1;
  for (const auto& d : torsion_) r *= d;
  return r;
}

std::map<BigInt, std::vector<unsigned>> AbelianGroupInvariants::primary_parts() const {
  std::map<BigInt, std::vector<unsigned>> parts;
  for (const auto& d : torsion_)
    for (const auto& [p, e] : factorize(d)) parts[p].push_back(e);
  for (auto& [p, exps] : parts) std::sort(exps.begin(), exps.end(), std::greater<>());
  return parts;
}

AbelianGroupInvariants AbelianGroupInvariants::direct_sum(
    const AbelianGroupInvariants& other) const {
  auto parts = primary_parts();
  for (const auto& [p, exps] : other.primary_parts())
    parts[p].insert(parts[p].end(), exps.begin(), exps.end());
  return {free_rank_ + other.free_rank_, invariant_factors_from_primary(std::move(parts))};
}

namespace {

void append_summand(std::vector<std::string>& out, const std::string& base,
                    std::size_t multiplicity) {
  if (multiplicity == 0) return;
  out.push_back(multiplicity == 1 ? base : base + "^" + std::to_string(multiplicity));
}

}  // namespace

std::string AbelianGroupInvariants::render(Notation notation) const {
  std::vector<std::string> summands;
  append_summand(summands, "Z", free_rank_);
  if (notation == Notation::invariant_factors) {
    for (auto it = torsion_.rbegin(); it != torsion_.rend();) {
      auto run_end = std::find_if(it, torsion_.rend(), [&](const BigInt& d) { return d != *it; });
      append_summand(summands, "Z_" + it->get_str(),
                     static_cast<std::size_t>(std::distance(it, run_end)));
      it = run_end;
    }
  } else {
    for (const auto& [p, exps] : primary_parts()) {
      for (std::size_t i = 0; i < exps.size();) {
        std::size_t j = i;
        while (j < exps.size() && exps[j] == exps[i]) ++j;
        append_summand(summands, "Z_" + prime_power(p, exps[i]).get_str(), j - i);
        i = j;
      }
    }
  }
  if (summands.empty()) return "0";
  std::string out = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) out += " + " + summands[i];
  return out;
}

AbelianGroupInvariants parse_group_notation(const std::string& raw) {
  std::string text;
  // Accept "⊕" (UTF-8 E2 8A 95) as a separator.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 3, "\xE2\x8A\x95") == 0) {
      text += '+';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
      text += raw[i];
    }
  }
  if (text.empty()) throw ParseError("empty group notation");
  if (text == "0") return {};
  std::size_t free_rank = 0;
  std::vector<BigInt> orders;
  std::stringstream ss(text);
  std::string token;
  auto number = [&](const std::string& s) -> unsigned long {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw ParseError("bad number in group notation: '" + raw + "'");
    return std::stoul(s);
  };
  while (std::getline(ss, token, '+')) {
    if (token.empty() || token[0] != 'Z') throw ParseError("bad summand in '" + raw + "'");
    std::string rest = token.substr(1);
    unsigned long mult = 1;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      mult = number(rest.substr(caret + 1));
      rest = rest.substr(0, caret);
    }
    if (rest.empty()) {
      free_rank += mult;
    } else {
      if (rest[0] != '_') throw ParseError("bad summand in '" + raw + "'");
      BigInt d(static_cast<unsigned long>(number(rest.substr(1))));
      for (unsigned long i = 0; i < mult; ++i) orders.push_back(d);
    }
  }
  return AbelianGroupInvariants::from_cyclic_orders(free_rank, orders);
}

}  // namespace crystcohom
