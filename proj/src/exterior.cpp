#include "hodgealg/exterior.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace hodgealg {

SparseExterior::SparseExterior(int generators) : g_(generators) {
  if (generators < 0 || generators > 32) throw std::invalid_argument("SparseExterior: at most 32 generators");
}

SparseExterior SparseExterior::generator(int g, int i) { return monomial(g, Mask{1} << i); }

SparseExterior SparseExterior::monomial(int g, Mask m, const Rational& c) {
  SparseExterior e(g);
  e.add(m, c);
  return e;
}

int SparseExterior::wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  unsigned inv = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    Mask above = j == 31 ? 0 : (a >> (j + 1));
    inv += static_cast<unsigned>(std::popcount(above));
  }
  return inv % 2 ? -1 : 1;
}

Rational SparseExterior::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparseExterior::add(Mask m, const Rational& c) {
  if (m & ~full_mask()) throw std::out_of_range("monomial uses a missing generator");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SparseExterior& SparseExterior::operator+=(const SparseExterior& o) {
  if (o.g_ != g_) throw std::invalid_argument("SparseExterior: generator count mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SparseExterior SparseExterior::scaled(const Rational& c) const {
  SparseExterior out(g_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

SparseExterior SparseExterior::wedge(const SparseExterior& o) const {
  if (o.g_ != g_) throw std::invalid_argument("SparseExterior: generator count mismatch");
  SparseExterior out(g_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      int s = wedge_sign(a, b);
      if (s) out.add(a | b, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return out;
}

Rational SparseExterior::top_pairing(const SparseExterior& o) const {
  if (o.g_ != g_) throw std::invalid_argument("SparseExterior: generator count mismatch");
  const Mask full = full_mask();
  Rational acc(0);
  for (const auto& [a, ca] : terms_) {
    auto it = o.terms_.find(full ^ a);
    if (it == o.terms_.end()) continue;
    if (wedge_sign(a, it->first) > 0)
      acc += ca * it->second;
    else
      acc -= ca * it->second;
  }
  return acc;
}

SparseExterior SparseExterior::shifted(int offset, int g) const {
  SparseExterior out(g);
  for (const auto& [m, c] : terms_) {
    if (offset + g_ > g) throw std::out_of_range("shifted monomial does not fit");
    out.terms_.emplace(m << offset, c);
  }
  return out;
}

std::vector<SparseExterior::Mask> masks_of_weight(int g, int weight) {
  std::vector<SparseExterior::Mask> out;
  const std::uint64_t full = (std::uint64_t{1} << g) - 1;
  if (weight == 0) return {0};
  for (std::uint64_t s = (std::uint64_t{1} << weight) - 1; s <= full;) {
    out.push_back(static_cast<SparseExterior::Mask>(s));
    std::uint64_t c = s & (~s + 1), r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace hodgealg
