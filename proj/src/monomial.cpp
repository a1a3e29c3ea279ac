#include "bicm/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace bicm {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  const std::uint32_t da = a.partial_degree(begin, end);
  const std::uint32_t db = b.partial_degree(begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i > begin; --i) {
    const std::uint32_t ea = a[i - 1];
    const std::uint32_t eb = b[i - 1];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

std::uint32_t Monomial::partial_degree(std::size_t begin, std::size_t end) const noexcept {
  std::uint32_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e != 0; }));
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::drop_front(std::size_t count) const {
  return Monomial(std::vector<std::uint32_t>(exps_.begin() + static_cast<std::ptrdiff_t>(count),
                                             exps_.end()));
}

Monomial Monomial::extend_front(std::size_t count) const {
  std::vector<std::uint32_t> e(count, 0);
  e.insert(e.end(), exps_.begin(), exps_.end());
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint32_t e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string MonomialOrder::tag() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::BlockEliminate: return "block-eliminate(" + std::to_string(auxiliary_) + ")";
  }
  return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::BlockEliminate: {
      const std::size_t k = std::min(auxiliary_, a.size());
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

}  // namespace bicm
