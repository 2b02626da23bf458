#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "acmtetra/error.hpp"
#include "acmtetra/variables.hpp"

namespace acmtetra {

// Monomial as a sparse exponent map VarId -> positive exponent, kept sorted by
// variable. The empty map is the monomial 1.
class Monomial {
 public:
  using Term = std::pair<VarId, std::uint32_t>;

  Monomial() = default;

  Monomial(std::initializer_list<Term> terms) {
    for (const auto& [v, e] : terms) multiply_var(v, e);
  }

  static Monomial power(VarId v, std::uint32_t e) {
    Monomial m;
    m.multiply_var(v, e);
    return m;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }

  std::uint32_t exponent(VarId v) const {
    auto it = find(v);
    return it != terms_.end() && it->first == v ? it->second : 0;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
  }

  void multiply_var(VarId v, std::uint32_t e) {
    if (e == 0) return;
    auto it = find(v);
    if (it != terms_.end() && it->first == v)
      it->second += e;
    else
      terms_.insert(it, {v, e});
  }

  // this | other
  bool divides(const Monomial& other) const {
    auto it = other.terms_.begin();
    for (const auto& [v, e] : terms_) {
      while (it != other.terms_.end() && it->first < v) ++it;
      if (it == other.terms_.end() || it->first != v || it->second < e) return false;
    }
    return true;
  }

  friend Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->first < i->first) {
        out.terms_.push_back(*j++);
      } else {
        out.terms_.push_back({i->first, std::max(i->second, j->second)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Monomial operator*(Monomial x, const Monomial& y) {
    for (const auto& [v, e] : y.terms_) x.multiply_var(v, e);
    return x;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term>::iterator find(VarId v) {
    return std::lower_bound(terms_.begin(), terms_.end(), v,
                            [](const Term& t, VarId key) { return t.first < key; });
  }
  std::vector<Term>::const_iterator find(VarId v) const {
    return std::lower_bound(terms_.begin(), terms_.end(), v,
                            [](const Term& t, VarId key) { return t.first < key; });
  }

  std::vector<Term> terms_;
};

// Canonical generator order: by total degree, then lexicographically on the
// word obtained by writing the variables out in ascending order with
// multiplicity (a^2*c*d < a*b*c^2 < a*b*c*d).
inline bool canonical_less(const Monomial& x, const Monomial& y) {
  auto dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  const auto& tx = x.terms();
  const auto& ty = y.terms();
  for (std::size_t k = 0; k < tx.size() && k < ty.size(); ++k) {
    if (tx[k].first != ty[k].first) return tx[k].first < ty[k].first;
    if (tx[k].second != ty[k].second) return tx[k].second > ty[k].second;
  }
  return tx.size() < ty.size();
}

inline std::string render(const Monomial& m, const Universe& u) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.terms()) {
    if (!s.empty()) s += '*';
    s += u.name(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace acmtetra
