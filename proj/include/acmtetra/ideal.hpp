#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acmtetra/error.hpp"
#include "acmtetra/monomial.hpp"
#include "acmtetra/variables.hpp"

namespace acmtetra {

// Largest exponent accepted from user input. Degrees of intersections grow
// with the sum of exponents, so larger values are outside the supported range.
inline constexpr std::uint32_t kMaxInputExponent = 64;

// Drops every monomial divisible by another one. Output is sorted in canonical
// order and pairwise non-dividing.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    // Any divisor of g has degree <= deg g, so it is already in `kept`.
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Universe universe, std::vector<Monomial> gens)
      : universe_(std::move(universe)), gens_(minimalize(std::move(gens))) {
    for (const auto& g : gens_)
      for (const auto& [v, e] : g.terms())
        if (!universe_.contains(v))
          throw Error(ErrorKind::invalid_argument, "generator uses a variable outside the universe");
  }

  static MonomialIdeal unit(Universe u) { return MonomialIdeal(std::move(u), {Monomial{}}); }
  static MonomialIdeal zero(Universe u) { return MonomialIdeal(std::move(u), {}); }

  const Universe& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Universe universe_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal intersect(const MonomialIdeal& x, const MonomialIdeal& y) {
  if (!(x.universe() == y.universe()))
    throw Error(ErrorKind::invalid_argument, "intersect: ideals live over different universes");
  std::vector<Monomial> lcms;
  lcms.reserve(x.generators().size() * y.generators().size());
  for (const auto& f : x.generators())
    for (const auto& g : y.generators()) lcms.push_back(lcm(f, g));
  return MonomialIdeal(x.universe(), std::move(lcms));
}

// (u, v)^p. The zeroth power is the unit ideal.
inline MonomialIdeal pair_prime_power(const Universe& universe, VarId u, VarId v, std::uint32_t p) {
  if (u == v) throw Error(ErrorKind::invalid_prime, "pair prime needs two distinct variables");
  std::vector<Monomial> gens;
  gens.reserve(p + 1);
  for (std::uint32_t t = 0; t <= p; ++t) {
    Monomial m = Monomial::power(u, t);
    m.multiply_var(v, p - t);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(universe, std::move(gens));
}

// Exponents (p1..p6) of a tetrahedral curve, attached to the six edges
// ab, ac, ad, bc, bd, cd. Opposite edges: (p1,p6), (p2,p5), (p3,p4).
struct ExponentVector {
  std::array<std::uint32_t, 6> p{};

  std::uint32_t operator[](std::size_t k) const { return p[k]; }
  std::uint32_t& operator[](std::size_t k) { return p[k]; }

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

// Base-variable pair (s, t) carrying exponent p_{k+1}.
inline constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 6> kTetraEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline std::string render(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < 6; ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + ")";
}

// Symmetric n x n matrix of pair exponents with zero diagonal.
class PairExponents {
 public:
  PairExponents() = default;
  explicit PairExponents(std::size_t n) : n_(n), p_(n * n, 0) {}

  // Validates symmetry, zero diagonal and the input exponent bound.
  static PairExponents from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t n = rows.size();
    PairExponents out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorKind::invalid_argument, "pair matrix is not square");
      for (std::size_t j = 0; j < n; ++j) {
        long long x = rows[i][j];
        if (x < 0) throw Error(ErrorKind::invalid_argument, "negative pair exponent");
        if (x > kMaxInputExponent) throw Error(ErrorKind::invalid_argument, "pair exponent exceeds 64");
        if (i == j && x != 0) throw Error(ErrorKind::invalid_argument, "nonzero diagonal entry");
        if (rows[j].size() == n && rows[j][i] != x)
          throw Error(ErrorKind::invalid_argument, "pair matrix is not symmetric");
        out.p_[i * n + j] = static_cast<std::uint32_t>(x);
      }
    }
    return out;
  }

  static PairExponents from_vector(const ExponentVector& v) {
    PairExponents out(4);
    for (std::size_t k = 0; k < 6; ++k) out.set(kTetraEdges[k].first, kTetraEdges[k].second, v[k]);
    return out;
  }

  std::size_t n() const { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, std::uint32_t value) {
    if (i == j) throw Error(ErrorKind::invalid_argument, "diagonal pair exponent");
    p_[i * n_ + j] = value;
    p_[j * n_ + i] = value;
  }

  ExponentVector to_vector() const {
    if (n_ != 4) throw Error(ErrorKind::invalid_argument, "exponent vectors need exactly four variables");
    ExponentVector v;
    for (std::size_t k = 0; k < 6; ++k) v[k] = (*this)(kTetraEdges[k].first, kTetraEdges[k].second);
    return v;
  }

  friend bool operator==(const PairExponents&, const PairExponents&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> p_;
};

// Intersection over i < j of (x_i, x_j)^{P[i][j]}, computed left to right.
inline MonomialIdeal pairwise_ideal(const PairExponents& pairs) {
  const Universe u = Universe::plain(pairs.n());
  MonomialIdeal acc = MonomialIdeal::unit(u);
  for (std::uint32_t i = 0; i < pairs.n(); ++i)
    for (std::uint32_t j = i + 1; j < pairs.n(); ++j)
      if (pairs(i, j) > 0) acc = intersect(acc, pair_prime_power(u, {i, 1}, {j, 1}, pairs(i, j)));
  return acc;
}

inline MonomialIdeal tetrahedral_ideal(const ExponentVector& v) {
  const Universe u = Universe::plain(4);
  MonomialIdeal acc = MonomialIdeal::unit(u);
  for (std::size_t k = 0; k < 6; ++k) {
    auto [s, t] = kTetraEdges[k];
    acc = intersect(acc, pair_prime_power(u, {s, 1}, {t, 1}, v[k]));
  }
  return acc;
}

inline std::string render(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) s += ", ";
    first = false;
    s += render(g, ideal.universe());
  }
  return s + ")";
}

}  // namespace acmtetra
