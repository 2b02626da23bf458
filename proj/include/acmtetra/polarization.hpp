#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "acmtetra/error.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/monomial.hpp"
#include "acmtetra/variables.hpp"

namespace acmtetra {

class SquarefreeMonomial {
 public:
  SquarefreeMonomial() = default;
  explicit SquarefreeMonomial(std::vector<VarId> support) : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  }
  SquarefreeMonomial(std::initializer_list<VarId> vars) : SquarefreeMonomial(std::vector<VarId>(vars)) {}

  const std::vector<VarId>& support() const { return support_; }
  std::size_t degree() const { return support_.size(); }
  bool is_one() const { return support_.empty(); }

  bool contains(VarId v) const { return std::binary_search(support_.begin(), support_.end(), v); }

  bool divides(const SquarefreeMonomial& other) const {
    return std::includes(other.support_.begin(), other.support_.end(), support_.begin(), support_.end());
  }

  friend SquarefreeMonomial lcm(const SquarefreeMonomial& x, const SquarefreeMonomial& y) {
    SquarefreeMonomial out;
    std::set_union(x.support_.begin(), x.support_.end(), y.support_.begin(), y.support_.end(),
                   std::back_inserter(out.support_));
    return out;
  }

  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

 private:
  std::vector<VarId> support_;
};

inline bool canonical_less(const SquarefreeMonomial& x, const SquarefreeMonomial& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return x.support() < y.support();
}

inline std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<SquarefreeMonomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const SquarefreeMonomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  SquarefreeIdeal(Universe universe, std::vector<SquarefreeMonomial> gens)
      : universe_(std::move(universe)), gens_(minimalize(std::move(gens))) {
    for (const auto& g : gens_)
      for (VarId v : g.support())
        if (!universe_.contains(v))
          throw Error(ErrorKind::invalid_argument, "generator uses a variable outside the universe");
  }

  static SquarefreeIdeal unit(Universe u) { return SquarefreeIdeal(std::move(u), {SquarefreeMonomial{}}); }
  static SquarefreeIdeal zero(Universe u) { return SquarefreeIdeal(std::move(u), {}); }

  const Universe& universe() const { return universe_; }
  const std::vector<SquarefreeMonomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  // Same generators, regardless of the declared universe.
  bool same_generators(const SquarefreeIdeal& other) const { return gens_ == other.gens_; }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  Universe universe_;
  std::vector<SquarefreeMonomial> gens_;
};

// Computed over the smallest universe containing both inputs.
inline SquarefreeIdeal intersect(const SquarefreeIdeal& x, const SquarefreeIdeal& y) {
  std::vector<SquarefreeMonomial> lcms;
  lcms.reserve(x.generators().size() * y.generators().size());
  for (const auto& f : x.generators())
    for (const auto& g : y.generators()) lcms.push_back(lcm(f, g));
  return SquarefreeIdeal(Universe::common(x.universe(), y.universe()), std::move(lcms));
}

// x^e -> x_1 x_2 ... x_e
inline SquarefreeMonomial polarize_monomial(const Monomial& m) {
  std::vector<VarId> support;
  support.reserve(m.degree());
  for (const auto& [v, e] : m.terms()) {
    if (v.copy != 1) throw Error(ErrorKind::invalid_argument, "polarize: monomial is already polarized");
    for (std::uint32_t c = 1; c <= e; ++c) support.push_back({v.base, c});
  }
  return SquarefreeMonomial(std::move(support));
}

inline Monomial depolarize_monomial(const SquarefreeMonomial& sm) {
  Monomial m;
  for (VarId v : sm.support()) m.multiply_var({v.base, 1}, 1);
  return m;
}

// Copy counts of the polarized universe are the per-variable maximum exponents
// among the minimal generators.
inline SquarefreeIdeal polarize_ideal(const MonomialIdeal& ideal) {
  if (ideal.universe().is_polarized())
    throw Error(ErrorKind::invalid_argument, "polarize: ideal is already polarized");
  std::vector<std::uint32_t> copies(ideal.universe().base_count(), 0);
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    for (const auto& [v, e] : g.terms()) copies[v.base] = std::max(copies[v.base], e);
    gens.push_back(polarize_monomial(g));
  }
  return SquarefreeIdeal(Universe::polarized(std::move(copies)), std::move(gens));
}

inline std::string render(const SquarefreeMonomial& m, const Universe& u) {
  if (m.is_one()) return "1";
  std::string s;
  for (VarId v : m.support()) {
    if (!s.empty()) s += '*';
    s += u.name(v);
  }
  return s;
}

inline std::string render(const SquarefreeIdeal& ideal) {
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
