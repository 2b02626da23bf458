#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "acmtetra/error.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/polarization.hpp"

namespace acmtetra {

inline constexpr std::size_t kDefaultTransversalCap = 200000;

namespace detail {

// Bit-set operations used by the transversal enumeration. Universes of at most
// 64 variables use a machine word; larger ones fall back to a dynamic bitset.
template <typename Mask>
struct MaskOps;

template <>
struct MaskOps<std::uint64_t> {
  static std::uint64_t make(std::size_t) { return 0; }
  static void set(std::uint64_t& m, std::size_t i) { m |= std::uint64_t{1} << i; }
  static bool test(std::uint64_t m, std::size_t i) { return (m >> i) & 1u; }
  static bool intersects(std::uint64_t a, std::uint64_t b) { return (a & b) != 0; }
  static bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
  static std::size_t count(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }
  static bool less(std::uint64_t a, std::uint64_t b) { return a < b; }
};

template <>
struct MaskOps<boost::dynamic_bitset<>> {
  using M = boost::dynamic_bitset<>;
  static M make(std::size_t n) { return M(n); }
  static void set(M& m, std::size_t i) { m.set(i); }
  static bool test(const M& m, std::size_t i) { return m.test(i); }
  static bool intersects(const M& a, const M& b) { return a.intersects(b); }
  static bool subset(const M& a, const M& b) { return a.is_subset_of(b); }
  static std::size_t count(const M& m) { return m.count(); }
  static bool less(const M& a, const M& b) { return a < b; }
};

// Keeps only inclusion-minimal sets.
template <typename Mask>
void keep_minimal(std::vector<Mask>& sets) {
  using Ops = MaskOps<Mask>;
  std::sort(sets.begin(), sets.end(), [](const Mask& a, const Mask& b) {
    auto ca = Ops::count(a), cb = Ops::count(b);
    return ca != cb ? ca < cb : Ops::less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  kept.reserve(sets.size());
  for (auto& s : sets) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Mask& k) { return Ops::subset(k, s); });
    if (!redundant) kept.push_back(std::move(s));
  }
  sets = std::move(kept);
}

// Minimal hitting sets of `family` by incremental distribution: extend each
// partial transversal by every element of the next set it misses.
template <typename Mask>
std::vector<Mask> minimal_transversals(const std::vector<Mask>& family, std::size_t width, std::size_t cap) {
  using Ops = MaskOps<Mask>;
  std::vector<Mask> partial{Ops::make(width)};
  for (const Mask& edge : family) {
    std::vector<Mask> next;
    for (const Mask& t : partial) {
      if (Ops::intersects(t, edge)) {
        next.push_back(t);
        continue;
      }
      for (std::size_t i = 0; i < width; ++i) {
        if (!Ops::test(edge, i)) continue;
        Mask grown = t;
        Ops::set(grown, i);
        next.push_back(std::move(grown));
      }
      if (next.size() > cap)
        throw Error(ErrorKind::resource_limit,
                    "transversal enumeration exceeded " + std::to_string(cap) + " intermediate sets");
    }
    keep_minimal(next);
    partial = std::move(next);
  }
  return partial;
}

template <typename Mask>
SquarefreeIdeal alexander_dual_with(const SquarefreeIdeal& ideal, std::size_t cap) {
  using Ops = MaskOps<Mask>;
  const Universe& u = ideal.universe();
  const auto vars = u.variables();
  std::vector<Mask> family;
  family.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    Mask m = Ops::make(vars.size());
    for (VarId v : g.support()) Ops::set(m, u.index_of(v));
    family.push_back(std::move(m));
  }
  std::vector<SquarefreeMonomial> gens;
  for (const Mask& t : minimal_transversals(family, vars.size(), cap)) {
    std::vector<VarId> support;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (Ops::test(t, i)) support.push_back(vars[i]);
    gens.emplace_back(std::move(support));
  }
  return SquarefreeIdeal(u, std::move(gens));
}

}  // namespace detail

// Alexander dual: intersection of the primes generated by each generator's
// support, i.e. the minimal transversals of the supports. By convention the
// unit ideal dualizes to the zero ideal and vice versa.
inline SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal, std::size_t cap = kDefaultTransversalCap) {
  if (ideal.is_zero()) return SquarefreeIdeal::unit(ideal.universe());
  if (ideal.is_unit()) return SquarefreeIdeal::zero(ideal.universe());
  if (ideal.universe().size() <= 64) return detail::alexander_dual_with<std::uint64_t>(ideal, cap);
  return detail::alexander_dual_with<boost::dynamic_bitset<>>(ideal, cap);
}

// Copy counts of the polarized ring underlying an unmixed height-two ideal:
// base variable s needs max_t P[s][t] copies.
inline Universe polarized_universe(const PairExponents& pairs) {
  std::vector<std::uint32_t> copies(pairs.n(), 0);
  for (std::size_t s = 0; s < pairs.n(); ++s)
    for (std::size_t t = 0; t < pairs.n(); ++t) copies[s] = std::max(copies[s], pairs(s, t));
  return Universe::polarized(std::move(copies));
}

// Dual of the polarized ideal read off from the exponents: x_{s,i} x_{t,j}
// for s < t with i, j >= 1 and i + j <= P[s][t] + 1.
inline SquarefreeIdeal dual_generators_direct(const PairExponents& pairs) {
  std::vector<SquarefreeMonomial> gens;
  for (std::uint32_t s = 0; s < pairs.n(); ++s) {
    for (std::uint32_t t = s + 1; t < pairs.n(); ++t) {
      const std::uint32_t p = pairs(s, t);
      for (std::uint32_t i = 1; i <= p; ++i)
        for (std::uint32_t j = 1; i + j <= p + 1; ++j) gens.push_back(SquarefreeMonomial{{s, i}, {t, j}});
    }
  }
  return SquarefreeIdeal(polarized_universe(pairs), std::move(gens));
}

inline SquarefreeIdeal dual_generators_direct(const ExponentVector& v) {
  return dual_generators_direct(PairExponents::from_vector(v));
}

}  // namespace acmtetra
