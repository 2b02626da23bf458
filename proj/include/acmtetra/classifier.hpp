#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#include "acmtetra/error.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/verdict.hpp"

namespace acmtetra {

inline std::uint64_t sum16(const ExponentVector& p) { return std::uint64_t{p[0]} + p[5]; }
inline std::uint64_t sum25(const ExponentVector& p) { return std::uint64_t{p[1]} + p[4]; }
inline std::uint64_t sum34(const ExponentVector& p) { return std::uint64_t{p[2]} + p[3]; }

inline bool is_normalized(const ExponentVector& p) { return sum16(p) >= std::max(sum25(p), sum34(p)); }

inline ExponentVector apply(Normalization n, const ExponentVector& p) {
  switch (n) {
    case Normalization::identity: return p;
    case Normalization::swap_bc: return ExponentVector{{p[1], p[0], p[2], p[3], p[5], p[4]}};
    case Normalization::swap_bd: return ExponentVector{{p[2], p[1], p[0], p[5], p[4], p[3]}};
  }
  return p;
}

// Ties prefer identity, then b<->c, then b<->d.
inline std::pair<ExponentVector, Normalization> normalize(const ExponentVector& p) {
  Normalization n = Normalization::identity;
  if (!is_normalized(p)) n = sum25(p) >= sum34(p) ? Normalization::swap_bc : Normalization::swap_bd;
  return {apply(n, p), n};
}

inline bool is_witness(const ExponentVector& p, const FourCycleWitness& w) {
  using I = long long;
  if (w.i < 1 || w.j < 1 || w.l < 1 || w.m < 1) return false;
  return I{w.i} + w.j == I{p[0]} + 1 && I{w.l} + w.m == I{p[5]} + 1 && I{w.i} + w.l >= I{p[1]} + 2 &&
         I{w.i} + w.m >= I{p[2]} + 2 && I{w.j} + w.l >= I{p[3]} + 2 && I{w.j} + w.m >= I{p[4]} + 2;
}

// First witness with i ascending, then l ascending.
inline std::optional<FourCycleWitness> find_witness(const ExponentVector& p) {
  if (!is_normalized(p))
    throw Error(ErrorKind::normalization_required, "p1+p6 must be the largest opposite-edge sum");
  for (std::uint32_t i = 1; i <= p[0]; ++i)
    for (std::uint32_t l = 1; l <= p[5]; ++l) {
      FourCycleWitness w{i, p[0] + 1 - i, l, p[5] + 1 - l};
      if (is_witness(p, w)) return w;
    }
  return std::nullopt;
}

inline AcmVerdict classify_witness(const ExponentVector& p) {
  auto [q, n] = normalize(p);
  AcmVerdict v;
  v.method = Method::witness;
  v.normalization = n;
  v.witness = find_witness(q);
  v.acm = !v.witness.has_value();
  return v;
}

inline bool is_balanced(const ExponentVector& q) {
  return sum16(q) == 2 + sum25(q) && sum16(q) == 2 + sum34(q);
}

// On the balanced stratum any witness solves six linear equations whose
// unique solution is returned here when it is a tuple of positive integers.
inline std::optional<FourCycleWitness> unique_balanced_solution(const ExponentVector& q) {
  if (!is_normalized(q) || !is_balanced(q))
    throw Error(ErrorKind::balanced_case_only, "needs normalized p with p1+p6 = 2+p2+p5 = 2+p3+p4");
  const long long p1 = q[0], p2 = q[1], p3 = q[2], p5 = q[4];
  const long long twice[4] = {p1 + p3 - p5 + 1, p1 - p3 + p5 + 1, -p1 + 2 * p2 - p3 + p5 + 3, -p1 + p3 + p5 + 3};
  for (long long x : twice)
    if (x <= 0 || x % 2 != 0) return std::nullopt;
  return FourCycleWitness{static_cast<std::uint32_t>(twice[0] / 2), static_cast<std::uint32_t>(twice[1] / 2),
                          static_cast<std::uint32_t>(twice[2] / 2), static_cast<std::uint32_t>(twice[3] / 2)};
}

// Closed-form decision on the normalized vector q, reporting the first of the
// conditions (i)-(iv) that holds. A non-ACM verdict carries the
// lexicographically first four-cycle witness as its certificate.
inline AcmVerdict classify_closed_form(const ExponentVector& p) {
  auto [q, n] = normalize(p);
  AcmVerdict v;
  v.method = Method::closed_form;
  v.normalization = n;
  v.acm = true;

  const long long q1 = q[0], q2 = q[1], q3 = q[2], q4 = q[3], q5 = q[4], q6 = q[5];
  const long long gap = q1 + q6 - std::max(q2 + q5, q3 + q4);
  const bool strict[4] = {2 * q1 < q2 + q3 + 3 - q6, 2 * q1 < q4 + q5 + 3 - q6, 2 * q6 < q2 + q4 + 3 - q1,
                          2 * q6 < q3 + q5 + 3 - q1};

  if (q1 == 0 || q6 == 0) {
    v.condition = ClosedFormCondition{ConditionId::i, std::nullopt, std::nullopt};
  } else if (gap == 0 || gap == 1) {
    v.condition = ClosedFormCondition{ConditionId::ii, std::nullopt, static_cast<int>(gap)};
  } else if (auto hit = std::find(std::begin(strict), std::end(strict), true); hit != std::end(strict)) {
    v.condition = ClosedFormCondition{ConditionId::iii, static_cast<int>(hit - std::begin(strict)) + 1, std::nullopt};
  } else if (is_balanced(q) && (q1 + q3 + q5) % 2 == 0) {
    v.condition = ClosedFormCondition{ConditionId::iv, std::nullopt, std::nullopt};
  } else {
    v.acm = false;
    v.witness = find_witness(q);
  }
  return v;
}

// Curves with p2 = p5 = 0.
inline bool classify_schwartau(std::uint32_t p1, std::uint32_t p3, std::uint32_t p4, std::uint32_t p6) {
  if (std::uint64_t{p3} + p4 > std::uint64_t{p1} + p6) {
    std::swap(p1, p3);
    std::swap(p4, p6);
  }
  if (p1 == 0 || p6 == 0) return true;
  const std::uint64_t top = std::uint64_t{p1} + p6, other = std::uint64_t{p3} + p4;
  return top == other || top == other + 1;
}

}  // namespace acmtetra
