#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acmtetra/error.hpp"
#include "acmtetra/graph.hpp"
#include "acmtetra/homology.hpp"

namespace acmtetra {

enum class Method { closed_form, witness, chordal, linear_resolution, reisner };

inline constexpr Method kAllMethods[] = {Method::closed_form, Method::witness, Method::chordal,
                                         Method::linear_resolution, Method::reisner};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::witness: return "witness";
    case Method::chordal: return "chordal";
    case Method::linear_resolution: return "linear_resolution";
    case Method::reisner: return "reisner";
  }
  return "unknown";
}

// Positive integers (i, j, l, m) with i + j = p1 + 1, l + m = p6 + 1 and
// i + l >= p2 + 2, i + m >= p3 + 2, j + l >= p4 + 2, j + m >= p5 + 2. Each one
// is an induced 4-cycle a_i c_l b_j d_m of the complementary graph.
struct FourCycleWitness {
  std::uint32_t i = 0, j = 0, l = 0, m = 0;
  friend bool operator==(const FourCycleWitness&, const FourCycleWitness&) = default;
};

// Variable swap that puts the largest opposite-edge sum in position (p1, p6).
enum class Normalization { identity, swap_bc, swap_bd };

inline const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::identity: return "identity";
    case Normalization::swap_bc: return "b<->c";
    case Normalization::swap_bd: return "b<->d";
  }
  return "unknown";
}

enum class ConditionId { i, ii, iii, iv };

inline const char* to_string(ConditionId c) {
  switch (c) {
    case ConditionId::i: return "i";
    case ConditionId::ii: return "ii";
    case ConditionId::iii: return "iii";
    case ConditionId::iv: return "iv";
  }
  return "unknown";
}

struct ClosedFormCondition {
  ConditionId id = ConditionId::i;
  std::optional<int> inequality;  // which of the four strict inequalities (1-4), for (iii)
  std::optional<int> epsilon;     // 0 or 1, for (ii)
  friend bool operator==(const ClosedFormCondition&, const ClosedFormCondition&) = default;
};

struct AcmVerdict {
  bool acm = false;
  Method method = Method::closed_form;
  std::optional<ClosedFormCondition> condition;
  std::optional<FourCycleWitness> witness;
  std::optional<ChordalityCertificate> graph_certificate;
  std::optional<BettiTable> betti;
  std::optional<std::vector<VarId>> reisner_obstruction;
  Normalization normalization = Normalization::identity;
};

}  // namespace acmtetra
