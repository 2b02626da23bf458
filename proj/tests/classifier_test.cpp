#include <gtest/gtest.h>

#include "test_support.hpp"

namespace acmtetra {
namespace {

using testing::ev;
using testing::for_each_vector;

// Rename variables of an ideal by a permutation of the four base letters.
MonomialIdeal rename(const MonomialIdeal& ideal, const std::array<std::uint32_t, 4>& perm) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial out;
    for (const auto& [v, e] : g.terms()) out = out * Monomial::power(VarId{perm[v.base], v.copy}, e);
    gens.push_back(out);
  }
  return MonomialIdeal(ideal.universe(), gens);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(ev(1, 1, 1, 3, 2, 5)), std::make_pair(ev(1, 1, 1, 3, 2, 5), Normalization::identity));
  EXPECT_EQ(normalize(ev(0, 3, 1, 2, 4, 0)), std::make_pair(ev(3, 0, 1, 2, 0, 4), Normalization::swap_bc));
  EXPECT_EQ(normalize(ev(0, 1, 3, 4, 1, 0)), std::make_pair(ev(3, 1, 0, 0, 1, 4), Normalization::swap_bd));
}

TEST(Normalize, TieBreaking) {
  EXPECT_EQ(normalize(ev(1, 1, 1, 1, 1, 1)).second, Normalization::identity);
  EXPECT_EQ(normalize(ev(0, 2, 2, 0, 0, 0)).second, Normalization::swap_bc);
}

TEST(Normalize, MatchesVariableRenaming) {
  const std::array<std::uint32_t, 4> bc{0, 2, 1, 3}, bd{0, 3, 2, 1};
  for_each_vector(3, [&](const ExponentVector& p) {
    auto [q, n] = normalize(p);
    EXPECT_TRUE(is_normalized(q));
    auto ip = tetrahedral_ideal(p);
    auto iq = tetrahedral_ideal(q);
    if (n == Normalization::identity) {
      EXPECT_EQ(ip, iq);
    }
    if (n == Normalization::swap_bc) {
      EXPECT_EQ(rename(ip, bc), iq) << render(p);
    }
    if (n == Normalization::swap_bd) {
      EXPECT_EQ(rename(ip, bd), iq) << render(p);
    }
  });
}

TEST(FindWitness, Examples) {
  // (2,2,2,2) is a witness, but the scan reaches (1,3,1,3) first
  EXPECT_TRUE(is_witness(ev(3, 0, 0, 0, 0, 3), FourCycleWitness{2, 2, 2, 2}));
  EXPECT_EQ(find_witness(ev(3, 0, 0, 0, 0, 3)), (FourCycleWitness{1, 3, 1, 3}));
  EXPECT_EQ(find_witness(ev(2, 1, 1, 1, 1, 2)), std::nullopt);
  EXPECT_EQ(find_witness(ev(2, 1, 2, 0, 1, 2)), (FourCycleWitness{2, 1, 1, 2}));
}

TEST(FindWitness, RequiresNormalizedInput) {
  try {
    find_witness(ev(0, 3, 1, 2, 4, 0));
    FAIL() << "expected normalization-required";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::normalization_required);
  }
}

TEST(FindWitness, AgreesWithOracles) {
  for_each_vector(3, [](const ExponentVector& p) {
    auto q = normalize(p).first;
    auto w = find_witness(q);
    EXPECT_EQ(w, testing::oracle_first_witness(q));
    EXPECT_EQ(w.has_value(), testing::oracle_witness_exists(q));
    if (w) {
      EXPECT_TRUE(is_witness(q, *w));
    }
  });
}

TEST(ClassifyWitness, Examples) {
  EXPECT_TRUE(classify_witness(ev(0, 0, 0, 0, 0, 0)).acm);
  auto v = classify_witness(ev(1, 0, 0, 0, 0, 1));
  EXPECT_FALSE(v.acm);
  EXPECT_EQ(v.witness, (FourCycleWitness{1, 1, 1, 1}));
  EXPECT_EQ(v.method, Method::witness);
  EXPECT_TRUE(classify_witness(ev(1, 1, 1, 1, 1, 1)).acm);
}

TEST(UniqueBalancedSolution, Examples) {
  EXPECT_EQ(unique_balanced_solution(ev(2, 1, 2, 0, 1, 2)), (FourCycleWitness{2, 1, 1, 2}));
  EXPECT_EQ(unique_balanced_solution(ev(2, 1, 1, 1, 1, 2)), std::nullopt);
  EXPECT_EQ(unique_balanced_solution(ev(1, 0, 0, 0, 0, 1)), (FourCycleWitness{1, 1, 1, 1}));
}

TEST(UniqueBalancedSolution, PreconditionChecked) {
  for (auto p : {ev(1, 1, 1, 3, 2, 5), ev(0, 3, 1, 2, 4, 0)}) {
    try {
      unique_balanced_solution(p);
      FAIL() << render(p);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::balanced_case_only);
    }
  }
}

TEST(ClosedForm, Examples) {
  auto a = classify_closed_form(ev(1, 1, 1, 3, 2, 5));
  EXPECT_TRUE(a.acm);
  EXPECT_EQ(a.condition, (ClosedFormCondition{ConditionId::iii, 2, std::nullopt}));

  auto b = classify_closed_form(ev(2, 1, 1, 1, 1, 2));
  EXPECT_TRUE(b.acm);
  EXPECT_EQ(b.condition->id, ConditionId::iv);

  auto c = classify_closed_form(ev(3, 0, 0, 0, 0, 3));
  EXPECT_FALSE(c.acm);
  EXPECT_EQ(c.witness, (FourCycleWitness{1, 3, 1, 3}));

  auto d = classify_closed_form(ev(0, 5, 5, 5, 5, 0));
  EXPECT_TRUE(d.acm);
  // normalizes to (5,0,5,5,0,5): both endpoints nonzero, gap 0
  EXPECT_EQ(d.condition, (ClosedFormCondition{ConditionId::ii, std::nullopt, 0}));
  EXPECT_EQ(d.normalization, Normalization::swap_bc);
  EXPECT_EQ(classify_closed_form(ev(0, 5, 0, 5, 0, 0)).condition->id, ConditionId::i);
}

TEST(ClosedForm, EpsilonReported) {
  auto v0 = classify_closed_form(ev(1, 1, 0, 0, 1, 1));
  EXPECT_EQ(v0.condition, (ClosedFormCondition{ConditionId::ii, std::nullopt, 0}));
  auto v1 = classify_closed_form(ev(2, 1, 0, 0, 1, 1));
  EXPECT_EQ(v1.condition, (ClosedFormCondition{ConditionId::ii, std::nullopt, 1}));
}

TEST(ClosedForm, VerdictShape) {
  for_each_vector(3, [](const ExponentVector& p) {
    auto v = classify_closed_form(p);
    EXPECT_EQ(v.acm, v.condition.has_value());
    EXPECT_EQ(!v.acm, v.witness.has_value());
    EXPECT_EQ(v.normalization, normalize(p).second);
  });
}

TEST(Deciders, ClosedFormWitnessAndChordalityAgree) {
  for_each_vector(4, [](const ExponentVector& p) {
    bool w = classify_witness(p).acm;
    ASSERT_EQ(classify_closed_form(p).acm, w) << render(p);
    ASSERT_EQ(acm_via_chordality(p).acm, w) << render(p);
  });
}

TEST(Deciders, HomologicalMethodsAgree) {
  for_each_vector(1, [](const ExponentVector& p) {
    bool w = classify_witness(p).acm;
    EXPECT_EQ(classify(p, Method::linear_resolution).acm, w) << render(p);
    EXPECT_EQ(classify(p, Method::reisner).acm, w) << render(p);
  });
}

TEST(Deciders, PipelineMatchesDirectRoute) {
  for_each_vector(2, [](const ExponentVector& p) {
    auto stages = run_pipeline(p);
    EXPECT_EQ(stages.dual, dual_generators_direct(p));
    EXPECT_EQ(stages.acm, classify_witness(p).acm);
  });
}

// The 24 permutations of {a,b,c,d} act on the six edges; verdicts are invariant.
TEST(Invariance, VariablePermutations) {
  std::array<std::uint32_t, 4> perm{0, 1, 2, 3};
  std::vector<std::array<std::uint32_t, 4>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  auto edge_index = [](std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    for (std::size_t e = 0; e < 6; ++e)
      if (kTetraEdges[e].first == u && kTetraEdges[e].second == v) return e;
    return std::size_t{6};
  };
  for_each_vector(3, [&](const ExponentVector& p) {
    bool base = classify_witness(p).acm;
    for (const auto& s : perms) {
      ExponentVector q{};
      for (std::size_t e = 0; e < 6; ++e) q.p[edge_index(s[kTetraEdges[e].first], s[kTetraEdges[e].second])] = p[e];
      ASSERT_EQ(classify_witness(q).acm, base) << render(p) << " -> " << render(q);
    }
  });
}

TEST(Propositions, ZeroEndpointIsAcm) {
  for_each_vector(4, [](const ExponentVector& p) {
    auto q = normalize(p).first;
    if (q[0] == 0 || q[5] == 0) {
      EXPECT_TRUE(classify_witness(p).acm);
    }
  });
}

TEST(Propositions, SmallGapIsAcm) {
  for_each_vector(4, [](const ExponentVector& p) {
    auto q = normalize(p).first;
    auto gap = sum16(q) - std::max(sum25(q), sum34(q));
    if (gap <= 1) {
      EXPECT_TRUE(classify_witness(p).acm) << render(p);
    }
  });
}

TEST(Propositions, LargeGapWithInequalitiesIsNotAcm) {
  for_each_vector(4, [](const ExponentVector& p) {
    auto q = normalize(p).first;
    const long long q1 = q[0], q2 = q[1], q3 = q[2], q4 = q[3], q5 = q[4], q6 = q[5];
    bool ineqs = 2 * q1 >= q2 + q3 + 3 - q6 && 2 * q1 >= q4 + q5 + 3 - q6 && 2 * q6 >= q2 + q4 + 3 - q1 &&
                 2 * q6 >= q3 + q5 + 3 - q1;
    long long hi = std::max(q2 + q5, q3 + q4), lo = std::min(q2 + q5, q3 + q4);
    if (q1 > 0 && q6 > 0 && q1 + q6 >= 2 + hi && q1 + q6 >= 3 + lo && ineqs) {
      EXPECT_FALSE(classify_witness(p).acm) << render(p);
    }
  });
}

TEST(Propositions, BalancedParityLaw) {
  int seen = 0;
  for_each_vector(5, [&](const ExponentVector& p) {
    if (!is_normalized(p) || !is_balanced(p)) return;
    const long long q1 = p[0], q2 = p[1], q3 = p[2], q4 = p[3], q5 = p[4], q6 = p[5];
    bool ineqs = 2 * q1 >= q2 + q3 + 3 - q6 && 2 * q1 >= q4 + q5 + 3 - q6 && 2 * q6 >= q2 + q4 + 3 - q1 &&
                 2 * q6 >= q3 + q5 + 3 - q1;
    EXPECT_EQ(unique_balanced_solution(p), find_witness(p)) << render(p);
    if (!ineqs) return;
    ++seen;
    EXPECT_EQ(classify_witness(p).acm, (q1 + q3 + q5) % 2 == 0) << render(p);
  });
  EXPECT_GT(seen, 0);
}

TEST(Schwartau, Examples) {
  EXPECT_TRUE(classify_schwartau(1, 1, 1, 1));
  EXPECT_FALSE(classify_schwartau(2, 1, 1, 2));
  EXPECT_EQ(find_witness(ev(2, 0, 1, 1, 0, 2)), (FourCycleWitness{1, 2, 1, 2}));
  for (std::uint32_t p3 = 0; p3 <= 5; ++p3)
    for (std::uint32_t p4 = 0; p4 <= 5; ++p4)
      for (std::uint32_t p6 = 0; p6 <= 5; ++p6) {
        if (p3 + p4 <= p6 || p3 == 0 || p4 == 0) {
          EXPECT_TRUE(classify_schwartau(0, p3, p4, p6));
        }
      }
  // a zero p1 only helps while p1+p6 stays the larger pair sum
  EXPECT_FALSE(classify_schwartau(0, 2, 2, 1));
  EXPECT_EQ(find_witness(ev(2, 0, 0, 1, 0, 2)), (FourCycleWitness{1, 2, 1, 2}));
}

TEST(Schwartau, MatchesWitnessSearch) {
  for (std::uint32_t p1 = 0; p1 <= 8; ++p1)
    for (std::uint32_t p3 = 0; p3 <= 8; ++p3)
      for (std::uint32_t p4 = 0; p4 <= 8; ++p4)
        for (std::uint32_t p6 = 0; p6 <= 8; ++p6)
          ASSERT_EQ(classify_schwartau(p1, p3, p4, p6), classify_witness(ev(p1, 0, p3, p4, 0, p6)).acm)
              << p1 << "," << p3 << "," << p4 << "," << p6;
}

}  // namespace
}  // namespace acmtetra
