// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "test_support.hpp"

namespace {

using namespace acmtetra;
using testing::ev;
using testing::for_each_vector;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_seconds) out.fail("runtime over " + std::to_string(limit_seconds) + " s");
  std::printf("%s criterion %d: %s (%.2f s / limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
              limit_seconds, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

// Counts p in {0..max}^6 with pred(p) false, split over threads by leading coordinate.
std::size_t count_violations(std::uint32_t max, const std::function<bool(const ExponentVector&)>& pred,
                             std::optional<ExponentVector>* first_bad = nullptr) {
  std::vector<std::size_t> bad(max + 1, 0);
  std::vector<std::optional<ExponentVector>> example(max + 1);
  std::vector<std::thread> pool;
  for (std::uint32_t p1 = 0; p1 <= max; ++p1)
    pool.emplace_back([&, p1] {
      for_each_vector(max, [&](const ExponentVector& p) {
        if (p[0] != p1 || pred(p)) return;
        ++bad[p1];
        if (!example[p1]) example[p1] = p;
      });
    });
  for (auto& t : pool) t.join();
  std::size_t total = 0;
  for (std::uint32_t p1 = 0; p1 <= max; ++p1) {
    total += bad[p1];
    if (first_bad && !*first_bad && example[p1]) *first_bad = example[p1];
  }
  return total;
}

Outcome violations_outcome(std::size_t n, const std::optional<ExponentVector>& example) {
  Outcome out;
  if (n) out.fail(std::to_string(n) + " violations, first at " + render(*example));
  return out;
}

}  // namespace

int main() {
  criterion(1, "worked example (2,1,1,1,1,2): ideal, polarization, dual exact; five methods ACM", 1, [] {
    Outcome out;
    const auto p = ev(2, 1, 1, 1, 1, 2);
    auto ideal = tetrahedral_ideal(p);
    if (ideal != testing::ideal4({"a*b*d^2", "b^2*c*d", "a*b*c*d", "a^2*c*d", "a*b*c^2"}))
      out.fail("ideal " + render(ideal));
    auto polar = polarize_ideal(ideal);
    if (!polar.same_generators(testing::sqf_ideal({"a1b1d1d2", "b1b2c1d1", "a1b1c1d1", "a1a2c1d1", "a1b1c1c2"},
                                                  {2, 2, 2, 2})))
      out.fail("polarization " + render(polar));
    auto dual = alexander_dual(polar);
    if (!dual.same_generators(testing::sqf_ideal(
            {"a1b1", "a2b1", "a1b2", "a1c1", "a1d1", "b1c1", "b1d1", "c1d1", "c2d1", "c1d2"}, {2, 2, 2, 2})))
      out.fail("dual " + render(dual));
    for (Method m : kAllMethods)
      if (!classify(p, m).acm) out.fail(std::string(to_string(m)) + " reports not ACM");
    return out;
  });

  criterion(2, "Betti table of the dual of (2,1,1,1,1,2) exact and linear", 30, [] {
    Outcome out;
    BettiTable want;
    want.add(0, 2, 10);
    want.add(1, 3, 20);
    want.add(2, 4, 15);
    want.add(3, 5, 4);
    auto dual = dual_generators_direct(ev(2, 1, 1, 1, 1, 2));
    auto got = graded_betti(dual);
    if (got != want) out.fail("table\n" + render(got));
    if (!has_linear_resolution(dual)) out.fail("resolution reported nonlinear");
    return out;
  });

  criterion(3, "closed form = witness = chordality on entries <= 3 and <= 5", 120, [] {
    std::optional<ExponentVector> bad;
    auto agree = [](const ExponentVector& p) {
      bool w = classify_witness(p).acm;
      return classify_closed_form(p).acm == w && acm_via_chordality(p).acm == w;
    };
    std::size_t n = count_violations(3, agree, &bad) + count_violations(5, agree, &bad);
    return violations_outcome(n, bad);
  });

  criterion(4, "Reisner and linear resolution match the numeric verdict on entries <= 2", 900, [] {
    std::optional<ExponentVector> bad;
    std::size_t n = count_violations(
        2,
        [](const ExponentVector& p) {
          bool w = classify_witness(p).acm;
          return is_cm_reisner(polarize_ideal(tetrahedral_ideal(p))) == w &&
                 has_linear_resolution(alexander_dual(polarize_ideal(tetrahedral_ideal(p)))) == w;
        },
        &bad);
    return violations_outcome(n, bad);
  });

  criterion(5, "Schwartau rule = witness search on (p1,0,p3,p4,0,p6), entries <= 8", 10, [] {
    Outcome out;
    std::size_t n = 0;
    for (std::uint32_t p1 = 0; p1 <= 8; ++p1)
      for (std::uint32_t p3 = 0; p3 <= 8; ++p3)
        for (std::uint32_t p4 = 0; p4 <= 8; ++p4)
          for (std::uint32_t p6 = 0; p6 <= 8; ++p6)
            if (classify_schwartau(p1, p3, p4, p6) != classify_witness(ev(p1, 0, p3, p4, 0, p6)).acm) ++n;
    if (n) out.fail(std::to_string(n) + " violations");
    return out;
  });

  criterion(6, "induced cycles of length >= 4 in the complement are a-c-b-d four-cycles, entries <= 3", 600, [] {
    std::optional<ExponentVector> bad;
    std::size_t n = count_violations(
        3,
        [](const ExponentVector& p) {
          auto g = complement(graph_from_ideal(dual_generators_direct(p)));
          for (const auto& c : induced_cycles(g, 4)) {
            if (c.size() != 4) return false;
            std::set<std::uint32_t> bases;
            for (VarId v : c) bases.insert(v.base);
            if (bases.size() != 4) return false;
          }
          return true;
        },
        &bad);
    return violations_outcome(n, bad);
  });

  criterion(7, "balanced stratum: ACM iff p1+p3+p5 even, closed solution = witness search, entries <= 5", 120, [] {
    std::optional<ExponentVector> bad;
    std::size_t n = count_violations(
        5,
        [](const ExponentVector& p) {
          if (!is_normalized(p) || !is_balanced(p)) return true;
          const long long q1 = p[0], q2 = p[1], q3 = p[2], q4 = p[3], q5 = p[4], q6 = p[5];
          bool ineqs = 2 * q1 >= q2 + q3 + 3 - q6 && 2 * q1 >= q4 + q5 + 3 - q6 && 2 * q6 >= q2 + q4 + 3 - q1 &&
                       2 * q6 >= q3 + q5 + 3 - q1;
          if (!ineqs) return true;
          return classify_witness(p).acm == ((q1 + q3 + q5) % 2 == 0) && unique_balanced_solution(p) == find_witness(p);
        },
        &bad);
    return violations_outcome(n, bad);
  });

  criterion(8, "Alexander involution on 500 random ideals; Froberg on 200 random graphs", 300, [] {
    Outcome out;
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
      std::uint32_t n = 1 + rng() % 10;
      std::vector<std::uint32_t> copies(n, 1);
      Universe u = Universe::polarized(copies);
      std::vector<SquarefreeMonomial> gens;
      for (int k = rng() % 7; k > 0; --k) {
        std::vector<VarId> s;
        for (std::uint32_t b = 0; b < n; ++b)
          if (rng() % 3 == 0) s.push_back({b, 1});
        gens.emplace_back(s);
      }
      SquarefreeIdeal j(u, gens);
      if (alexander_dual(alexander_dual(j)) != j) out.fail("involution fails on " + render(j));
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t n = 1 + rng() % 9;
      std::vector<std::uint32_t> copies(n, 1);
      Universe u = Universe::polarized(copies);
      Graph g(u, u.variables());
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y)
          if (rng() % 2) g.add_edge(x, y);
      if (has_linear_resolution(edge_ideal(g)) != is_chordal(complement(g)).chordal)
        out.fail("Froberg fails on\n" + render(g));
    }
    return out;
  });

  criterion(9, "three-variable pair matrices with entries <= 6 are all ACM via chordality", 60, [] {
    Outcome out;
    for (long long x = 0; x <= 6; ++x)
      for (long long y = 0; y <= 6; ++y)
        for (long long z = 0; z <= 6; ++z)
          if (!acm_via_chordality(PairExponents::from_rows({{0, x, y}, {x, 0, z}, {y, z, 0}})).acm)
            out.fail("not ACM at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
    return out;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
