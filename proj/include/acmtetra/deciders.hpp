#pragma once

#include <cstddef>
#include <utility>

#include "acmtetra/alexander.hpp"
#include "acmtetra/classifier.hpp"
#include "acmtetra/graph.hpp"
#include "acmtetra/homology.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/polarization.hpp"
#include "acmtetra/verdict.hpp"

namespace acmtetra {

struct Limits {
  std::size_t homology_max_vertices = kDefaultHochsterVertexLimit;
  std::size_t transversal_cap = kDefaultTransversalCap;
};

// ACM iff the complement of the graph of the dual is chordal.
inline AcmVerdict acm_via_chordality(const PairExponents& pairs) {
  const Graph g = graph_from_ideal(dual_generators_direct(pairs));
  AcmVerdict v;
  v.method = Method::chordal;
  v.graph_certificate = is_chordal(complement(g));
  v.acm = v.graph_certificate->chordal;
  return v;
}

inline AcmVerdict acm_via_chordality(const ExponentVector& p) {
  return acm_via_chordality(PairExponents::from_vector(p));
}

// ACM iff the dual of the polarization has a linear resolution.
inline AcmVerdict acm_via_linear_resolution(const PairExponents& pairs, const Limits& limits = {}) {
  const SquarefreeIdeal dual = dual_generators_direct(pairs);
  AcmVerdict v;
  v.method = Method::linear_resolution;
  v.acm = has_linear_resolution(dual, limits.homology_max_vertices);
  if (!dual.is_zero()) v.betti = graded_betti(dual, limits.homology_max_vertices);
  return v;
}

// Reisner's criterion applied to the polarization of the ideal.
inline AcmVerdict acm_via_reisner(const PairExponents& pairs, const Limits& limits = {}) {
  const SquarefreeIdeal polar = polarize_ideal(pairwise_ideal(pairs));
  AcmVerdict v;
  v.method = Method::reisner;
  v.reisner_obstruction = reisner_obstruction(polar, limits.homology_max_vertices);
  v.acm = !v.reisner_obstruction.has_value();
  return v;
}

inline AcmVerdict classify(const ExponentVector& p, Method method, const Limits& limits = {}) {
  switch (method) {
    case Method::closed_form: return classify_closed_form(p);
    case Method::witness: return classify_witness(p);
    case Method::chordal: return acm_via_chordality(p);
    case Method::linear_resolution: return acm_via_linear_resolution(PairExponents::from_vector(p), limits);
    case Method::reisner: return acm_via_reisner(PairExponents::from_vector(p), limits);
  }
  throw Error(ErrorKind::invalid_argument, "unknown method");
}

// Every stage of the reduction, each computed from the previous one: ideal,
// polarization, Alexander dual by transversals, its graph, the complement and
// the chordality certificate.
struct PipelineStages {
  MonomialIdeal ideal;
  SquarefreeIdeal polarization;
  SquarefreeIdeal dual;
  Graph graph;
  Graph complement_graph;
  ChordalityCertificate certificate;
  bool acm = false;
};

inline PipelineStages run_pipeline(MonomialIdeal ideal, const Limits& limits = {}) {
  PipelineStages s;
  s.ideal = std::move(ideal);
  s.polarization = polarize_ideal(s.ideal);
  s.dual = alexander_dual(s.polarization, limits.transversal_cap);
  s.graph = graph_from_ideal(s.dual);
  s.complement_graph = complement(s.graph);
  s.certificate = is_chordal(s.complement_graph);
  s.acm = s.certificate.chordal;
  return s;
}

inline PipelineStages run_pipeline(const PairExponents& pairs, const Limits& limits = {}) {
  return run_pipeline(pairwise_ideal(pairs), limits);
}

inline PipelineStages run_pipeline(const ExponentVector& p, const Limits& limits = {}) {
  return run_pipeline(tetrahedral_ideal(p), limits);
}

}  // namespace acmtetra
