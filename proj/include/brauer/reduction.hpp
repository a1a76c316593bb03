#pragma once

// Reduction of a one-loop Brauer graph to the loop-star with the same
// number of edges by repeated enlarging moves, with per-step certificates.

#include <optional>
#include <string>
#include <vector>

#include "brauer/tilting.hpp"

namespace brauer {

struct ReductionStep {
  BrauerGraph before;
  BrauerGraph after;
  EdgeId at;
  std::optional<TiltCertificate> certificate;
};

struct ReductionTrace {
  BrauerGraph input;
  std::vector<ReductionStep> steps;
  BrauerGraph normal_form;
  int n = 0;
};

/// CertificateFailure raised mid-reduction; carries the steps done so far.
class ReductionAborted : public CertificateFailure {
 public:
  ReductionAborted(const std::string& message, ReductionTrace partial)
      : CertificateFailure(message), partial_(std::move(partial)) {}
  const ReductionTrace& partial() const { return partial_; }

 private:
  ReductionTrace partial_;
};

inline int classify(const BrauerGraph& g) { return static_cast<int>(g.edge_count()); }

/// First cycle edge after the loop whose tree is non-empty.
inline std::optional<EdgeId> next_pivot(const BrauerGraph& g) {
  const auto& cyc = g.cycle_edges();
  for (std::size_t k = 1; k < cyc.size(); ++k)
    if (!g.tree(cyc[k]).empty()) return cyc[k];
  return std::nullopt;
}

/// Enlarging step at `at` with its certificate; the End Cartan matrix must
/// agree with the Cartan matrix of Omega(after).
template <class K = Rational>
TiltCertificate certify_step(const BrauerGraph& before, const EdgeId& at, const BrauerGraph& after,
                             EngineOptions opt = {}) {
  auto a = omega_algebra<K>(before, opt);
  auto t = enlarge_complex(a, before, at);
  if (!(*t.target_graph == after)) throw CertificateFailure("surgery result differs from the recorded graph");
  auto cert = check_tilting(t);
  auto target = cartan(omega_algebra<K>(after, opt));
  if (!(cert.end_cartan == target)) throw CertificateFailure("End Cartan matrix differs from the Cartan matrix of the new graph");
  return cert;
}

template <class K = Rational>
ReductionTrace reduce_to_normal_form(const BrauerGraph& g, bool certify, EngineOptions opt = {}) {
  validate(g);
  ReductionTrace trace;
  trace.input = g;
  trace.n = classify(g);
  BrauerGraph cur = g;
  const std::size_t expected = g.tree_edge_count();
  while (auto at = next_pivot(cur)) {
    ReductionStep step{cur, enlarge_graph_move(cur, *at), *at, std::nullopt};
    if (step.after.edge_count() != cur.edge_count() || step.after.tree_edge_count() + 1 != cur.tree_edge_count())
      throw InternalError("enlarging move at " + *at + " did not move exactly one edge");
    if (certify) {
      try {
        step.certificate = certify_step<K>(step.before, step.at, step.after, opt);
      } catch (const CertificateFailure& e) {
        trace.normal_form = cur;
        throw ReductionAborted("step " + std::to_string(trace.steps.size()) + ": " + e.what(), trace);
      }
    }
    cur = step.after;
    trace.steps.push_back(std::move(step));
    if (trace.steps.size() > expected) throw InternalError("reduction does not terminate");
  }
  if (!cur.is_loop_star() || trace.steps.size() != expected)
    throw InternalError("reduction ended away from a loop-star");
  trace.normal_form = cur;
  return trace;
}

/// Re-checks a certified trace from scratch.
template <class K = Rational>
void certify_trace(const ReductionTrace& t, EngineOptions opt = {}) {
  auto fail = [](std::size_t k, const std::string& what) {
    throw CertificateFailure("step " + std::to_string(k) + ": " + what);
  };
  validate(t.input);
  if (t.n != classify(t.input)) throw CertificateFailure("n differs from the edge count");
  if (t.steps.size() != t.input.tree_edge_count()) throw CertificateFailure("step count differs from the tree edge count");
  BrauerGraph cur = t.input;
  std::optional<long long> det;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    if (!(s.before == cur)) fail(k, "does not start where the previous step ended");
    try {
      validate(s.before);
      validate(s.after);
    } catch (const ValidationError& e) {
      fail(k, e.what());
    }
    if (!s.certificate) fail(k, "no certificate");
    TiltCertificate fresh;
    try {
      fresh = certify_step<K>(s.before, s.at, s.after, opt);
    } catch (const Error& e) {
      fail(k, e.what());
    }
    const auto& old = *s.certificate;
    if (!(old.end_cartan == fresh.end_cartan)) fail(k, "recorded End Cartan matrix is wrong");
    if (old.hom_vanishing != fresh.hom_vanishing) fail(k, "recorded Hom vanishing is wrong");
    if (old.generation != fresh.generation) fail(k, "recorded generation witnesses are wrong");
    if (old.det_source != fresh.det_source || old.det_end != fresh.det_end) fail(k, "recorded determinants are wrong");
    const long long d = fresh.det_source < 0 ? -fresh.det_source : fresh.det_source;
    if (det && *det != d) fail(k, "|det Cartan| changes along the trace");
    det = d;
    cur = s.after;
  }
  if (!(cur == t.normal_form)) throw CertificateFailure("normal form differs from the last graph");
  if (!t.normal_form.is_loop_star()) throw CertificateFailure("normal form is not a loop-star");
  if (classify(t.normal_form) != t.n) throw CertificateFailure("normal form has the wrong edge count");
}

/// Renames edges to 1..n in canonical order; vertex ids are kept.
inline BrauerGraph relabel_canonically(const BrauerGraph& g) {
  std::map<EdgeId, EdgeId> name;
  for (std::size_t k = 0; k < g.edges().size(); ++k) name[g.edges()[k]] = std::to_string(k + 1);
  auto vs = g.vertices();
  for (auto& v : vs)
    for (auto& e : v.cyclic) e = name.at(e);
  return BrauerGraph::from_vertices(std::move(vs));
}

}  // namespace brauer
