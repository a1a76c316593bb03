#pragma once

// Presentations KQ/J by a quiver and integer-coefficient relations, and the
// builders for Ω(T), the displayed Ω(n), and A(n).

#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/graph.hpp"
#include "brauer/path.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

struct Term {
  long coef = 0;
  Path path;
};

struct Relation {
  std::vector<Term> terms;

  int source() const { return terms.front().path.source; }
  int target() const { return terms.front().path.target; }
  int max_length() const {
    int m = 0;
    for (const auto& t : terms) m = std::max(m, t.path.length());
    return m;
  }
  int min_length() const {
    int m = terms.front().path.length();
    for (const auto& t : terms) m = std::min(m, t.path.length());
    return m;
  }
  bool monomial() const { return terms.size() == 1; }
};

struct Presentation {
  std::string name;
  BrauerQuiver quiver;
  std::vector<Relation> relations;
};

inline std::string relation_to_string(const BrauerQuiver& q, const Relation& r) {
  std::string out;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const Term& t = r.terms[k];
    if (k == 0) {
      if (t.coef < 0) out += "-";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    long c = t.coef < 0 ? -t.coef : t.coef;
    if (c != 1) out += std::to_string(c) + " ";
    out += path_to_string(q, t.path);
  }
  return out;
}

/// Rejects inhomogeneous or non-admissible relations.
inline void check_presentation(const Presentation& p) {
  for (const auto& r : p.relations) {
    if (r.terms.empty()) throw InternalError("empty relation in " + p.name);
    for (const auto& t : r.terms) {
      if (t.coef == 0) throw InternalError("zero coefficient in " + p.name);
      if (t.path.length() < 2)
        throw InternalError("relation " + relation_to_string(p.quiver, r) + " is not admissible");
      if (t.path.source != r.source() || t.path.target != r.target())
        throw InternalError("relation " + relation_to_string(p.quiver, r) +
                            " is not source/target homogeneous");
    }
  }
}

namespace detail {

inline Relation monomial(const BrauerQuiver& q, std::vector<int> arrows) {
  return Relation{{Term{1, make_path(q, arrows)}}};
}

inline Relation binomial(const BrauerQuiver& q, std::vector<int> a, long sign,
                         std::vector<int> b) {
  return Relation{{Term{1, make_path(q, a)}, Term{sign, make_path(q, b)}}};
}

inline std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// Generators of J_T for the quiver of a one-loop Brauer graph. Where a
/// cycle at i is trivial the commutativity relation degenerates to the
/// other cycle followed by its first arrow.
inline Presentation omega_relations(const BrauerQuiver& q) {
  Presentation p{"Omega(T)", q, {}};
  const int one = q.arrows[q.loop_arrow].source;
  const int n = q.vertex_count();

  for (int i = 0; i < n; ++i) {
    if (i == one) continue;
    if (q.beta_in[i] >= 0 && q.alpha_out[i] >= 0)
      p.relations.push_back(detail::monomial(q, {q.beta_in[i], q.alpha_out[i]}));
    if (q.alpha_in[i] >= 0 && q.beta_out[i] >= 0)
      p.relations.push_back(detail::monomial(q, {q.alpha_in[i], q.beta_out[i]}));
  }

  p.relations.push_back(detail::monomial(q, {q.beta_in[one], q.beta_out[one]}));

  for (int i = 0; i < n; ++i) {
    if (i == one) continue;
    auto a = cycle_at(q, i, Camp::alpha);
    auto b = cycle_at(q, i, Camp::beta);
    if (!a.empty() && !b.empty())
      p.relations.push_back(detail::binomial(q, a, -1, b));
    else if (a.empty())
      p.relations.push_back(detail::monomial(q, detail::join(b, {q.beta_out[i]})));
    else
      p.relations.push_back(detail::monomial(q, detail::join(a, {q.alpha_out[i]})));
  }

  const int alpha = q.loop_arrow;
  const auto b1 = cycle_at(q, one, Camp::beta);
  p.relations.push_back(detail::binomial(q, {alpha, alpha}, -1, detail::join({alpha}, b1)));
  p.relations.push_back(detail::binomial(q, detail::join({alpha}, b1), +1, detail::join(b1, {alpha})));
  check_presentation(p);
  return p;
}

namespace detail {

// The loop-star quiver with arrows looked up by label, as drawn.
struct StarArrows {
  BrauerQuiver q;
  int alpha;
  std::vector<int> beta;  // beta[j] : j -> j+1, 1-based

  explicit StarArrows(int n) : q(build_quiver(loop_star(n))), alpha(q.loop_arrow), beta(n + 1, -1) {
    for (int j = 1; j <= n; ++j) beta[j] = q.beta_out[q.vertex(std::to_string(j))];
  }
  std::vector<int> run(int from, int to) const {  // β_from ... β_to
    std::vector<int> w;
    for (int j = from; j <= to; ++j) w.push_back(beta[j]);
    return w;
  }
};

inline Presentation star_presentation(int n, bool alpha_square_zero) {
  if (n < 1) throw DomainError("n must be at least 1");
  StarArrows s(n);
  const auto& q = s.q;
  const auto all = s.run(1, n);
  Presentation p{alpha_square_zero ? "A(" + std::to_string(n) + ")"
                                   : "Omega(" + std::to_string(n) + ")",
                 q, {}};
  if (alpha_square_zero)
    p.relations.push_back(monomial(q, {s.alpha, s.alpha}));
  else
    p.relations.push_back(binomial(q, {s.alpha, s.alpha}, -1, join({s.alpha}, all)));
  p.relations.push_back(binomial(q, join({s.alpha}, all), +1, join(all, {s.alpha})));
  p.relations.push_back(monomial(q, {s.beta[n], s.beta[1]}));
  for (int j = 2; j <= n; ++j)
    p.relations.push_back(
        monomial(q, join(join(join(s.run(j, n), {s.alpha}), s.run(1, j - 1)), {s.beta[j]})));
  check_presentation(p);
  return p;
}

}  // namespace detail

/// Ω(n) exactly as displayed: α² = αβ₁…β_n, αβ₁…β_n + β₁…β_nα = 0,
/// β_nβ₁ = 0 and β_j…β_nαβ₁…β_j = 0 for 2 ≤ j ≤ n.
inline Presentation omega_n_presentation(int n) { return detail::star_presentation(n, false); }

/// A(n): as Ω(n) but with α² = 0.
inline Presentation a_n_presentation(int n) { return detail::star_presentation(n, true); }

}  // namespace brauer
