#pragma once

#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

/// A path in a quiver, written left to right: arrows[0] is traversed first.
/// Trivial paths e_v have no arrows and source == target == v.
struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Length-lexicographic order on arrow indices; trivial paths by vertex.
/// Arrow indices already rank β-arrows below α-arrows.
inline bool path_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

struct PathLess {
  bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};

inline Path trivial_path(int v) { return Path{v, v, {}}; }

inline Path make_path(const BrauerQuiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw InternalError("make_path needs at least one arrow");
  Path p{q.arrows[arrows.front()].source, q.arrows[arrows.back()].target, arrows};
  for (std::size_t k = 1; k < arrows.size(); ++k)
    if (q.arrows[arrows[k - 1]].target != q.arrows[arrows[k]].source)
      throw InternalError("arrows " + q.arrows[arrows[k - 1]].name + " and " +
                          q.arrows[arrows[k]].name + " do not compose");
  return p;
}

/// Concatenation `a` then `b`; the caller guarantees a.target == b.source.
inline Path concat(const Path& a, const Path& b) {
  Path p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

inline std::string path_to_string(const BrauerQuiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.labels[p.source];
  std::string out;
  for (int a : p.arrows) {
    if (!out.empty()) out += ' ';
    out += q.arrows[a].name;
  }
  return out;
}

}  // namespace brauer
