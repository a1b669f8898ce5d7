#ifndef QUIVERLAB_PATHS_HPP
#define QUIVERLAB_PATHS_HPP

#include <compare>
#include <map>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Oriented path in the double quiver, stored in traversal order:
/// head(arrows[s]) == tail(arrows[s+1]). A length-0 path is the vertex
/// idempotent e_{base_vertex}.
struct Path {
  int base_vertex = 0;
  std::vector<int> arrows;

  static Path idempotent(int vertex) { return Path{vertex, {}}; }
  /// Validates composability; the start vertex is derived from the arrows.
  static Path make(const DoubleQuiver& dq, std::vector<int> arrows);

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_idempotent() const { return arrows.empty(); }
  int tail(const DoubleQuiver& dq) const { return arrows.empty() ? base_vertex : dq.tail(arrows.front()); }
  int head(const DoubleQuiver& dq) const { return arrows.empty() ? base_vertex : dq.head(arrows.back()); }
  bool is_closed(const DoubleQuiver& dq) const { return tail(dq) == head(dq); }

  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.base_vertex <=> b.base_vertex; c != 0) return c;
    return a.arrows <=> b.arrows;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Finite rational linear combination of paths (an element of the path
/// algebra of the double quiver). Zero coefficients are never stored.
class PathElement {
public:
  PathElement() = default;
  static PathElement of(Path p, Rat coefficient = Rat(1));

  void add(const Path& p, const Rat& coefficient);
  bool is_zero() const { return m_terms.empty(); }
  const std::map<Path, Rat>& terms() const { return m_terms; }

  PathElement& operator+=(const PathElement& other);
  PathElement& operator-=(const PathElement& other);
  PathElement& operator*=(const Rat& scalar);
  friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
  friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
  friend bool operator==(const PathElement&, const PathElement&) = default;

private:
  std::map<Path, Rat> m_terms;
};

/// Path-algebra product: (x*y) traverses y first, then x, so evaluation
/// matches matrix composition. Non-composable products vanish; idempotents
/// act as units on matching endpoints.
PathElement multiply(const DoubleQuiver& dq, const PathElement& x, const PathElement& y);

/// The element sum_a (a a* - a* a) over base arrows.
PathElement moment_element(const DoubleQuiver& dq);

}  // namespace quiverlab

#endif
