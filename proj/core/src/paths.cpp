#include "quiverlab/paths.hpp"

#include "quiverlab/errors.hpp"

namespace quiverlab {

Path Path::make(const DoubleQuiver& dq, std::vector<int> arrows) {
  if (arrows.empty()) throw DomainError("Path::make requires at least one arrow");
  for (std::size_t s = 0; s + 1 < arrows.size(); ++s) {
    if (dq.head(arrows[s]) != dq.tail(arrows[s + 1]))
      throw DomainError("arrows '" + dq.arrow_id(arrows[s]) + "' and '" +
                        dq.arrow_id(arrows[s + 1]) + "' do not compose");
  }
  Path p;
  p.base_vertex = dq.tail(arrows.front());
  p.arrows = std::move(arrows);
  return p;
}

PathElement PathElement::of(Path p, Rat coefficient) {
  PathElement e;
  e.add(p, coefficient);
  return e;
}

void PathElement::add(const Path& p, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = m_terms.emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) m_terms.erase(it);
  }
}

PathElement& PathElement::operator+=(const PathElement& other) {
  for (const auto& [p, c] : other.m_terms) add(p, c);
  return *this;
}

PathElement& PathElement::operator-=(const PathElement& other) {
  for (const auto& [p, c] : other.m_terms) add(p, -c);
  return *this;
}

PathElement& PathElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& [p, c] : m_terms) c *= scalar;
  return *this;
}

PathElement multiply(const DoubleQuiver& dq, const PathElement& x, const PathElement& y) {
  PathElement out;
  for (const auto& [px, cx] : x.terms()) {
    for (const auto& [py, cy] : y.terms()) {
      if (py.head(dq) != px.tail(dq)) continue;  // non-composable product vanishes
      Path prod;
      prod.base_vertex = py.tail(dq);
      prod.arrows = py.arrows;
      prod.arrows.insert(prod.arrows.end(), px.arrows.begin(), px.arrows.end());
      out.add(prod, cx * cy);
    }
  }
  return out;
}

PathElement moment_element(const DoubleQuiver& dq) {
  PathElement m;
  for (int a = 0; a < dq.base_arrow_count(); ++a) {
    int star = dq.star(a);
    // a a*: traverse a*, then a; closed at head(a).
    m.add(Path::make(dq, {star, a}), Rat(1));
    // a* a: traverse a, then a*; closed at tail(a).
    m.add(Path::make(dq, {a, star}), Rat(-1));
  }
  return m;
}

}  // namespace quiverlab
