#include "quiverlab/necklace.hpp"

#include <algorithm>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

std::size_t least_rotation_index(const std::vector<int>& word) {
  const std::size_t n = word.size();
  if (n <= 1) return 0;
  auto at = [&](std::size_t i) { return word[i % n]; };
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = at(j);
    std::ptrdiff_t i = failure[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = failure[i];
    }
    if (sj != at(k + static_cast<std::size_t>(i + 1))) {
      if (sj < at(k)) k = j;
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  return k % n;
}

NecklaceWord NecklaceWord::vertex(int v) {
  NecklaceWord w;
  w.m_base_vertex = v;
  return w;
}

NecklaceWord canonicalize(const DoubleQuiver& dq, const Path& cycle) {
  if (!cycle.is_closed(dq))
    throw DomainError("cannot form a necklace from a non-closed walk (tail '" +
                      dq.base().vertex_id(cycle.tail(dq)) + "' != head '" +
                      dq.base().vertex_id(cycle.head(dq)) + "')");
  NecklaceWord w;
  if (cycle.is_idempotent()) {
    w.m_base_vertex = cycle.base_vertex;
    return w;
  }
  std::size_t r = least_rotation_index(cycle.arrows);
  w.m_arrows.reserve(cycle.arrows.size());
  for (std::size_t s = 0; s < cycle.arrows.size(); ++s)
    w.m_arrows.push_back(cycle.arrows[(r + s) % cycle.arrows.size()]);
  w.m_base_vertex = dq.tail(w.m_arrows.front());
  return w;
}

LieElement LieElement::of(NecklaceWord w, Rat coefficient) {
  LieElement e;
  e.add(w, coefficient);
  return e;
}

void LieElement::add(const NecklaceWord& w, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = m_terms.emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) m_terms.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [w, c] : other.m_terms) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [w, c] : other.m_terms) add(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& [w, c] : m_terms) c *= scalar;
  return *this;
}

namespace {

// Opens w at the occurrence position `pos` (the letter there is removed):
// the remaining letters in cyclic order, starting after pos.
std::vector<int> open_at(const std::vector<int>& word, std::size_t pos) {
  std::vector<int> rest;
  rest.reserve(word.size() - 1);
  for (std::size_t s = 1; s < word.size(); ++s) rest.push_back(word[(pos + s) % word.size()]);
  return rest;
}

}  // namespace

LieElement bracket(const DoubleQuiver& dq, const NecklaceWord& w1, const NecklaceWord& w2) {
  LieElement out;
  const auto& a1 = w1.arrows();
  const auto& a2 = w2.arrows();
  if (a1.empty() || a2.empty()) return out;  // vertex necklaces are central

  for (std::size_t s = 0; s < a1.size(); ++s) {
    int c = a1[s];
    int cs = dq.star(c);
    Rat sign(dq.is_dual(c) ? -1 : 1);
    for (std::size_t t = 0; t < a2.size(); ++t) {
      if (a2[t] != cs) continue;
      // u runs head(c) -> tail(c), v runs tail(c) -> head(c); the glued
      // closed walk (u then v) starts at head(c).
      std::vector<int> glued = open_at(a1, s);
      std::vector<int> v = open_at(a2, t);
      glued.insert(glued.end(), v.begin(), v.end());
      if (glued.empty()) {
        out.add(NecklaceWord::vertex(dq.tail(c)), sign);
      } else {
        out.add(canonicalize(dq, Path{dq.head(c), std::move(glued)}), sign);
      }
    }
  }
  return out;
}

LieElement bracket(const DoubleQuiver& dq, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      LieElement term = bracket(dq, wx, wy);
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

NecklaceWord parse_word(const DoubleQuiver& dq, std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::vector<int> arrows;
  std::string token;
  while (stream >> token) {
    int c = dq.arrow_index(token);
    if (c < 0)
      throw ParseError(ParseError::Kind::UnknownArrow, "unknown arrow '" + token + "'");
    arrows.push_back(c);
  }
  if (arrows.empty())
    throw ParseError(ParseError::Kind::Syntax, "empty necklace word");
  // Words are written like path monomials: rightmost letter first.
  std::reverse(arrows.begin(), arrows.end());
  return canonicalize(dq, Path::make(dq, std::move(arrows)));
}

std::vector<int> display_arrows(const NecklaceWord& w) {
  std::vector<int> arrows(w.arrows().rbegin(), w.arrows().rend());
  if (arrows.empty()) return arrows;
  std::size_t r = least_rotation_index(arrows);
  std::vector<int> out;
  out.reserve(arrows.size());
  for (std::size_t s = 0; s < arrows.size(); ++s)
    out.push_back(arrows[(r + s) % arrows.size()]);
  return out;
}

std::string to_string(const DoubleQuiver& dq, const NecklaceWord& w) {
  if (w.is_vertex()) return "e_" + dq.base().vertex_id(w.base_vertex());
  std::string s;
  std::vector<int> arrows = display_arrows(w);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += ' ';
    s += dq.arrow_id(arrows[i]);
  }
  return s;
}

std::string to_string(const DoubleQuiver& dq, const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c) + " (" + to_string(dq, w) + ")";
  }
  return s;
}

}  // namespace quiverlab
