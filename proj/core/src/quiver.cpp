#include "quiverlab/quiver.hpp"

#include <array>
#include <cctype>

#include "quiverlab/errors.hpp"

namespace quiverlab {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (unsigned char ch : id) {
    if (std::isspace(ch)) return false;
    if (ch == '*' || ch == '{' || ch == '}' || ch == '=' || ch == '#') return false;
  }
  return true;
}

Quiver Quiver::make(std::vector<std::string> vertices,
                    const std::vector<std::array<std::string, 3>>& arrows) {
  Quiver q;
  q.m_vertices = std::move(vertices);
  for (int i = 0; i < static_cast<int>(q.m_vertices.size()); ++i) {
    const auto& id = q.m_vertices[i];
    if (!valid_identifier(id))
      throw ParseError(ParseError::Kind::InvalidId, "invalid vertex identifier '" + id + "'");
    if (!q.m_vertex_index.emplace(id, i).second)
      throw ParseError(ParseError::Kind::DuplicateId, "duplicate vertex identifier '" + id + "'");
  }
  for (const auto& [id, tail_id, head_id] : arrows) {
    if (!valid_identifier(id))
      throw ParseError(ParseError::Kind::InvalidId, "invalid arrow identifier '" + id + "'");
    if (q.m_arrow_index.count(id) || q.m_vertex_index.count(id))
      throw ParseError(ParseError::Kind::DuplicateId, "duplicate identifier '" + id + "'");
    int tail = q.vertex_index(tail_id);
    if (tail < 0)
      throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + tail_id + "'");
    int head = q.vertex_index(head_id);
    if (head < 0)
      throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + head_id + "'");
    q.m_arrow_index.emplace(id, static_cast<int>(q.m_arrows.size()));
    q.m_arrows.push_back(Arrow{id, tail, head});
  }
  return q;
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = m_vertex_index.find(id);
  return it == m_vertex_index.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = m_arrow_index.find(id);
  return it == m_arrow_index.end() ? -1 : it->second;
}

int Quiver::loops_at(int v) const {
  int n = 0;
  for (const auto& a : m_arrows)
    if (a.tail == v && a.head == v) ++n;
  return n;
}

int Quiver::arrows_between(int tail, int head) const {
  int n = 0;
  for (const auto& a : m_arrows)
    if (a.tail == tail && a.head == head) ++n;
  return n;
}

bool Quiver::operator==(const Quiver& o) const {
  return m_vertices == o.m_vertices && m_arrows == o.m_arrows;
}

DoubleQuiver double_quiver(const Quiver& q) {
  DoubleQuiver d;
  d.m_base = q;
  d.m_ids.reserve(2 * q.arrow_count());
  for (const auto& a : q.arrows()) d.m_ids.push_back(a.id);
  for (const auto& a : q.arrows()) d.m_ids.push_back(a.id + "*");
  return d;
}

int DoubleQuiver::arrow_index(const std::string& id) const {
  if (!id.empty() && id.back() == '*') {
    int b = m_base.arrow_index(id.substr(0, id.size() - 1));
    return b < 0 ? -1 : b + base_arrow_count();
  }
  return m_base.arrow_index(id);
}

void check_dim_vector(const Quiver& q, const IntVec& alpha) {
  if (static_cast<int>(alpha.size()) != q.vertex_count())
    throw DomainError("dimension vector length " + std::to_string(alpha.size()) +
                      " does not match vertex count " + std::to_string(q.vertex_count()));
  if (!all_nonnegative(alpha))
    throw DomainError("dimension vector has a negative entry");
}

void check_weights(const Quiver& q, const RatVec& lambda) {
  if (static_cast<int>(lambda.size()) != q.vertex_count())
    throw DomainError("weight vector length " + std::to_string(lambda.size()) +
                      " does not match vertex count " + std::to_string(q.vertex_count()));
}

Rat dot(const RatVec& lambda, const IntVec& alpha) {
  if (lambda.size() != alpha.size())
    throw DomainError("weight/dimension length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * Rat(alpha[i]);
  return s;
}

}  // namespace quiverlab
