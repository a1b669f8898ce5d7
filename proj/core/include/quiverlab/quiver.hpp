#ifndef QUIVERLAB_QUIVER_HPP
#define QUIVERLAB_QUIVER_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/numeric.hpp"

namespace quiverlab {

struct Arrow {
  std::string id;
  int tail = 0;  // vertex index
  int head = 0;

  bool operator==(const Arrow&) const = default;
};

/// Finite directed multigraph. Vertices and arrows keep declaration order;
/// that order is the canonical one used everywhere downstream.
class Quiver {
public:
  Quiver() = default;

  /// Builds and validates a quiver. Arrows are (id, tail id, head id).
  /// Throws ParseError for duplicate/invalid identifiers or unknown vertices.
  static Quiver make(std::vector<std::string> vertices,
                     const std::vector<std::array<std::string, 3>>& arrows);

  int vertex_count() const { return static_cast<int>(m_vertices.size()); }
  int arrow_count() const { return static_cast<int>(m_arrows.size()); }

  const std::string& vertex_id(int v) const { return m_vertices[v]; }
  const std::vector<std::string>& vertices() const { return m_vertices; }
  const Arrow& arrow(int a) const { return m_arrows[a]; }
  const std::vector<Arrow>& arrows() const { return m_arrows; }

  /// Index lookup; returns -1 when absent.
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  int loops_at(int v) const;
  int arrows_between(int tail, int head) const;

  bool operator==(const Quiver&) const;

private:
  std::vector<std::string> m_vertices;
  std::vector<Arrow> m_arrows;
  std::map<std::string, int> m_vertex_index;
  std::map<std::string, int> m_arrow_index;
};

/// The quiver together with a dual arrow a* for every base arrow a.
/// Arrows 0..l-1 are the base arrows in declaration order, arrows l..2l-1
/// their duals in the same order; star() swaps the two halves.
class DoubleQuiver {
public:
  DoubleQuiver() = default;

  const Quiver& base() const { return m_base; }
  int vertex_count() const { return m_base.vertex_count(); }
  int base_arrow_count() const { return m_base.arrow_count(); }
  int arrow_count() const { return 2 * m_base.arrow_count(); }

  int tail(int c) const { return is_dual(c) ? m_base.arrow(c - base_arrow_count()).head : m_base.arrow(c).tail; }
  int head(int c) const { return is_dual(c) ? m_base.arrow(c - base_arrow_count()).tail : m_base.arrow(c).head; }
  int star(int c) const { return is_dual(c) ? c - base_arrow_count() : c + base_arrow_count(); }
  bool is_dual(int c) const { return c >= base_arrow_count(); }
  int base_index(int c) const { return is_dual(c) ? c - base_arrow_count() : c; }

  const std::string& arrow_id(int c) const { return m_ids[c]; }
  /// Index lookup over base and dual ids; returns -1 when absent.
  int arrow_index(const std::string& id) const;

  bool operator==(const DoubleQuiver& o) const { return m_base == o.m_base; }

private:
  friend DoubleQuiver double_quiver(const Quiver&);
  Quiver m_base;
  std::vector<std::string> m_ids;  // base ids then base ids + "*"
};

/// Adjoins a reversed dual arrow to every base arrow.
DoubleQuiver double_quiver(const Quiver& q);

/// Identifier rules: nonempty, no whitespace, no '*', and none of '{' '}'
/// '=' '#' (those are delimiters in the text format).
bool valid_identifier(std::string_view id);

/// Length and nonnegativity checks for a dimension vector.
void check_dim_vector(const Quiver& q, const IntVec& alpha);
/// Length check for weights.
void check_weights(const Quiver& q, const RatVec& lambda);

Rat dot(const RatVec& lambda, const IntVec& alpha);

/// Parsed contents of an input file: the quiver and optional alpha/lambda blocks.
struct QuiverFile {
  Quiver quiver;
  std::optional<IntVec> alpha;
  std::optional<RatVec> lambda;
};

}  // namespace quiverlab

#endif
