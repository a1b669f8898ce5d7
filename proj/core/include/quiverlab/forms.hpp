#ifndef QUIVERLAB_FORMS_HPP
#define QUIVERLAB_FORMS_HPP

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Euler form chi (chi_ij = delta_ij - #arrows v_i -> v_j), its
/// symmetrization T = chi + chi^T, and the reflection machinery built on them.
class FormsContext {
public:
  explicit FormsContext(Quiver q);

  const Quiver& quiver() const { return m_quiver; }
  int vertex_count() const { return m_quiver.vertex_count(); }

  const Int& euler(int i, int j) const { return m_euler[i][j]; }
  const Int& tits(int i, int j) const { return m_tits[i][j]; }

  /// chi(a, b) = a^T chi b. Bilinear; negative entries allowed.
  Int chi(const IntVec& a, const IntVec& b) const;
  /// T(a, b) = chi(a,b) + chi(b,a).
  Int tits_form(const IntVec& a, const IntVec& b) const;
  /// T(a, e_i).
  Int tits_pairing(const IntVec& a, int i) const;
  /// p(a) = 1 - chi(a, a).
  Int p(const IntVec& a) const;

  bool loop_free(int i) const { return m_loop_free[i]; }

  /// Simple reflection s_i(a) = a - T(a, e_i) e_i at a loop-free vertex.
  IntVec reflect(int i, const IntVec& a) const;

  /// Support of a induces a connected subgraph of the underlying graph.
  bool connected_support(const IntVec& a) const;

private:
  void check_length(const IntVec& a) const;

  Quiver m_quiver;
  std::vector<std::vector<Int>> m_euler;
  std::vector<std::vector<Int>> m_tits;
  std::vector<bool> m_loop_free;
  std::vector<std::vector<int>> m_neighbors;  // underlying-graph adjacency
};

enum class RootKind { Real, Imaginary };

struct RootInfo {
  IntVec vector;
  RootKind kind;
  Int p;
  bool indivisible;
};

/// Positive roots inside a bounding box, lexicographically sorted.
struct RootSet {
  IntVec box;
  std::vector<RootInfo> roots;

  bool contains(const IntVec& v) const;
  const RootInfo* find(const IntVec& v) const;
};

/// All positive roots <= box: reflection closure (clipped to the box) of the
/// loop-free simple roots together with every fundamental-region vector in
/// the box. Real roots are exactly those with p = 0.
RootSet enumerate_roots(const FormsContext& ctx, const IntVec& box);

/// gcd of the entries is 1. Throws DomainError on the zero vector.
bool is_indivisible(const IntVec& a);

}  // namespace quiverlab

#endif
