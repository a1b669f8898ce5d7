#ifndef QUIVERLAB_NECKLACE_HPP
#define QUIVERLAB_NECKLACE_HPP

#include "quiverlab/paths.hpp"

namespace quiverlab {

/// Equivalence class of oriented cycles up to rotation, stored as the
/// lexicographically least rotation under the double-quiver arrow order.
/// Length-0 necklaces are the vertex idempotents.
class NecklaceWord {
public:
  static NecklaceWord vertex(int v);

  int length() const { return static_cast<int>(m_arrows.size()); }
  bool is_vertex() const { return m_arrows.empty(); }
  int base_vertex() const { return m_base_vertex; }
  const std::vector<int>& arrows() const { return m_arrows; }

  /// The canonical representative as a closed path.
  Path representative() const { return Path{m_base_vertex, m_arrows}; }

  friend auto operator<=>(const NecklaceWord& a, const NecklaceWord& b) {
    if (auto c = a.m_arrows.size() <=> b.m_arrows.size(); c != 0) return c;
    if (auto c = a.m_base_vertex <=> b.m_base_vertex; c != 0) return c;
    return a.m_arrows <=> b.m_arrows;
  }
  friend bool operator==(const NecklaceWord&, const NecklaceWord&) = default;

private:
  friend NecklaceWord canonicalize(const DoubleQuiver&, const Path&);
  int m_base_vertex = 0;
  std::vector<int> m_arrows;
};

/// Least-rotation form of a closed walk. Throws DomainError if the path is
/// not closed.
NecklaceWord canonicalize(const DoubleQuiver& dq, const Path& cycle);

/// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation_index(const std::vector<int>& word);

/// Rational linear combination of necklace words.
class LieElement {
public:
  LieElement() = default;
  static LieElement of(NecklaceWord w, Rat coefficient = Rat(1));

  void add(const NecklaceWord& w, const Rat& coefficient);
  bool is_zero() const { return m_terms.empty(); }
  const std::map<NecklaceWord, Rat>& terms() const { return m_terms; }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rat& scalar);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

private:
  std::map<NecklaceWord, Rat> m_terms;
};

/// Necklace Lie bracket. For every base arrow a, each occurrence of a in w1
/// is matched with each occurrence of a* in w2; both necklaces are opened by
/// removing the matched letters and the open ends are glued into one
/// necklace. Matches of a* in w1 with a in w2 enter with a minus sign.
LieElement bracket(const DoubleQuiver& dq, const NecklaceWord& w1, const NecklaceWord& w2);

/// Bilinear extension of the bracket.
LieElement bracket(const DoubleQuiver& dq, const LieElement& x, const LieElement& y);

/// Word syntax for the CLI: whitespace-separated arrow ids with a '*' suffix
/// for duals, written in product order like path monomials — the rightmost
/// letter is traversed first ("x x* v v*" reads v*, then v, then x*, then x).
/// Must be cyclically composable.
NecklaceWord parse_word(const DoubleQuiver& dq, std::string_view text);

/// Canonical display sequence (product order, least rotation).
std::vector<int> display_arrows(const NecklaceWord& w);

std::string to_string(const DoubleQuiver& dq, const NecklaceWord& w);
/// Terms joined with " + ", each as "<coefficient> (<word>)"; "0" when empty.
std::string to_string(const DoubleQuiver& dq, const LieElement& x);

}  // namespace quiverlab

#endif
