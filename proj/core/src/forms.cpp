#include "quiverlab/forms.hpp"

#include <algorithm>
#include <set>

#include "quiverlab/errors.hpp"

namespace quiverlab {

FormsContext::FormsContext(Quiver q) : m_quiver(std::move(q)) {
  int k = m_quiver.vertex_count();
  m_euler.assign(k, std::vector<Int>(k, Int(0)));
  m_tits.assign(k, std::vector<Int>(k, Int(0)));
  m_loop_free.assign(k, true);
  m_neighbors.assign(k, {});

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m_euler[i][j] = Int(i == j ? 1 : 0) - Int(m_quiver.arrows_between(i, j));

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m_tits[i][j] = m_euler[i][j] + m_euler[j][i];

  std::vector<std::set<int>> nbr(k);
  for (const auto& a : m_quiver.arrows()) {
    if (a.tail == a.head) {
      m_loop_free[a.tail] = false;
    } else {
      nbr[a.tail].insert(a.head);
      nbr[a.head].insert(a.tail);
    }
  }
  for (int i = 0; i < k; ++i) m_neighbors[i].assign(nbr[i].begin(), nbr[i].end());
}

void FormsContext::check_length(const IntVec& a) const {
  if (static_cast<int>(a.size()) != vertex_count())
    throw DomainError("vector length " + std::to_string(a.size()) +
                      " does not match vertex count " + std::to_string(vertex_count()));
}

Int FormsContext::chi(const IntVec& a, const IntVec& b) const {
  check_length(a);
  check_length(b);
  Int s = 0;
  for (int i = 0; i < vertex_count(); ++i) {
    if (a[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < vertex_count(); ++j) row += m_euler[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

Int FormsContext::tits_form(const IntVec& a, const IntVec& b) const {
  return chi(a, b) + chi(b, a);
}

Int FormsContext::tits_pairing(const IntVec& a, int i) const {
  check_length(a);
  Int s = 0;
  for (int j = 0; j < vertex_count(); ++j) s += a[j] * m_tits[j][i];
  return s;
}

Int FormsContext::p(const IntVec& a) const { return Int(1) - chi(a, a); }

IntVec FormsContext::reflect(int i, const IntVec& a) const {
  check_length(a);
  if (!loop_free(i))
    throw DomainError("reflection at vertex '" + m_quiver.vertex_id(i) + "' which has loops");
  IntVec r = a;
  r[i] -= tits_pairing(a, i);
  return r;
}

bool FormsContext::connected_support(const IntVec& a) const {
  check_length(a);
  int start = -1, support = 0;
  for (int i = 0; i < vertex_count(); ++i)
    if (a[i] != 0) {
      if (start < 0) start = i;
      ++support;
    }
  if (support <= 1) return support == 1;

  std::vector<bool> seen(vertex_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : m_neighbors[v]) {
      if (a[w] != 0 && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == support;
}

bool RootSet::contains(const IntVec& v) const { return find(v) != nullptr; }

const RootInfo* RootSet::find(const IntVec& v) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), v,
                             [](const RootInfo& r, const IntVec& key) { return r.vector < key; });
  if (it != roots.end() && it->vector == v) return &*it;
  return nullptr;
}

namespace {

// Fundamental region: nonzero, nonnegative, connected support, and
// T(a, e_j) <= 0 at every loop-free vertex j.
bool in_fundamental_region(const FormsContext& ctx, const IntVec& a) {
  if (is_zero(a)) return false;
  for (int j = 0; j < ctx.vertex_count(); ++j)
    if (ctx.loop_free(j) && ctx.tits_pairing(a, j) > 0) return false;
  return ctx.connected_support(a);
}

}  // namespace

RootSet enumerate_roots(const FormsContext& ctx, const IntVec& box) {
  if (static_cast<int>(box.size()) != ctx.vertex_count())
    throw DomainError("box length does not match vertex count");
  if (!all_nonnegative(box)) throw DomainError("box entries must be nonnegative");

  std::set<IntVec> found;
  std::vector<IntVec> worklist;
  auto push = [&](const IntVec& v) {
    if (found.insert(v).second) worklist.push_back(v);
  };

  int k = ctx.vertex_count();

  // Simple-root seeds (both kinds), clipped to the box.
  for (int i = 0; i < k; ++i) {
    if (box[i] < 1) continue;
    IntVec e(k, Int(0));
    e[i] = 1;
    push(e);
  }

  // Every fundamental-region vector inside the box.
  IntVec v(k, Int(0));
  for (;;) {
    if (in_fundamental_region(ctx, v)) push(v);
    int i = 0;
    while (i < k) {
      if (v[i] < box[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
      ++i;
    }
    if (i == k) break;
  }

  // Reflection closure at loop-free vertices, discarding images that leave
  // the box (or become negative).
  while (!worklist.empty()) {
    IntVec a = std::move(worklist.back());
    worklist.pop_back();
    for (int i = 0; i < k; ++i) {
      if (!ctx.loop_free(i)) continue;
      IntVec b = ctx.reflect(i, a);
      if (all_nonnegative(b) && leq(b, box) && !is_zero(b)) push(b);
    }
  }

  RootSet out;
  out.box = box;
  out.roots.reserve(found.size());
  for (const auto& r : found) {
    Int pr = ctx.p(r);
    out.roots.push_back(RootInfo{r, pr == 0 ? RootKind::Real : RootKind::Imaginary, pr,
                                 is_indivisible(r)});
  }
  return out;
}

bool is_indivisible(const IntVec& a) {
  if (is_zero(a)) throw DomainError("indivisibility is undefined for the zero vector");
  return gcd(a) == 1;
}

}  // namespace quiverlab
