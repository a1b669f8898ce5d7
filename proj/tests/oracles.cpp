#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace quiverlab::testing {

std::vector<int> naive_least_rotation(const std::vector<int>& word) {
  if (word.empty()) return word;
  std::vector<int> best = word;
  std::vector<int> rot = word;
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

WordKey word_key(const DoubleQuiver& dq, int start_vertex, const std::vector<int>& arrows) {
  if (arrows.empty()) return {start_vertex, {}};
  std::vector<int> canon = naive_least_rotation(arrows);
  return {dq.tail(canon.front()), canon};
}

WordKey word_key(const DoubleQuiver& dq, const NecklaceWord& w) {
  return word_key(dq, w.base_vertex(), w.arrows());
}

BracketTable to_table(const DoubleQuiver& dq, const LieElement& x) {
  BracketTable table;
  for (const auto& [w, c] : x.terms()) table[word_key(dq, w)] += c;
  for (auto it = table.begin(); it != table.end();)
    it = it->second == 0 ? table.erase(it) : std::next(it);
  return table;
}

namespace {

// Removes position pos from the cyclic word and glues the remainder of w1
// with the remainder of w2 (each read in cyclic order after the removed
// letter), as one linear sequence.
std::vector<int> glue(const std::vector<int>& w1, std::size_t pos1, const std::vector<int>& w2,
                      std::size_t pos2) {
  std::vector<int> out;
  for (std::size_t s = 1; s < w1.size(); ++s) out.push_back(w1[(pos1 + s) % w1.size()]);
  for (std::size_t s = 1; s < w2.size(); ++s) out.push_back(w2[(pos2 + s) % w2.size()]);
  return out;
}

}  // namespace

BracketTable brute_force_bracket(const DoubleQuiver& dq, const NecklaceWord& n1,
                                 const NecklaceWord& n2) {
  BracketTable table;
  const std::vector<int>& w1 = n1.arrows();
  const std::vector<int>& w2 = n2.arrows();
  for (int a = 0; a < dq.base_arrow_count(); ++a) {
    int astar = dq.star(a);
    // occurrences of a in w1, a* in w2 with plus sign
    for (std::size_t i = 0; i < w1.size(); ++i) {
      if (w1[i] != a) continue;
      for (std::size_t j = 0; j < w2.size(); ++j) {
        if (w2[j] != astar) continue;
        table[word_key(dq, dq.tail(a), glue(w1, i, w2, j))] += 1;
      }
    }
    // occurrences of a* in w1, a in w2 with minus sign
    for (std::size_t i = 0; i < w1.size(); ++i) {
      if (w1[i] != astar) continue;
      for (std::size_t j = 0; j < w2.size(); ++j) {
        if (w2[j] != a) continue;
        table[word_key(dq, dq.tail(a), glue(w1, i, w2, j))] -= 1;
      }
    }
  }
  for (auto it = table.begin(); it != table.end();)
    it = it->second == 0 ? table.erase(it) : std::next(it);
  return table;
}

namespace {

void all_decompositions(const std::vector<IntVec>& parts, std::size_t from, const IntVec& rest,
                        std::vector<IntVec>& current, std::vector<std::vector<IntVec>>& out) {
  if (is_zero(rest)) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (!leq(parts[i], rest)) continue;
    current.push_back(parts[i]);
    all_decompositions(parts, i, rest - parts[i], current, out);
    current.pop_back();
  }
}

}  // namespace

bool sigma_membership_oracle(const FormsContext& forms, const RootSet& roots,
                             const RatVec& lambda, const IntVec& beta) {
  if (!roots.contains(beta)) return false;
  if (dot(lambda, beta) != 0) return false;

  std::vector<IntVec> parts;
  for (const auto& r : roots.roots)
    if (leq(r.vector, beta) && dot(lambda, r.vector) == 0) parts.push_back(r.vector);

  std::vector<std::vector<IntVec>> decompositions;
  std::vector<IntVec> current;
  all_decompositions(parts, 0, beta, current, decompositions);

  Int p_beta = forms.p(beta);
  for (const auto& d : decompositions) {
    if (d.size() < 2) continue;
    Int sum = 0;
    for (const auto& part : d) sum += forms.p(part);
    if (!(p_beta > sum)) return false;
  }
  return true;
}

namespace {

// All multisets of members (with repetition, by index) summing to rest.
void member_multisets(const std::vector<IntVec>& members, std::size_t from, const IntVec& rest,
                      std::vector<std::size_t>& current,
                      std::vector<std::vector<std::size_t>>& out) {
  if (is_zero(rest)) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < members.size(); ++i) {
    if (!leq(members[i], rest)) continue;
    current.push_back(i);
    member_multisets(members, i, rest - members[i], current, out);
    current.pop_back();
  }
}

// All partitions of n as nonincreasing positive parts.
void partitions(long n, long cap, std::vector<long>& current,
                std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (long part = std::min(n, cap); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RepType> brute_force_types(const FormsContext& forms,
                                       const std::vector<IntVec>& sigma_members,
                                       const IntVec& alpha) {
  std::vector<RepType> out;
  if (is_zero(alpha)) return out;

  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> current;
  member_multisets(sigma_members, 0, alpha, current, multisets);

  std::set<RepType> unique;
  for (const auto& ms : multisets) {
    // count each member's repetitions
    std::map<std::size_t, long> count;
    for (std::size_t idx : ms) ++count[idx];

    // For each member: group its copies into pair multiplicities. Members
    // with p = 0 have a unique simple, so all copies collapse into one pair.
    std::vector<std::vector<std::vector<long>>> choices;  // per member, list of groupings
    std::vector<std::size_t> member_ids;
    for (const auto& [idx, n] : count) {
      member_ids.push_back(idx);
      if (forms.p(sigma_members[idx]) == 0) {
        choices.push_back({{n}});
      } else {
        std::vector<std::vector<long>> parts;
        std::vector<long> cur;
        partitions(n, n, cur, parts);
        choices.push_back(std::move(parts));
      }
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      std::vector<std::pair<Int, IntVec>> pairs;
      for (std::size_t m = 0; m < choices.size(); ++m)
        for (long e : choices[m][pick[m]])
          pairs.emplace_back(Int(e), sigma_members[member_ids[m]]);
      unique.insert(RepType::make(std::move(pairs)));

      std::size_t m = 0;
      while (m < pick.size()) {
        if (++pick[m] < choices[m].size()) break;
        pick[m] = 0;
        ++m;
      }
      if (m == pick.size()) break;
    }
  }
  out.assign(unique.begin(), unique.end());
  return out;
}

int Rng::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(engine);
}

Quiver random_quiver(Rng& rng, int max_vertices, int max_arrows) {
  int k = rng.uniform(1, max_vertices);
  int l = rng.uniform(1, max_arrows);
  std::vector<std::string> vertices;
  for (int i = 0; i < k; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<std::array<std::string, 3>> arrows;
  for (int a = 0; a < l; ++a) {
    int t = rng.uniform(0, k - 1);
    int h = rng.uniform(0, k - 1);
    arrows.push_back({"a" + std::to_string(a), vertices[t], vertices[h]});
  }
  return Quiver::make(std::move(vertices), arrows);
}

NecklaceWord random_necklace(Rng& rng, const DoubleQuiver& dq, int max_len) {
  // Rejection-sampled random walk; falls back to walk + mirrored duals,
  // which is always closed.
  std::vector<std::vector<int>> outgoing(dq.vertex_count());
  for (int c = 0; c < dq.arrow_count(); ++c) outgoing[dq.tail(c)].push_back(c);

  for (int attempt = 0; attempt < 50; ++attempt) {
    int len = rng.uniform(1, max_len);
    int start = rng.uniform(0, dq.vertex_count() - 1);
    std::vector<int> walk;
    int at = start;
    bool dead = false;
    for (int s = 0; s < len; ++s) {
      if (outgoing[at].empty()) {
        dead = true;
        break;
      }
      int c = outgoing[at][rng.uniform(0, static_cast<int>(outgoing[at].size()) - 1)];
      walk.push_back(c);
      at = dq.head(c);
    }
    if (dead || at != start || walk.empty()) continue;
    return canonicalize(dq, Path::make(dq, std::move(walk)));
  }

  // Fallback: out-and-back path (w then its reversed duals).
  int half = std::max(1, max_len / 2);
  int start = rng.uniform(0, dq.vertex_count() - 1);
  std::vector<int> walk;
  int at = start;
  for (int s = 0; s < half; ++s) {
    if (outgoing[at].empty()) break;
    int c = outgoing[at][rng.uniform(0, static_cast<int>(outgoing[at].size()) - 1)];
    walk.push_back(c);
    at = dq.head(c);
  }
  if (walk.empty()) return NecklaceWord::vertex(start);
  std::vector<int> closed = walk;
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) closed.push_back(dq.star(*it));
  return canonicalize(dq, Path::make(dq, std::move(closed)));
}

Rat random_rational(Rng& rng) {
  Rat r(rng.uniform(-3, 3), rng.uniform(1, 3));
  r.canonicalize();
  return r;
}

std::vector<RatMatrix> random_exact_point(Rng& rng, const DoubleQuiver& dq, const IntVec& alpha) {
  std::vector<RatMatrix> mats;
  for (int c = 0; c < dq.arrow_count(); ++c) {
    long rows = to_long(alpha[dq.head(c)]);
    long cols = to_long(alpha[dq.tail(c)]);
    RatMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (long s = 0; s < cols; ++s) m(r, s) = random_rational(rng);
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<CorpusEntry> decision_corpus(std::uint64_t seed, int count, bool zero_weights) {
  Rng rng(seed);
  std::vector<CorpusEntry> corpus;
  while (static_cast<int>(corpus.size()) < count) {
    CorpusEntry entry;
    entry.quiver = random_quiver(rng, 3, 4);
    int k = entry.quiver.vertex_count();
    entry.alpha.assign(k, Int(0));
    for (int i = 0; i < k; ++i) entry.alpha[i] = rng.uniform(0, 2);
    if (is_zero(entry.alpha)) entry.alpha[rng.uniform(0, k - 1)] = 1;

    entry.lambda.assign(k, Rat(0));
    if (!zero_weights && rng.uniform(0, 1) == 1) {
      // Random weights made orthogonal to alpha by solving for the last
      // vertex with a nonzero dimension.
      int pivot = -1;
      for (int i = k - 1; i >= 0; --i)
        if (entry.alpha[i] != 0) {
          pivot = i;
          break;
        }
      Rat acc(0);
      for (int i = 0; i < k; ++i) {
        if (i == pivot) continue;
        entry.lambda[i] = random_rational(rng);
        acc += entry.lambda[i] * Rat(entry.alpha[i]);
      }
      entry.lambda[pivot] = -acc / Rat(entry.alpha[pivot]);
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

}  // namespace quiverlab::testing
