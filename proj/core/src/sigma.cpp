#include "quiverlab/sigma.hpp"

#include <algorithm>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

IntVec scaled(const IntVec& v, const Int& e) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * e;
  return r;
}

// Largest e >= 0 with e*beta <= rest (beta nonzero, nonnegative).
Int max_multiplicity(const IntVec& beta, const IntVec& rest) {
  Int e = -1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), rest[i].get_mpz_t(), beta[i].get_mpz_t());
    if (e < 0 || q < e) e = q;
  }
  return e < 0 ? Int(0) : e;
}

}  // namespace

SigmaQuery SigmaQuery::make(Quiver q, RatVec lambda, IntVec alpha, std::optional<IntVec> box) {
  check_dim_vector(q, alpha);
  check_weights(q, lambda);
  SigmaQuery query;
  query.box = box ? std::move(*box) : alpha;
  check_dim_vector(q, query.box);
  query.quiver = std::move(q);
  query.lambda = std::move(lambda);
  query.alpha = std::move(alpha);
  return query;
}

RepType RepType::make(std::vector<std::pair<Int, IntVec>> pairs) {
  for (const auto& [e, beta] : pairs) {
    if (e < 1) throw DomainError("representation type multiplicities must be positive");
    if (is_zero(beta)) throw DomainError("representation type parts must be nonzero");
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  RepType t;
  t.pairs = std::move(pairs);
  return t;
}

IntVec RepType::total(int vertex_count) const {
  IntVec sum(vertex_count, Int(0));
  for (const auto& [e, beta] : pairs) sum = sum + scaled(beta, e);
  return sum;
}

bool RepType::is_azumaya(const IntVec& alpha) const {
  return pairs.size() == 1 && pairs[0].first == 1 && pairs[0].second == alpha;
}

SigmaContext::SigmaContext(SigmaQuery query)
    : m_query(std::move(query)),
      m_forms(m_query.quiver),
      m_roots(enumerate_roots(m_forms, m_query.box)) {
  for (const auto& r : m_roots.roots) {
    if (dot(m_query.lambda, r.vector) == 0) {
      m_ortho_roots.push_back(r.vector);
      m_ortho_p.push_back(r.p);
    }
  }
}

std::optional<Int> SigmaContext::best_p_sum(const IntVec& rest, std::size_t max_index) {
  if (is_zero(rest)) return Int(0);
  auto key = std::make_pair(rest, max_index);
  if (auto it = m_best_memo.find(key); it != m_best_memo.end()) return it->second;

  std::optional<Int> best;
  for (std::size_t i = 0; i < max_index; ++i) {
    if (!leq(m_ortho_roots[i], rest)) continue;
    auto tail = best_p_sum(rest - m_ortho_roots[i], i + 1);
    if (!tail) continue;
    Int candidate = m_ortho_p[i] + *tail;
    if (!best || candidate > *best) best = candidate;
  }
  m_best_memo.emplace(key, best);
  return best;
}

bool SigmaContext::in_sigma(const IntVec& beta) {
  if (static_cast<int>(beta.size()) != m_forms.vertex_count())
    throw DomainError("vector length does not match vertex count");
  if (!leq(beta, m_query.box))
    throw DomainError("vector " + format_vector(beta) + " exceeds the search box " +
                      format_vector(m_query.box));
  if (auto it = m_sigma_memo.find(beta); it != m_sigma_memo.end()) return it->second;

  bool result = false;
  if (m_roots.contains(beta) && dot(m_query.lambda, beta) == 0) {
    // Best p-sum over proper decompositions into >= 2 lambda-orthogonal
    // positive roots; membership requires beating every one of them.
    std::optional<Int> best;
    for (std::size_t i = 0; i < m_ortho_roots.size(); ++i) {
      if (m_ortho_roots[i] == beta || !leq(m_ortho_roots[i], beta)) continue;
      auto tail = best_p_sum(beta - m_ortho_roots[i], i + 1);
      if (!tail) continue;
      Int candidate = m_ortho_p[i] + *tail;
      if (!best || candidate > *best) best = candidate;
    }
    result = !best || m_forms.p(beta) > *best;
  }
  m_sigma_memo.emplace(beta, result);
  return result;
}

std::vector<IntVec> SigmaContext::enumerate_sigma() {
  std::vector<IntVec> out;
  for (const auto& r : m_roots.roots)
    if (in_sigma(r.vector)) out.push_back(r.vector);
  return out;  // roots are sorted already
}

bool SigmaContext::is_minimal() {
  if (!in_sigma(m_query.alpha))
    throw DomainError("alpha " + format_vector(m_query.alpha) + " is not in Sigma_lambda");
  for (const auto& r : m_roots.roots) {
    if (r.vector == m_query.alpha || !leq(r.vector, m_query.alpha)) continue;
    if (in_sigma(r.vector)) return false;
  }
  return true;
}

std::vector<RepType> SigmaContext::enumerate_types() {
  std::vector<IntVec> members;
  for (const auto& beta : enumerate_sigma())
    if (leq(beta, m_query.alpha)) members.push_back(beta);

  std::vector<RepType> out;
  if (is_zero(m_query.alpha)) return out;

  std::vector<std::pair<Int, IntVec>> current;

  // Enumerates multiplicity multisets member by member. A member with
  // p = 0 supports a single simple, hence at most one pair; a member with
  // p >= 1 supports infinitely many, so several pairs with nonincreasing
  // multiplicities may share it.
  auto rec = [&](auto&& self, std::size_t idx, const IntVec& remaining) -> void {
    if (is_zero(remaining)) {
      out.push_back(RepType::make(current));
      return;
    }
    if (idx == members.size()) return;
    const IntVec& beta = members[idx];

    self(self, idx + 1, remaining);  // beta unused

    Int cap = max_multiplicity(beta, remaining);
    if (cap < 1) return;

    if (m_forms.p(beta) == 0) {
      for (Int e = 1; e <= cap; ++e) {
        current.emplace_back(e, beta);
        self(self, idx + 1, remaining - scaled(beta, e));
        current.pop_back();
      }
    } else {
      auto chain = [&](auto&& chain_self, const IntVec& rest, const Int& max_e) -> void {
        self(self, idx + 1, rest);  // stop adding pairs for beta
        Int bound = std::min(max_e, max_multiplicity(beta, rest));
        for (Int e = 1; e <= bound; ++e) {
          current.emplace_back(e, beta);
          chain_self(chain_self, rest - scaled(beta, e), e);
          current.pop_back();
        }
      };
      for (Int e = 1; e <= cap; ++e) {
        current.emplace_back(e, beta);
        chain(chain, remaining - scaled(beta, e), e);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, m_query.alpha);

  std::sort(out.begin(), out.end());
  return out;
}

LocalQuiverSetting local_quiver(SigmaContext& ctx, const RepType& type) {
  const auto& alpha = ctx.query().alpha;
  int k = ctx.forms().vertex_count();

  if (type.pairs.empty()) throw DomainError("invalid representation type: no parts");
  if (type.total(k) != alpha)
    throw DomainError("invalid representation type: parts do not sum to alpha");
  std::map<IntVec, int> real_uses;
  for (const auto& [e, beta] : type.pairs) {
    if (!ctx.in_sigma(beta))
      throw DomainError("invalid representation type: " + format_vector(beta) +
                        " is not in Sigma_lambda");
    if (ctx.forms().p(beta) == 0 && ++real_uses[beta] > 1)
      throw DomainError("invalid representation type: real root " + format_vector(beta) +
                        " occurs in more than one pair");
  }

  int u = static_cast<int>(type.pairs.size());
  std::vector<std::string> vertices;
  vertices.reserve(u);
  for (int i = 1; i <= u; ++i) vertices.push_back("s" + std::to_string(i));

  std::vector<std::array<std::string, 3>> arrows;
  for (int i = 0; i < u; ++i) {
    long loops = to_long(ctx.forms().p(type.pairs[i].second));
    for (long n = 1; n <= loops; ++n)
      arrows.push_back({vertices[i] + "_l" + std::to_string(n), vertices[i], vertices[i]});
  }
  for (int i = 0; i < u; ++i) {
    for (int j = i + 1; j < u; ++j) {
      Int t = ctx.forms().tits_form(type.pairs[i].second, type.pairs[j].second);
      if (t > 0)
        throw DomainError("invalid representation type: positive Tits pairing between parts");
      long count = to_long(-t);
      for (long n = 1; n <= count; ++n)
        arrows.push_back({vertices[i] + "_" + vertices[j] + "_a" + std::to_string(n),
                          vertices[i], vertices[j]});
    }
  }

  LocalQuiverSetting setting;
  setting.gamma = double_quiver(Quiver::make(std::move(vertices), arrows));
  setting.alpha_tau.reserve(u);
  for (const auto& [e, beta] : type.pairs) setting.alpha_tau.push_back(e);
  return setting;
}

DecisionReport decide(SigmaContext& ctx) {
  const auto& q = ctx.query();
  if (is_zero(q.alpha)) throw DomainError("alpha must be nonzero");
  if (dot(q.lambda, q.alpha) != 0) throw DomainError("lambda·alpha != 0");
  if (!leq(q.alpha, q.box)) throw DomainError("alpha exceeds the search box");

  DecisionReport report;
  report.in_sigma = ctx.in_sigma(q.alpha);
  report.minimal = report.in_sigma && ctx.is_minimal();
  report.coadjoint_orbit = report.minimal;
  report.smooth_quotient = report.minimal;
  report.azumaya = report.minimal;
  report.alpha_smooth = report.minimal;

  for (const auto& type : ctx.enumerate_types()) {
    Int dim = 0;
    for (const auto& [e, beta] : type.pairs) dim += 2 * ctx.forms().p(beta);
    report.strata.push_back(Stratum{type, dim, type.is_azumaya(q.alpha)});
  }
  std::sort(report.strata.begin(), report.strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.type < b.type;
  });

  if (report.in_sigma)
    report.dimension = 2 * ctx.forms().p(q.alpha);
  else if (!report.strata.empty())
    report.dimension = report.strata.front().dimension;

  bool azumaya_only = report.strata.size() == 1 && report.strata.front().smooth;
  report.type_count_consistent = (report.minimal == azumaya_only);
  return report;
}

DecisionReport decide(const SigmaQuery& query) {
  SigmaContext ctx(query);
  return decide(ctx);
}

Json type_to_json(const Quiver& q, const RepType& type) {
  Json arr = Json::array();
  for (const auto& [e, beta] : type.pairs) {
    Json pair = Json::object();
    pair["multiplicity"] = to_long(e);
    pair["beta"] = vec_to_json(q, beta);
    arr.push_back(std::move(pair));
  }
  return arr;
}

Json report_to_json(const Quiver& q, const DecisionReport& report) {
  Json doc = Json::object();
  doc["inSigma"] = report.in_sigma;
  doc["minimal"] = report.minimal;
  doc["coadjointOrbit"] = report.coadjoint_orbit;
  doc["smoothQuotient"] = report.smooth_quotient;
  doc["azumaya"] = report.azumaya;
  doc["alphaSmooth"] = report.alpha_smooth;
  if (report.dimension)
    doc["dimension"] = to_long(*report.dimension);
  else
    doc["dimension"] = nullptr;
  Json strata = Json::array();
  for (const auto& s : report.strata) {
    Json obj = Json::object();
    obj["type"] = type_to_json(q, s.type);
    obj["dimension"] = to_long(s.dimension);
    obj["smooth"] = s.smooth;
    strata.push_back(std::move(obj));
  }
  doc["strata"] = std::move(strata);
  return doc;
}

}  // namespace quiverlab
