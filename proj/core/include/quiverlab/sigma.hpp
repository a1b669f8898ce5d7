#ifndef QUIVERLAB_SIGMA_HPP
#define QUIVERLAB_SIGMA_HPP

#include <optional>

#include "quiverlab/forms.hpp"
#include "quiverlab/json_io.hpp"

namespace quiverlab {

/// A quiver with weights, a dimension vector and a search box (default: the
/// dimension vector itself). Membership in Sigma_lambda is certified within
/// the box only.
struct SigmaQuery {
  Quiver quiver;
  RatVec lambda;
  IntVec alpha;
  IntVec box;

  static SigmaQuery make(Quiver q, RatVec lambda, IntVec alpha,
                         std::optional<IntVec> box = {});
};

/// Representation type tau = (e_1,beta_1;...;e_u,beta_u): multiplicities of
/// the distinct simple summands of a semisimple representation. Pairs are
/// kept in canonical order (beta descending lexicographically, then
/// multiplicity descending).
struct RepType {
  std::vector<std::pair<Int, IntVec>> pairs;

  static RepType make(std::vector<std::pair<Int, IntVec>> pairs);

  IntVec total(int vertex_count) const;
  bool is_azumaya(const IntVec& alpha) const;

  friend auto operator<=>(const RepType&, const RepType&) = default;
};

/// The dimension vectors of simple representations for the given weights,
/// with memoized root and decomposition data. All queries are restricted to
/// the box of the SigmaQuery.
class SigmaContext {
public:
  explicit SigmaContext(SigmaQuery query);

  const SigmaQuery& query() const { return m_query; }
  const FormsContext& forms() const { return m_forms; }
  const RootSet& roots() const { return m_roots; }

  /// beta is a positive root with lambda.beta = 0 and no decomposition into
  /// two or more lambda-orthogonal positive roots of equal-or-larger total p.
  bool in_sigma(const IntVec& beta);

  /// All members of Sigma_lambda within the box, sorted.
  std::vector<IntVec> enumerate_sigma();

  /// Poset-minimality of query.alpha in Sigma_lambda. Throws DomainError
  /// when alpha itself is not a member.
  bool is_minimal();

  /// All representation types with total alpha, each beta_i in Sigma_lambda;
  /// a beta with p(beta) = 0 occurs in at most one pair.
  std::vector<RepType> enumerate_types();

private:
  // Largest achievable sum of p over decompositions of rest into
  // lambda-orthogonal positive roots indexed <= max_index; -1 when rest has
  // no such decomposition (p-sums are never negative, so -1 is a safe flag).
  std::optional<Int> best_p_sum(const IntVec& rest, std::size_t max_index);

  SigmaQuery m_query;
  FormsContext m_forms;
  RootSet m_roots;
  std::vector<IntVec> m_ortho_roots;  // lambda-orthogonal roots, sorted
  std::vector<Int> m_ortho_p;
  std::map<std::pair<IntVec, std::size_t>, std::optional<Int>> m_best_memo;
  std::map<IntVec, bool> m_sigma_memo;
};

/// Local (etale) model at a point of representation type tau: a symmetric
/// quiver stored as a double quiver whose base has p(beta_i) loops at the
/// i-th vertex and -T(beta_i,beta_j) arrows from vertex i to vertex j for
/// i < j, together with the multiplicity dimension vector (e_1,...,e_u).
struct LocalQuiverSetting {
  DoubleQuiver gamma;
  IntVec alpha_tau;
};

LocalQuiverSetting local_quiver(SigmaContext& ctx, const RepType& type);

struct Stratum {
  RepType type;
  Int dimension;  // sum of 2 p(beta_i) over the pairs
  bool smooth;    // true exactly for the type (1, alpha)
};

/// Outcome of the five-way equivalence: alpha is a minimal member of
/// Sigma_lambda iff the quotient is a coadjoint orbit iff it is smooth iff
/// the trace ring is Azumaya iff the algebra is alpha-smooth. The booleans
/// are all set from minimality; the strata list carries the per-type data.
struct DecisionReport {
  bool in_sigma = false;
  bool minimal = false;
  bool coadjoint_orbit = false;
  bool smooth_quotient = false;
  bool azumaya = false;
  bool alpha_smooth = false;
  std::optional<Int> dimension;  // 2 p(alpha) when in Sigma; max stratum dim
                                 // otherwise; empty when no types exist
  std::vector<Stratum> strata;   // sorted by dimension, largest first
  bool type_count_consistent = true;  // poset-minimality == single Azumaya type
};

/// Requires alpha != 0 and lambda.alpha = 0 (raises DomainError otherwise).
DecisionReport decide(SigmaContext& ctx);
DecisionReport decide(const SigmaQuery& query);

Json type_to_json(const Quiver& q, const RepType& type);
Json report_to_json(const Quiver& q, const DecisionReport& report);

}  // namespace quiverlab

#endif
