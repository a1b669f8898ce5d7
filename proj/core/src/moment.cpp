#include "quiverlab/moment.hpp"

#include <Eigen/SVD>
#include <random>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

long block_rows(const DoubleQuiver& dq, const IntVec& alpha, int c) {
  return to_long(alpha[dq.head(c)]);
}
long block_cols(const DoubleQuiver& dq, const IntVec& alpha, int c) {
  return to_long(alpha[dq.tail(c)]);
}

long square_dimension(const IntVec& alpha) {
  long n = 0;
  for (const auto& a : alpha) {
    long d = to_long(a);
    n += d * d;
  }
  return n;
}

// Flattening conventions everywhere below: per-vertex blocks row-major,
// vertices in order; per-arrow matrices row-major, arrows in double-quiver
// order.

std::vector<CMat> lambda_blocks(const IntVec& alpha, const RatVec& lambda) {
  std::vector<CMat> blocks;
  blocks.reserve(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    long d = to_long(alpha[i]);
    blocks.push_back(CMat::Identity(d, d) * Complex(lambda[i].get_d(), 0.0));
  }
  return blocks;
}

Eigen::VectorXcd residual_vector(const DoubleQuiver& dq, const IntVec& alpha,
                                 const std::vector<CMat>& V, const std::vector<CMat>& target) {
  std::vector<CMat> m = moment_blocks(dq, alpha, V);
  Eigen::VectorXcd f(square_dimension(alpha));
  long idx = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    CMat diff = m[i] - target[i];
    for (long r = 0; r < diff.rows(); ++r)
      for (long c = 0; c < diff.cols(); ++c) f(idx++) = diff(r, c);
  }
  return f;
}

template <class Mat>
std::vector<Mat> zero_point(const DoubleQuiver& dq, const IntVec& alpha) {
  std::vector<Mat> mats;
  mats.reserve(dq.arrow_count());
  for (int c = 0; c < dq.arrow_count(); ++c)
    mats.push_back(Mat::Zero(block_rows(dq, alpha, c), block_cols(dq, alpha, c)));
  return mats;
}

// One column per coordinate of the representation space; rows run over the
// flattened per-vertex blocks.
template <class Mat>
Mat build_jacobian(const DoubleQuiver& dq, const IntVec& alpha, const std::vector<Mat>& V) {
  long rows = square_dimension(alpha);
  long cols = ambient_dimension(dq, alpha);
  Mat J = Mat::Zero(rows, cols);
  std::vector<Mat> X = zero_point<Mat>(dq, alpha);
  long col = 0;
  for (int c = 0; c < dq.arrow_count(); ++c) {
    for (long r = 0; r < X[c].rows(); ++r) {
      for (long s = 0; s < X[c].cols(); ++s) {
        X[c](r, s) = 1;
        std::vector<Mat> d = moment_differential(dq, alpha, V, X);
        X[c](r, s) = 0;
        long row = 0;
        for (const auto& b : d)
          for (long br = 0; br < b.rows(); ++br)
            for (long bc = 0; bc < b.cols(); ++bc) J(row++, col) = b(br, bc);
        ++col;
      }
    }
  }
  return J;
}

// Intertwiner system: rows over equations X_head V_c - V_c X_tail = 0 for
// every double arrow, columns over the entries of the X_i.
template <class Mat>
Mat build_endomorphism_system(const DoubleQuiver& dq, const IntVec& alpha,
                              const std::vector<Mat>& V) {
  long rows = ambient_dimension(dq, alpha);
  long cols = square_dimension(alpha);
  Mat M = Mat::Zero(rows, cols);

  std::vector<Mat> X;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    long d = to_long(alpha[i]);
    X.push_back(Mat::Zero(d, d));
  }
  long col = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (long r = 0; r < X[i].rows(); ++r) {
      for (long s = 0; s < X[i].cols(); ++s) {
        X[i](r, s) = 1;
        long row = 0;
        for (int c = 0; c < dq.arrow_count(); ++c) {
          Mat eq = X[dq.head(c)] * V[c] - V[c] * X[dq.tail(c)];
          for (long er = 0; er < eq.rows(); ++er)
            for (long ec = 0; ec < eq.cols(); ++ec) M(row++, col) = eq(er, ec);
        }
        X[i](r, s) = 0;
        ++col;
      }
    }
  }
  return M;
}

long svd_rank(const CMat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  double largest = sv.size() > 0 ? sv(0) : 0.0;
  double threshold = tol * std::max(1.0, largest);
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return rank;
}

}  // namespace

RepPoint RepPoint::exact_zeros(const DoubleQuiver& dq, const IntVec& alpha) {
  return RepPoint{zero_point<RatMatrix>(dq, alpha)};
}

RepPoint RepPoint::floating_zeros(const DoubleQuiver& dq, const IntVec& alpha) {
  return RepPoint{zero_point<CMat>(dq, alpha)};
}

void check_shapes(const DoubleQuiver& dq, const IntVec& alpha, const RepPoint& point) {
  check_dim_vector(dq.base(), alpha);
  auto check = [&](const auto& mats) {
    if (static_cast<int>(mats.size()) != dq.arrow_count())
      throw DomainError("representation point must carry one matrix per double arrow");
    for (int c = 0; c < dq.arrow_count(); ++c) {
      if (mats[c].rows() != block_rows(dq, alpha, c) || mats[c].cols() != block_cols(dq, alpha, c))
        throw DomainError("matrix for arrow '" + dq.arrow_id(c) + "' has shape " +
                          std::to_string(mats[c].rows()) + "x" + std::to_string(mats[c].cols()) +
                          ", expected " + std::to_string(block_rows(dq, alpha, c)) + "x" +
                          std::to_string(block_cols(dq, alpha, c)));
    }
  };
  std::visit(check, point.matrices);
}

long ambient_dimension(const DoubleQuiver& dq, const IntVec& alpha) {
  long n = 0;
  for (int c = 0; c < dq.arrow_count(); ++c) n += block_rows(dq, alpha, c) * block_cols(dq, alpha, c);
  return n;
}

MomentValue moment(const DoubleQuiver& dq, const IntVec& alpha, const RepPoint& point) {
  check_shapes(dq, alpha, point);
  if (point.exact()) return MomentValue{moment_blocks(dq, alpha, point.exact_mats())};
  return MomentValue{moment_blocks(dq, alpha, point.floating_mats())};
}

std::variant<RatMatrix, CMat> evaluate(const DoubleQuiver& dq, const IntVec& alpha,
                                       const PathElement& element, const RepPoint& point) {
  check_shapes(dq, alpha, point);
  if (point.exact()) return evaluate_element(dq, alpha, element, point.exact_mats());
  return evaluate_element(dq, alpha, element, point.floating_mats());
}

long jacobian_rank(const DoubleQuiver& dq, const IntVec& alpha, const RepPoint& point,
                   double tol) {
  check_shapes(dq, alpha, point);
  if (point.exact()) return build_jacobian(dq, alpha, point.exact_mats()).rank();
  return svd_rank(build_jacobian(dq, alpha, point.floating_mats()), tol);
}

long endomorphism_dimension(const DoubleQuiver& dq, const IntVec& alpha, const RepPoint& point,
                            double tol) {
  check_shapes(dq, alpha, point);
  long cols = square_dimension(alpha);
  long rank = 0;
  if (point.exact())
    rank = build_endomorphism_system(dq, alpha, point.exact_mats()).rank();
  else
    rank = svd_rank(build_endomorphism_system(dq, alpha, point.floating_mats()), tol);
  return cols - rank;
}

NewtonOutcome newton_sample(const DoubleQuiver& dq, const IntVec& alpha, const RatVec& lambda,
                            std::uint64_t seed, int budget, double target) {
  check_dim_vector(dq.base(), alpha);
  check_weights(dq.base(), lambda);
  if (dot(lambda, alpha) != 0) throw DomainError("lambda·alpha != 0");

  std::vector<CMat> lam = lambda_blocks(alpha, lambda);
  const long ambient = ambient_dimension(dq, alpha);
  const int max_iterations = 100;

  NewtonOutcome best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < std::max(budget, 1); ++restart) {
    std::vector<CMat> V = zero_point<CMat>(dq, alpha);
    if (restart > 0) {
      // Mix the restart index into the stream so every restart is
      // reproducible in isolation.
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(restart)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (auto& m : V)
        for (long r = 0; r < m.rows(); ++r)
          for (long c = 0; c < m.cols(); ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    }

    double res = residual_vector(dq, alpha, V, lam).norm();
    int iter = 0;
    for (; iter < max_iterations && res > target; ++iter) {
      if (ambient == 0) break;  // nothing to move
      CMat J = build_jacobian(dq, alpha, V);
      Eigen::VectorXcd f = residual_vector(dq, alpha, V, lam);
      Eigen::JacobiSVD<CMat> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
      Eigen::VectorXcd step = svd.solve(-f);

      double t = 1.0;
      bool accepted = false;
      while (t > 1e-12) {
        std::vector<CMat> W = V;
        long idx = 0;
        for (auto& m : W)
          for (long r = 0; r < m.rows(); ++r)
            for (long c = 0; c < m.cols(); ++c) m(r, c) += t * step(idx++);
        double new_res = residual_vector(dq, alpha, W, lam).norm();
        if (new_res < res) {
          V = std::move(W);
          res = new_res;
          accepted = true;
          break;
        }
        t /= 2;
      }
      if (!accepted) break;  // stalled; try the next restart
    }

    if (res < best.residual) {
      best.residual = res;
      best.point = V;
      best.iterations = iter;
    }
    best.restarts_used = restart + 1;
    if (res <= target) {
      best.converged = true;
      best.point = std::move(V);
      best.residual = res;
      best.iterations = iter;
      break;
    }
  }
  return best;
}

LabReport verify(const SigmaQuery& query, std::uint64_t seed, int trials, double tol) {
  if (dot(query.lambda, query.alpha) != 0) throw DomainError("lambda·alpha != 0");

  DoubleQuiver dq = double_quiver(query.quiver);
  SigmaContext ctx(query);
  bool in_sigma = ctx.in_sigma(query.alpha);
  bool minimal = in_sigma && ctx.is_minimal();

  LabReport report;
  report.ambient_dimension = ambient_dimension(dq, query.alpha);
  report.expected_rank = square_dimension(query.alpha) - 1;

  NewtonOutcome outcome = newton_sample(dq, query.alpha, query.lambda, seed, trials, tol);
  report.converged = outcome.converged;
  report.residual = outcome.residual;
  report.restarts_used = outcome.restarts_used;
  if (!outcome.converged) {
    report.verdict_check = "n/a";
    return report;
  }

  RepPoint point{outcome.point};
  report.jacobian_rank = jacobian_rank(dq, query.alpha, point, tol);
  report.fiber_dimension = report.ambient_dimension - *report.jacobian_rank;
  report.endomorphism_dimension = endomorphism_dimension(dq, query.alpha, point, tol);
  report.simple = (*report.endomorphism_dimension == 1);
  report.quotient_estimate = *report.fiber_dimension - report.expected_rank;

  if (in_sigma && minimal) {
    bool ok = *report.jacobian_rank == report.expected_rank &&
              *report.quotient_estimate == to_long(2 * ctx.forms().p(query.alpha));
    report.verdict_check = ok ? "confirmed" : "mismatch";
  } else {
    report.verdict_check = "n/a";
  }
  return report;
}

Json lab_to_json(const LabReport& report) {
  Json doc = Json::object();
  doc["converged"] = report.converged;
  doc["residual"] = report.residual;
  doc["restartsUsed"] = report.restarts_used;
  doc["ambientDimension"] = report.ambient_dimension;
  doc["expectedRank"] = report.expected_rank;
  auto put = [&doc](const char* key, const auto& opt) {
    if (opt)
      doc[key] = *opt;
    else
      doc[key] = nullptr;
  };
  put("jacobianRank", report.jacobian_rank);
  put("fiberDimension", report.fiber_dimension);
  put("endomorphismDimension", report.endomorphism_dimension);
  put("simple", report.simple);
  put("quotientDimensionEstimate", report.quotient_estimate);
  doc["verdictCheck"] = report.verdict_check;
  return doc;
}

}  // namespace quiverlab
