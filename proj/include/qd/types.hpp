#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace qd {

enum class Direction { minimize, maximize };

// Strictly-better comparison under an optimization direction. Equal values
// never improve, so incumbents win ties.
inline bool improves(Direction dir, double candidate, double incumbent) {
  return dir == Direction::minimize ? candidate < incumbent
                                    : candidate > incumbent;
}

inline double worst_value(Direction dir) {
  return dir == Direction::minimize
             ? std::numeric_limits<double>::infinity()
             : -std::numeric_limits<double>::infinity();
}

// Axis-aligned bounded box that behavior descriptors live in.
struct BehaviorSpace {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  BehaviorSpace(Eigen::VectorXd lo, Eigen::VectorXd hi)
      : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() == 0 || lower.size() != upper.size())
      throw std::invalid_argument(
          "BehaviorSpace: bounds must be non-empty and of equal dimension");
    for (Eigen::Index i = 0; i < lower.size(); ++i)
      if (!(lower[i] < upper[i]))
        throw std::invalid_argument(
            "BehaviorSpace: lower bound must be strictly below upper bound");
  }

  static BehaviorSpace unit(Eigen::Index dims) {
    return BehaviorSpace(Eigen::VectorXd::Zero(dims),
                         Eigen::VectorXd::Ones(dims));
  }

  Eigen::Index dims() const { return lower.size(); }
  double diagonal() const { return (upper - lower).norm(); }

  bool contains(const Eigen::Ref<const Eigen::VectorXd>& p,
                double slack = 0.0) const {
    if (p.size() != dims()) return false;
    return (p.array() >= lower.array() - slack).all() &&
           (p.array() <= upper.array() + slack).all();
  }
};

// Minkowski norm order. Orders below one are accepted: such "fractional"
// dissimilarities keep a useful near/far contrast in high dimension even
// though they violate the triangle inequality.
struct NormSpec {
  double order;

  explicit NormSpec(double p = 2.0) : order(p) {
    if (!(p > 0.0)) throw std::invalid_argument("NormSpec: order must be positive");
  }

  static NormSpec euclidean() { return NormSpec(2.0); }
  bool is_euclidean() const { return order == 2.0; }
};

}  // namespace qd
