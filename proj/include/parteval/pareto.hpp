#pragma once

#include <span>
#include <string>
#include <vector>

namespace parteval {

struct ScorePoint {
    std::string id;
    double x = 0.0;
    double y = 0.0;
};

/// Non-dominated subset under maximization of both coordinates. A point is
/// dominated when some other point is >= in both coordinates and > in at
/// least one; exact duplicates of a frontier point are all kept. Input order
/// is preserved in the output. Throws std::invalid_argument on NaN.
std::vector<ScorePoint> pareto_frontier(std::span<const ScorePoint> points);

enum class TwoFqMode {
    Convex,   // alpha * modularity + (1 - alpha) * mdensity (default)
    Product,  // alpha * modularity * (1 - alpha) * mdensity
};

/// Single-parameter combination of the two criteria; alpha in [0,1] weights
/// separation against density. Throws std::invalid_argument outside [0,1].
double two_fq(double modularity, double mdensity, double alpha,
              TwoFqMode mode = TwoFqMode::Convex);

struct EnvelopePoint {
    std::string id;
    double modularity = 0.0;
    double mdensity = 0.0;
};

struct AlphaInterval {
    std::string id;
    double lo = 0.0;
    double hi = 0.0;
};

/// Upper envelope of the lines f_i(alpha) = alpha*modularity_i +
/// (1-alpha)*mdensity_i over [0,1]: the subinterval where each input
/// maximizes the convex two_fq score among the tested set. Computed by exact
/// pairwise-intersection sweep; intervals shorter than 1e-12 are dropped,
/// ties at a midpoint go to the earliest input. The result tiles [0,1].
std::vector<AlphaInterval> alpha_envelope(std::span<const EnvelopePoint> points);

}  // namespace parteval
