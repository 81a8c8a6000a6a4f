#include "parteval/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace parteval {

std::vector<ScorePoint> pareto_frontier(std::span<const ScorePoint> points) {
    if (points.empty()) throw std::invalid_argument("pareto_frontier needs at least one point");
    for (const auto& pt : points)
        if (std::isnan(pt.x) || std::isnan(pt.y))
            throw std::invalid_argument("NaN coordinate in point '" + pt.id + "'");

    // Sweep in descending x. A point is dominated when a strictly-higher-x
    // point has y >= its own, or an equal-x point has strictly higher y.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].x > points[b].x;
    });

    std::vector<bool> dominated(points.size(), false);
    double best_y_above = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        double group_max_y = -std::numeric_limits<double>::infinity();
        while (j < order.size() && points[order[j]].x == points[order[i]].x) {
            group_max_y = std::max(group_max_y, points[order[j]].y);
            ++j;
        }
        for (std::size_t k = i; k < j; ++k) {
            const double y = points[order[k]].y;
            if (y <= best_y_above || y < group_max_y) dominated[order[k]] = true;
        }
        best_y_above = std::max(best_y_above, group_max_y);
        i = j;
    }

    std::vector<ScorePoint> frontier;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (!dominated[k]) frontier.push_back(points[k]);
    return frontier;
}

double two_fq(double modularity, double mdensity, double alpha, TwoFqMode mode) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("two_fq alpha must lie in [0,1]");
    if (mode == TwoFqMode::Product) return alpha * modularity * (1.0 - alpha) * mdensity;
    return alpha * modularity + (1.0 - alpha) * mdensity;
}

namespace {

constexpr double kMinIntervalLength = 1e-12;

double line_at(const EnvelopePoint& pt, double alpha) {
    return pt.mdensity + alpha * (pt.modularity - pt.mdensity);
}

}  // namespace

std::vector<AlphaInterval> alpha_envelope(std::span<const EnvelopePoint> points) {
    if (points.empty()) throw std::invalid_argument("alpha_envelope needs at least one point");

    // Candidate breakpoints: the interval ends plus every pairwise line
    // intersection falling inside (0,1).
    std::vector<double> breaks{0.0, 1.0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double slope_i = points[i].modularity - points[i].mdensity;
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double slope_j = points[j].modularity - points[j].mdensity;
            if (slope_i == slope_j) continue;  // parallel
            const double alpha = (points[j].mdensity - points[i].mdensity) / (slope_i - slope_j);
            if (alpha > 0.0 && alpha < 1.0) breaks.push_back(alpha);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<AlphaInterval> intervals;
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
        const double lo = breaks[b];
        const double hi = breaks[b + 1];
        if (hi - lo < kMinIntervalLength) continue;

        const double mid = 0.5 * (lo + hi);
        std::size_t winner = 0;
        double best = line_at(points[0], mid);
        for (std::size_t k = 1; k < points.size(); ++k) {
            const double value = line_at(points[k], mid);
            if (value > best) {
                best = value;
                winner = k;
            }
        }
        if (!intervals.empty() && intervals.back().id == points[winner].id)
            intervals.back().hi = hi;
        else
            intervals.push_back({points[winner].id, lo, hi});
    }

    // absorb any dropped slivers so the intervals tile [0,1] exactly
    if (!intervals.empty()) {
        intervals.front().lo = 0.0;
        intervals.back().hi = 1.0;
        for (std::size_t k = 0; k + 1 < intervals.size(); ++k)
            intervals[k + 1].lo = intervals[k].hi;
    }
    return intervals;
}

}  // namespace parteval
