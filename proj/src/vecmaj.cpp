#include "symhorn/vecmaj.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symhorn/error.hpp"

namespace symhorn {

PositiveVector::PositiveVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("positive vector must have at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!(entries_[i] > 0.0) || !std::isfinite(entries_[i])) {
            throw DomainError("entry " + std::to_string(i) + " is not a positive finite number");
        }
    }
}

double PositiveVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0.0); }

namespace {

std::vector<double> sorted(std::span<const double> v, bool descending) {
    std::vector<double> out(v.begin(), v.end());
    if (descending)
        std::stable_sort(out.begin(), out.end(), std::greater<>());
    else
        std::stable_sort(out.begin(), out.end());
    return out;
}

void require_same_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DimensionError("vector lengths differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
}

// Walks partial sums of the sorted vectors; `ok` decides each k.
template <typename Cmp>
MajorisationVerdict partial_sum_verdict(std::span<const double> x, std::span<const double> y, bool descending,
                                        Cmp ok) {
    require_same_length(x, y);
    const std::vector<double> xs = sorted(x, descending);
    const std::vector<double> ys = sorted(y, descending);
    MajorisationVerdict v;
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        if (!ok(sx, sy)) {
            v.holds = false;
            v.first_violation_index = k + 1;
            v.lhs_partial_sum = sx;
            v.rhs_partial_sum = sy;
            return v;
        }
    }
    v.holds = true;
    v.lhs_partial_sum = sx;
    v.rhs_partial_sum = sy;
    return v;
}

void require_slack(double slack) {
    if (!(slack >= 0.0)) throw DomainError("slack must be non-negative");
}

}  // namespace

PositiveVector sort_descending(const PositiveVector& x) { return PositiveVector(sorted(x, true)); }
PositiveVector sort_ascending(const PositiveVector& x) { return PositiveVector(sorted(x, false)); }

MajorisationVerdict is_weakly_submajorized(std::span<const double> x, std::span<const double> y, double slack) {
    require_slack(slack);
    return partial_sum_verdict(x, y, true, [slack](double sx, double sy) { return sx <= sy + slack; });
}

MajorisationVerdict is_weakly_supermajorized(std::span<const double> x, std::span<const double> y, double slack) {
    require_slack(slack);
    return partial_sum_verdict(x, y, false, [slack](double sx, double sy) { return sx >= sy - slack; });
}

MajorisationVerdict is_majorized(std::span<const double> x, std::span<const double> y, double slack) {
    MajorisationVerdict v = is_weakly_submajorized(x, y, slack);
    if (!v.holds) return v;
    // v now carries the totals
    if (std::abs(v.lhs_partial_sum - v.rhs_partial_sum) > slack) {
        v.holds = false;
        v.first_violation_index = x.size();
    }
    return v;
}

double default_slack(std::span<const double> y) {
    double s = 0.0;
    for (double v : y) s += std::abs(v);
    return 1e-12 * std::max(1.0, s);
}

PositiveVector waterfill_intermediate(const PositiveVector& x, const PositiveVector& y) {
    const MajorisationVerdict pre = is_weakly_supermajorized(x, y, default_slack(y));
    if (!pre.holds) {
        throw ConstraintError("x is not weakly supermajorised by y: partial sum " +
                                  std::to_string(pre.lhs_partial_sum) + " < " + std::to_string(pre.rhs_partial_sum) +
                                  " at k=" + std::to_string(*pre.first_violation_index),
                              *pre.first_violation_index);
    }

    const double target = y.sum();
    // equal totals within rounding: x itself is already majorised by y
    if (x.sum() - target <= default_slack(y)) return x;

    const std::vector<double> xs = sorted(x, false);
    const std::size_t n = xs.size();

    // On [xs[k-1], xs[k]] the clamped sum is prefix + (n - k) t; the first
    // segment whose solution does not exceed xs[k] holds the level.
    double level = xs.back();
    bool clamped = false;
    double prefix = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (target - prefix) / static_cast<double>(n - k);
        if (t < xs[k]) {
            level = t;
            clamped = true;
            break;
        }
        prefix += xs[k];
    }

    std::vector<double> z(x.begin(), x.end());
    if (clamped) {
        for (double& v : z) v = std::min(v, level);
    }
    return PositiveVector(std::move(z));
}

bool is_in_sigma(const PositiveVector& x, const PositiveVector& y) {
    return is_weakly_supermajorized(x, y, default_slack(y)).holds;
}

}  // namespace symhorn
