#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace symhorn {

// Non-empty vector of strictly positive, finite reals.
class PositiveVector {
public:
    // Throws DomainError when empty or when an entry is not > 0.
    explicit PositiveVector(std::vector<double> entries);
    PositiveVector(std::initializer_list<double> entries)
        : PositiveVector(std::vector<double>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    const std::vector<double>& values() const noexcept { return entries_; }
    operator std::span<const double>() const noexcept { return entries_; }

    double sum() const;

    bool operator==(const PositiveVector&) const = default;

private:
    std::vector<double> entries_;
};

struct MajorisationVerdict {
    bool holds = false;
    // Smallest 1-based k at which the partial-sum inequality fails; empty when holds.
    std::optional<std::size_t> first_violation_index;
    // Partial sums at the violating k, or at k = n when the relation holds.
    double lhs_partial_sum = 0.0;
    double rhs_partial_sum = 0.0;

    explicit operator bool() const noexcept { return holds; }
};

// Stable: ties keep their original relative order.
PositiveVector sort_descending(const PositiveVector& x);
PositiveVector sort_ascending(const PositiveVector& x);

// sum_{j<=k} x_j(desc) <= sum_{j<=k} y_j(desc) + slack for all k.
MajorisationVerdict is_weakly_submajorized(std::span<const double> x, std::span<const double> y, double slack = 0.0);

// sum_{j<=k} x_j(asc) >= sum_{j<=k} y_j(asc) - slack for all k.
MajorisationVerdict is_weakly_supermajorized(std::span<const double> x, std::span<const double> y, double slack = 0.0);

// Weak submajorisation plus |sum x - sum y| <= slack.
MajorisationVerdict is_majorized(std::span<const double> x, std::span<const double> y, double slack = 0.0);

// 1e-12 * max(1, sum |y|), the slack used when callers do not supply one.
double default_slack(std::span<const double> y);

// z_i = min(x_i, t) with sum z = sum y. Requires x weakly supermajorised by y
// (within default_slack); otherwise throws ConstraintError with the violating k.
// The result satisfies z <= x entrywise and z majorised by y.
PositiveVector waterfill_intermediate(const PositiveVector& x, const PositiveVector& y);

// Membership of x in the unbounded convex set {x : x weakly supermajorised by y}.
bool is_in_sigma(const PositiveVector& x, const PositiveVector& y);

}  // namespace symhorn
