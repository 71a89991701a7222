// Exact measure computations on finite unions of closed real intervals:
// canonical disjoint unions, union length, piecewise-constant multiplicity
// profiles, their moments and superlevel sets, and the central
// Hardy-Littlewood maximal function of a profile.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace favard {

struct Interval {
    double left = 0.0;
    double right = 0.0;

    double length() const { return right - left; }
    bool contains(double x) const { return left <= x && x <= right; }
};

/// Sorted union of pairwise-disjoint closed intervals. Touching intervals
/// (gap below the merge tolerance) are coalesced on construction.
class DisjointIntervalSet {
public:
    DisjointIntervalSet() = default;
    explicit DisjointIntervalSet(std::vector<Interval> intervals);

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }

    double total_length() const;
    bool contains(double x) const;
    /// True if every piece of `other` lies inside this union, up to `tol`
    /// slack at the endpoints.
    bool contains_set(const DisjointIntervalSet& other, double tol) const;

    DisjointIntervalSet intersect(const DisjointIntervalSet& other) const;
    DisjointIntervalSet unite(const DisjointIntervalSet& other) const;

    /// Gaps smaller than 2^-40 * max|endpoint| are merged. Endpoints carry
    /// only a few ulps of rounding error, so this never bridges a real gap
    /// of the geometry at the generations we support.
    static double merge_tolerance(double max_abs_endpoint);

    /// Assumes `intervals` is already sorted by left endpoint; merges in one
    /// sweep. Used by the hot projection-union path.
    static DisjointIntervalSet from_sorted(std::vector<Interval>&& intervals);

private:
    std::vector<Interval> pieces_;
};

/// Piecewise-constant nonnegative integer function: value counts_[i] on the
/// open cell (breakpoints_[i], breakpoints_[i+1]), zero outside the support.
/// Canonical: no two adjacent equal counts, no zero cells at the ends.
class StepProfile {
public:
    StepProfile() = default;
    static StepProfile make(std::vector<double> breakpoints,
                            std::vector<std::int64_t> counts);

    bool empty() const { return counts_.empty(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    /// Value on the open cell containing x; at a breakpoint, the larger of
    /// the two adjacent cell values (breakpoints are a null set).
    std::int64_t value_at(double x) const;
    std::int64_t max_count() const;
    Interval support() const;

private:
    std::vector<double> breakpoints_;   // size counts_.size() + 1 when nonempty
    std::vector<std::int64_t> counts_;
};

/// Lebesgue measure of the union. Throws std::invalid_argument on NaN or
/// infinite endpoints.
double union_length(std::span<const Interval> intervals);

/// Profile whose value at x is the number of input intervals containing x.
/// Openings are processed before closings at equal coordinates, so touching
/// closed intervals overlap.
StepProfile multiplicity_profile(std::span<const Interval> intervals);

/// Integral of count(x)^power over the line.
double profile_moment(const StepProfile& p, int power);

/// Pointwise maximum of the given profiles.
StepProfile pointwise_max(std::span<const StepProfile> profiles);

/// mu{x : p(x) >= level}. For level <= 0 this is the measure of the whole
/// support span (the convention for the degenerate level).
double superlevel_measure(const StepProfile& p, double level);

/// Central Hardy-Littlewood maximal function sup_{r>0} (1/2r) int_{y-r}^{y+r} p.
/// The averaged integral is piecewise linear in r, so the supremum is
/// attained either at a radius |y - b| for a breakpoint b or in the r -> 0
/// limit; all candidates are evaluated exactly.
double hl_maximal_at(const StepProfile& p, double y);

}  // namespace favard
