#include "favard/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace favard {

namespace {

void require_finite(std::span<const Interval> intervals) {
    for (const Interval& iv : intervals) {
        if (!std::isfinite(iv.left) || !std::isfinite(iv.right)) {
            throw std::invalid_argument("interval endpoints must be finite");
        }
    }
}

double max_abs_endpoint(std::span<const Interval> intervals) {
    double m = 0.0;
    for (const Interval& iv : intervals) {
        m = std::max({m, std::abs(iv.left), std::abs(iv.right)});
    }
    return m;
}

}  // namespace

double DisjointIntervalSet::merge_tolerance(double max_abs_endpoint) {
    return std::ldexp(std::max(max_abs_endpoint, 1.0), -40);
}

DisjointIntervalSet DisjointIntervalSet::from_sorted(std::vector<Interval>&& intervals) {
    DisjointIntervalSet out;
    if (intervals.empty()) return out;
    const double eps = merge_tolerance(max_abs_endpoint(intervals));
    auto& pieces = out.pieces_;
    pieces.reserve(intervals.size());
    for (const Interval& iv : intervals) {
        if (iv.right < iv.left) continue;
        if (!pieces.empty() && iv.left <= pieces.back().right + eps) {
            pieces.back().right = std::max(pieces.back().right, iv.right);
        } else {
            pieces.push_back(iv);
        }
    }
    std::erase_if(pieces, [](const Interval& iv) { return !(iv.left < iv.right); });
    return out;
}

DisjointIntervalSet::DisjointIntervalSet(std::vector<Interval> intervals) {
    require_finite(intervals);
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) {
                  return a.left < b.left || (a.left == b.left && a.right < b.right);
              });
    *this = from_sorted(std::move(intervals));
}

double DisjointIntervalSet::total_length() const {
    double sum = 0.0;
    for (const Interval& iv : pieces_) sum += iv.length();
    return sum;
}

bool DisjointIntervalSet::contains(double x) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.left; });
    if (it == pieces_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool DisjointIntervalSet::contains_set(const DisjointIntervalSet& other, double tol) const {
    std::size_t i = 0;
    for (const Interval& piece : other.pieces_) {
        while (i < pieces_.size() && pieces_[i].right < piece.left - tol) ++i;
        if (i == pieces_.size()) return false;
        if (pieces_[i].left > piece.left + tol || pieces_[i].right < piece.right - tol) {
            return false;
        }
    }
    return true;
}

DisjointIntervalSet DisjointIntervalSet::intersect(const DisjointIntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < pieces_.size() && j < other.pieces_.size()) {
        const Interval& a = pieces_[i];
        const Interval& b = other.pieces_[j];
        const double lo = std::max(a.left, b.left);
        const double hi = std::min(a.right, b.right);
        if (lo < hi) out.push_back({lo, hi});
        if (a.right < b.right) ++i; else ++j;
    }
    return from_sorted(std::move(out));
}

DisjointIntervalSet DisjointIntervalSet::unite(const DisjointIntervalSet& other) const {
    std::vector<Interval> merged(pieces_.size() + other.pieces_.size());
    std::merge(pieces_.begin(), pieces_.end(), other.pieces_.begin(), other.pieces_.end(),
               merged.begin(), [](const Interval& a, const Interval& b) {
                   return a.left < b.left;
               });
    return from_sorted(std::move(merged));
}

double union_length(std::span<const Interval> intervals) {
    require_finite(intervals);
    std::vector<Interval> copy(intervals.begin(), intervals.end());
    return DisjointIntervalSet(std::move(copy)).total_length();
}

StepProfile StepProfile::make(std::vector<double> breakpoints,
                              std::vector<std::int64_t> counts) {
    if (breakpoints.size() != counts.size() + 1 && !(breakpoints.empty() && counts.empty())) {
        throw std::invalid_argument("profile needs counts.size()+1 breakpoints");
    }
    StepProfile p;
    if (counts.empty()) return p;
    // Canonicalize: drop empty cells, merge adjacent equal counts, trim zero
    // cells at both ends.
    std::vector<double> bp;
    std::vector<std::int64_t> ct;
    bp.reserve(breakpoints.size());
    ct.reserve(counts.size());
    bp.push_back(breakpoints.front());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (breakpoints[i + 1] <= bp.back()) continue;
        if (!ct.empty() && ct.back() == counts[i]) {
            bp.back() = breakpoints[i + 1];
        } else {
            ct.push_back(counts[i]);
            bp.push_back(breakpoints[i + 1]);
        }
    }
    while (!ct.empty() && ct.front() == 0) {
        ct.erase(ct.begin());
        bp.erase(bp.begin());
    }
    while (!ct.empty() && ct.back() == 0) {
        ct.pop_back();
        bp.pop_back();
    }
    if (ct.empty()) return p;
    p.breakpoints_ = std::move(bp);
    p.counts_ = std::move(ct);
    return p;
}

std::int64_t StepProfile::value_at(double x) const {
    if (empty() || x < breakpoints_.front() || x > breakpoints_.back()) return 0;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (it != breakpoints_.end() && *it == x) {
        const std::int64_t left = idx >= 1 ? counts_[idx - 1] : 0;
        const std::int64_t right = idx < counts_.size() ? counts_[idx] : 0;
        return std::max(left, right);
    }
    return counts_[idx - 1];
}

std::int64_t StepProfile::max_count() const {
    std::int64_t m = 0;
    for (std::int64_t c : counts_) m = std::max(m, c);
    return m;
}

Interval StepProfile::support() const {
    if (empty()) return {0.0, 0.0};
    return {breakpoints_.front(), breakpoints_.back()};
}

StepProfile multiplicity_profile(std::span<const Interval> intervals) {
    require_finite(intervals);
    // Endpoint sweep; +1 sorts before -1 at equal coordinates so touching
    // closed intervals overlap at the touch point.
    std::vector<std::pair<double, int>> events;
    events.reserve(2 * intervals.size());
    for (const Interval& iv : intervals) {
        if (iv.right < iv.left) continue;
        events.emplace_back(iv.left, +1);
        events.emplace_back(iv.right, -1);
    }
    if (events.empty()) return {};
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) {
                  return a.first < b.first || (a.first == b.first && a.second > b.second);
              });
    std::vector<double> breakpoints;
    std::vector<std::int64_t> counts;
    std::int64_t depth = 0;
    std::size_t i = 0;
    breakpoints.push_back(events.front().first);
    while (i < events.size()) {
        const double x = events[i].first;
        if (x > breakpoints.back()) {
            counts.push_back(depth);
            breakpoints.push_back(x);
        }
        while (i < events.size() && events[i].first == x) {
            depth += events[i].second;
            ++i;
        }
    }
    return StepProfile::make(std::move(breakpoints), std::move(counts));
}

double profile_moment(const StepProfile& p, int power) {
    if (power < 1) throw std::invalid_argument("moment power must be >= 1");
    const auto& bp = p.breakpoints();
    const auto& ct = p.counts();
    double sum = 0.0;
    for (std::size_t i = 0; i < ct.size(); ++i) {
        double term = 1.0;
        for (int k = 0; k < power; ++k) term *= static_cast<double>(ct[i]);
        sum += term * (bp[i + 1] - bp[i]);
    }
    return sum;
}

StepProfile pointwise_max(std::span<const StepProfile> profiles) {
    std::vector<double> grid;
    for (const StepProfile& p : profiles) {
        grid.insert(grid.end(), p.breakpoints().begin(), p.breakpoints().end());
    }
    if (grid.empty()) return {};
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.size() < 2) return {};
    std::vector<std::int64_t> counts(grid.size() - 1, 0);
    for (const StepProfile& p : profiles) {
        const auto& bp = p.breakpoints();
        const auto& ct = p.counts();
        if (ct.empty()) continue;
        auto first = std::lower_bound(grid.begin(), grid.end(), bp.front());
        std::size_t g = static_cast<std::size_t>(first - grid.begin());
        for (std::size_t c = 0; c < ct.size(); ++c) {
            while (g + 1 < grid.size() && grid[g + 1] <= bp[c + 1]) {
                counts[g] = std::max(counts[g], ct[c]);
                ++g;
            }
        }
    }
    return StepProfile::make(std::move(grid), std::move(counts));
}

double superlevel_measure(const StepProfile& p, double level) {
    const auto& bp = p.breakpoints();
    const auto& ct = p.counts();
    double sum = 0.0;
    for (std::size_t i = 0; i < ct.size(); ++i) {
        if (static_cast<double>(ct[i]) >= level) sum += bp[i + 1] - bp[i];
    }
    return sum;
}

double hl_maximal_at(const StepProfile& p, double y) {
    if (p.empty()) return 0.0;
    const auto& bp = p.breakpoints();
    const auto& ct = p.counts();
    std::vector<double> prefix(bp.size(), 0.0);
    for (std::size_t i = 0; i < ct.size(); ++i) {
        prefix[i + 1] = prefix[i] + static_cast<double>(ct[i]) * (bp[i + 1] - bp[i]);
    }
    auto integral_to = [&](double x) {
        if (x <= bp.front()) return 0.0;
        if (x >= bp.back()) return prefix.back();
        auto it = std::upper_bound(bp.begin(), bp.end(), x);
        const std::size_t cell = static_cast<std::size_t>(it - bp.begin()) - 1;
        return prefix[cell] + static_cast<double>(ct[cell]) * (x - bp[cell]);
    };
    auto limit_value = [&](double x, bool from_right) -> double {
        if (from_right) {
            if (x < bp.front() || x >= bp.back()) return 0.0;
            auto it = std::upper_bound(bp.begin(), bp.end(), x);
            return static_cast<double>(ct[static_cast<std::size_t>(it - bp.begin()) - 1]);
        }
        if (x <= bp.front() || x > bp.back()) return 0.0;
        auto it = std::lower_bound(bp.begin(), bp.end(), x);
        const std::size_t idx = static_cast<std::size_t>(it - bp.begin());
        return static_cast<double>(ct[(it != bp.end() && *it == x) ? idx - 1 : idx - 1]);
    };
    // The centered average is piecewise monotone in r between breakpoint
    // radii, so candidates are the breakpoint radii plus the r -> 0 limit.
    double best = 0.5 * (limit_value(y, false) + limit_value(y, true));
    for (double b : bp) {
        const double r = std::abs(y - b);
        if (r <= 0.0) continue;
        const double avg = (integral_to(y + r) - integral_to(y - r)) / (2.0 * r);
        best = std::max(best, avg);
    }
    return best;
}

}  // namespace favard
