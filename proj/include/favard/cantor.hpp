// Four-corner Cantor iterates and their exact projection geometry.
//
// The generation-n set K_n is the union of |digits|^(2n) axis-aligned
// squares of side base^-n inside [0,1]^2 (4^n squares for the default
// base-4, digits {0,3} construction). Squares are carried as exact integer
// corner numerators so ancestor/descendant relations stay exact; projected
// endpoints have the form a*cos(theta) + b*sin(theta) with dyadic a, b and
// are accurate to a few ulps.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "favard/intervals.hpp"

namespace favard {

/// Raised when a requested generation or spectrum size exceeds the
/// configured capacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generation cap for square enumeration; default 12, overridable with the
/// FAVARD_MAX_GEN environment variable (read once per process).
int generation_cap();

struct CantorConfig {
    int base = 4;
    std::vector<int> digits = {0, 3};  // sorted, unique, in [0, base)

    void validate() const;
    int children_per_square() const {
        return static_cast<int>(digits.size() * digits.size());
    }
};

struct Square {
    int gen = 0;
    std::uint64_t ix = 0;  // corner = (ix, iy) / base^gen
    std::uint64_t iy = 0;

    double side(int base = 4) const;
    double x0(int base = 4) const { return static_cast<double>(ix) * side(base); }
    double y0(int base = 4) const { return static_cast<double>(iy) * side(base); }

    bool operator==(const Square&) const = default;
};

/// Angle in [0, pi/4] together with the paper-side derived quantities:
/// slope parameter t = tan(pi/4 - theta), normalized interval scale
/// rho = (8 / (3 sqrt 2)) (1 + t), and projected width sigma = sin + cos.
class AngleParams {
public:
    explicit AngleParams(double theta);

    double theta() const { return theta_; }
    double t() const { return t_; }
    double rho() const { return rho_; }
    double sigma() const { return sigma_; }
    double cos_theta() const { return cos_; }
    double sin_theta() const { return sin_; }

private:
    double theta_, t_, rho_, sigma_, cos_, sin_;
};

/// rho as a function of t alone (used by the normalized spectral model).
double rho_of_t(double t);

/// Number of generation-n squares, with a capacity check against
/// generation_cap().
std::uint64_t square_count(const CantorConfig& config, int n);

/// All generation-n squares, lexicographically ordered by digit string
/// (per generation: y digit major, x digit minor, so the n=1 default order
/// is (0,0), (3/4,0), (0,3/4), (3/4,3/4)).
std::vector<Square> build_squares(const CantorConfig& config, int n);

/// Closed interval Proj R_theta(sq) on the horizontal axis; its length is
/// side * sigma exactly (up to rounding).
Interval project_square(const Square& sq, const AngleParams& a, int base = 4);

/// Projections of all generation-n squares, in build_squares order.
std::vector<Interval> projection_intervals(const CantorConfig& config, int n,
                                           const AngleParams& a);

/// Disjoint union of Proj R_theta(K_n), computed by the four-translate
/// self-similarity recursion (never materializes the 4^n interval multiset,
/// so it is usable at generations where projection_intervals is not).
DisjointIntervalSet projection_union(const CantorConfig& config, int n,
                                     const AngleParams& a);

/// 4^n sums over all choices xi_k in {+1, -1, +t, -t} of
/// sum_{k=0}^{n-1} 4^{-k} xi_k; collisions preserved, deterministic order.
std::vector<double> normalized_centers(int n, double t);

/// Exact multiplicity F_n(x): the number of generation-n squares whose
/// projection contains x. Recursive descent over the square tree pruned to
/// children whose projection contains x.
std::int64_t count_at_point(double x, const AngleParams& a, int n,
                            const CantorConfig& config = {});

/// Generation-n squares whose projection contains at least one of the
/// (sorted) witness points; each is reported once, in tree order, paired
/// with one witness index that hit it.
void squares_containing_witnesses(
    const CantorConfig& config, const AngleParams& a, int n,
    std::span<const double> sorted_witnesses,
    const std::function<void(const Square&, std::size_t witness_index)>& emit);

}  // namespace favard
