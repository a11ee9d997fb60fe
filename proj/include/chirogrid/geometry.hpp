#pragma once

// Facet hyperplanes, exact distance comparisons, the cell arrangement of a
// simplex, and the orientation-preservation certificate.

#include <optional>
#include <vector>

#include "chirogrid/exact.hpp"

namespace chirogrid {

/// Affine functional a.x + b; the locus a.x + b = 0. Two hyperplanes are
/// the same oriented hyperplane iff their coefficients are proportional by
/// a positive rational.
struct Hyperplane {
    std::vector<Rat> a;
    Rat b;
};

/// Exact signed value a.x + b.
Rat offset(const Hyperplane& h, const Point& x);

/// Hyperplane through d points in Q^d, coefficients from the cofactors of
/// the homogeneous matrix with rows (p_j, 1). Throws if the points are
/// affinely dependent.
Hyperplane hyperplane_through(const std::vector<Point>& pts);

/// Hyperplane through the facet of the simplex opposite vertex i (0-based),
/// oriented so offset(h, t[i]) > 0. Throws on a degenerate tuple.
Hyperplane facet_hyperplane(const std::vector<Point>& t, int i);

/// |offset(h,x)| > |offset(h,y)| (strict). Distances to a common
/// hyperplane compare this way exactly since the normalization cancels.
bool abs_offset_greater(const Hyperplane& h, const Point& x, const Point& y);

/// Euclidean distance from x to h is >= sqrt(t2), decided exactly as
/// (a.x + b)^2 >= t2 * |a|^2. No irrational arithmetic anywhere.
bool dist_at_least(const Hyperplane& h, const Point& x, const Rat& t2);

/// Exact affine map x -> A x + shift.
struct AffineMap {
    RatMatrix linear;
    std::vector<Rat> shift;

    Point apply(const Point& x) const;
};

/// The affine map taking t[0] to the origin and t[i] to e_i. Throws on a
/// degenerate tuple.
AffineMap affine_normalize(const std::vector<Point>& t);

enum class CellKind { R, S, Other, Boundary };

/// Label of a cell in the arrangement of the d+1 facet hyperplanes of the
/// standard simplex. index is 1-based, 0 for Other/Boundary.
struct CellLabel {
    CellKind kind = CellKind::Other;
    int index = 0;

    friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Classify a point in normalized coordinates by the sign vector of
/// (x_1, ..., x_d, sum x_j - 1). Boundary if any functional vanishes.
CellLabel classify_cell(const Point& x);

/// Strict inequality a.x + b > 0.
struct StrictIneq {
    std::vector<Rat> a;
    Rat b;
};

/// Equation a.x + b = 0.
struct LinearEq {
    std::vector<Rat> a;
    Rat b;
};

/// Defining strict inequalities of an R/S cell in normalized coordinates.
std::vector<StrictIneq> cell_inequalities(int d, const CellLabel& cell);

/// Exact feasibility of a strict linear system, optionally restricted to a
/// hyperplane: eliminates one variable via the equation, then runs
/// Fourier-Motzkin on the strict system. If feasible and witness != null,
/// fills in a satisfying rational point.
bool strict_feasible(const std::vector<StrictIneq>& ineqs,
                     const std::optional<LinearEq>& eq,
                     std::vector<Rat>* witness = nullptr);

/// Normalizes t to the standard simplex, transforms h accordingly, and
/// returns the set of R/S cells whose interior h meets. The full R-family
/// or S-family never appears in the result.
std::vector<CellLabel> lemma1_transversal_report(const std::vector<Point>& t,
                                                 const Hyperplane& h);

/// Orientation-preservation certificate for a perturbed tuple Q of P: for
/// every i, q_i lies strictly on the positive side of the facet hyperplane
/// f_i, and both p_i and q_i are strictly farther from f_i than every q_j,
/// j != i. When true, orientation(P) == orientation(Q).
bool lemma2_certificate(const std::vector<Point>& P, const std::vector<Point>& Q);

}  // namespace chirogrid
