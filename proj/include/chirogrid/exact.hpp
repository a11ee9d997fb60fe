#pragma once

// Exact scalar arithmetic: determinant signs over the rationals and the
// half-integer Gamma values that show up in ball-volume ratios.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace chirogrid {

using Int = mpz_class;
using Rat = mpq_class;

using Point = std::vector<Rat>;
using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign sign_of(const Int& v) { return static_cast<Sign>(sgn(v)); }
inline Sign sign_of(const Rat& v) { return static_cast<Sign>(sgn(v)); }

inline char sign_char(Sign s) {
    switch (s) {
        case Sign::Neg: return '-';
        case Sign::Pos: return '+';
        default: return '0';
    }
}

Sign sign_from_char(char c);

/// Exact determinant of an integer matrix (fraction-free Bareiss
/// elimination with row pivoting; all intermediate divisions are exact).
Int det_int(IntMatrix m);

/// Exact determinant of a rational matrix. Rows are scaled to a common
/// integer form first so the elimination itself runs on integers.
Rat det_rat(const RatMatrix& m);

/// Sign of det(m), never wrong regardless of entry magnitudes.
Sign det_sign(const RatMatrix& m);

/// Orientation of an ordered tuple of d+1 points in Q^d: the sign of the
/// (d+1)x(d+1) determinant with rows (p_i, 1).
Sign orientation(const std::vector<Point>& tuple);

/// Exact binomial coefficient C(n, k). Throws if k > n.
Int binomial(unsigned long n, unsigned long k);

/// A value q * pi^(k/2) with q an exact rational. Keeps powers of sqrt(pi)
/// symbolic so Gamma values and ball volumes stay exact.
struct ScaledPi {
    Rat q;
    long k = 0;

    ScaledPi() = default;
    ScaledPi(Rat q_, long k_) : q(std::move(q_)), k(q == 0 ? 0 : k_) {}

    double to_double() const;

    friend ScaledPi operator*(const ScaledPi& a, const ScaledPi& b) {
        return {Rat(a.q * b.q), a.k + b.k};
    }
    friend ScaledPi operator/(const ScaledPi& a, const ScaledPi& b) {
        if (b.q == 0) throw std::domain_error("ScaledPi: division by zero");
        return {Rat(a.q / b.q), a.k - b.k};
    }
    friend bool operator==(const ScaledPi& a, const ScaledPi& b) {
        return a.q == b.q && (a.q == 0 || a.k == b.k);
    }
};

/// Gamma at half-integer arguments, argument given as 2x (so twice_x = 3
/// means Gamma(3/2)). Built from Gamma(1) = 1, Gamma(1/2) = sqrt(pi) and
/// the recurrence Gamma(x) = (x-1) Gamma(x-1).
ScaledPi half_gamma(long twice_x);

/// Volume of the d-dimensional unit ball, pi^(d/2) / Gamma(d/2 + 1).
ScaledPi ball_volume(int d);

/// vol(B_{d-1}) / vol(B_d) = Gamma(d/2 + 1) / (sqrt(pi) * Gamma((d-1)/2 + 1)).
ScaledPi ball_volume_ratio(int d);

}  // namespace chirogrid
