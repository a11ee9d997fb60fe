#include "chirogrid/exact.hpp"

#include <cmath>

namespace chirogrid {

Sign sign_from_char(char c) {
    switch (c) {
        case '+': return Sign::Pos;
        case '-': return Sign::Neg;
        case '0': return Sign::Zero;
        default: throw std::invalid_argument("sign_from_char: expected one of + - 0");
    }
}

Int det_int(IntMatrix m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det_int: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_int: matrix not square");

    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // Pivot on the first nonzero entry in column k.
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

// Scale each row by the lcm of its denominators; returns the integer
// matrix and the (positive) product of the scaling factors.
std::pair<IntMatrix, Int> clear_denominators(const RatMatrix& m) {
    IntMatrix im(m.size());
    Int scale = 1;
    for (size_t i = 0; i < m.size(); ++i) {
        Int l = 1;
        for (const auto& e : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
        im[i].reserve(m[i].size());
        for (const auto& e : m[i]) {
            Rat scaled = e * l;
            im[i].push_back(scaled.get_num());
        }
        scale *= l;
    }
    return {std::move(im), std::move(scale)};
}

}  // namespace

Rat det_rat(const RatMatrix& m) {
    auto [im, scale] = clear_denominators(m);
    Rat r(det_int(std::move(im)), scale);
    r.canonicalize();
    return r;
}

Sign det_sign(const RatMatrix& m) {
    auto [im, scale] = clear_denominators(m);
    return sign_of(det_int(std::move(im)));
}

Sign orientation(const std::vector<Point>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("orientation: empty tuple");
    const size_t d = tuple.front().size();
    if (tuple.size() != d + 1)
        throw std::invalid_argument("orientation: tuple must have d+1 points");
    RatMatrix m(d + 1);
    for (size_t i = 0; i <= d; ++i) {
        if (tuple[i].size() != d)
            throw std::invalid_argument("orientation: dimension mismatch among points");
        m[i] = tuple[i];
        m[i].emplace_back(1);
    }
    return det_sign(m);
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) throw std::invalid_argument("binomial: k out of range");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

double ScaledPi::to_double() const {
    return q.get_d() * std::pow(std::sqrt(M_PI), static_cast<double>(k));
}

ScaledPi half_gamma(long twice_x) {
    if (twice_x < 1) throw std::invalid_argument("half_gamma: argument must be >= 1/2");
    Rat q = 1;
    long t = twice_x;
    while (t > 2) {
        t -= 2;
        q *= Rat(t, 2);
    }
    // t == 2: Gamma(1) = 1;  t == 1: Gamma(1/2) = sqrt(pi)
    return {q, t == 1 ? 1 : 0};
}

ScaledPi ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("ball_volume: d must be >= 0");
    return ScaledPi{Rat(1), d} / half_gamma(d + 2);
}

ScaledPi ball_volume_ratio(int d) {
    if (d < 1) throw std::invalid_argument("ball_volume_ratio: d must be >= 1");
    return ball_volume(d - 1) / ball_volume(d);
}

}  // namespace chirogrid
