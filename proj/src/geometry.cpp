#include "chirogrid/geometry.hpp"

#include <algorithm>

namespace chirogrid {

Rat offset(const Hyperplane& h, const Point& x) {
    if (h.a.size() != x.size())
        throw std::invalid_argument("offset: dimension mismatch");
    Rat r = h.b;
    for (size_t k = 0; k < x.size(); ++k) r += h.a[k] * x[k];
    return r;
}

Hyperplane hyperplane_through(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("hyperplane_through: no points");
    const size_t d = pts.front().size();
    if (pts.size() != d)
        throw std::invalid_argument("hyperplane_through: need exactly d points");
    for (const auto& p : pts)
        if (p.size() != d) throw std::invalid_argument("hyperplane_through: dimension mismatch");

    // h(x) = det of the homogeneous matrix with first row (x, 1) and the
    // remaining rows (p_j, 1); expand along the first row.
    Hyperplane h;
    h.a.resize(d);
    int sgn_col = 1;
    for (size_t k = 0; k <= d; ++k) {
        RatMatrix minor(d, std::vector<Rat>());
        for (size_t r = 0; r < d; ++r) {
            minor[r].reserve(d);
            for (size_t c = 0; c <= d; ++c) {
                if (c == k) continue;
                minor[r].push_back(c == d ? Rat(1) : pts[r][c]);
            }
        }
        Rat cof = det_rat(minor);
        if (sgn_col < 0) cof = -cof;
        if (k < d)
            h.a[k] = cof;
        else
            h.b = cof;
        sgn_col = -sgn_col;
    }
    if (std::all_of(h.a.begin(), h.a.end(), [](const Rat& v) { return v == 0; }))
        throw std::invalid_argument("hyperplane_through: points affinely dependent");
    return h;
}

Hyperplane facet_hyperplane(const std::vector<Point>& t, int i) {
    if (t.empty()) throw std::invalid_argument("facet_hyperplane: empty tuple");
    const size_t d = t.front().size();
    if (t.size() != d + 1)
        throw std::invalid_argument("facet_hyperplane: tuple must have d+1 points");
    if (i < 0 || static_cast<size_t>(i) > d)
        throw std::invalid_argument("facet_hyperplane: index out of range");

    std::vector<Point> facet;
    facet.reserve(d);
    for (size_t j = 0; j <= d; ++j)
        if (j != static_cast<size_t>(i)) facet.push_back(t[j]);
    Hyperplane h = hyperplane_through(facet);
    Sign s = sign_of(offset(h, t[i]));
    if (s == Sign::Zero)
        throw std::invalid_argument("facet_hyperplane: degenerate tuple");
    if (s == Sign::Neg) {
        for (auto& v : h.a) v = -v;
        h.b = -h.b;
    }
    return h;
}

bool abs_offset_greater(const Hyperplane& h, const Point& x, const Point& y) {
    return abs(offset(h, x)) > abs(offset(h, y));
}

bool dist_at_least(const Hyperplane& h, const Point& x, const Rat& t2) {
    if (t2 < 0) throw std::invalid_argument("dist_at_least: t2 must be >= 0");
    Rat off = offset(h, x);
    Rat norm2 = 0;
    for (const auto& v : h.a) norm2 += v * v;
    return off * off >= t2 * norm2;
}

Point AffineMap::apply(const Point& x) const {
    const size_t d = shift.size();
    if (x.size() != d) throw std::invalid_argument("AffineMap: dimension mismatch");
    Point y(d);
    for (size_t r = 0; r < d; ++r) {
        Rat acc = shift[r];
        for (size_t c = 0; c < d; ++c) acc += linear[r][c] * x[c];
        y[r] = acc;
    }
    return y;
}

namespace {

// Gauss-Jordan inverse of a rational matrix; throws if singular.
RatMatrix invert(RatMatrix m) {
    const size_t d = m.size();
    RatMatrix inv(d, std::vector<Rat>(d, Rat(0)));
    for (size_t i = 0; i < d; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < d; ++col) {
        size_t pivot = col;
        while (pivot < d && m[pivot][col] == 0) ++pivot;
        if (pivot == d) throw std::invalid_argument("affine_normalize: degenerate tuple");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = m[col][col];
        for (size_t c = 0; c < d; ++c) {
            m[col][c] /= p;
            inv[col][c] /= p;
        }
        for (size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c = 0; c < d; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

AffineMap affine_normalize(const std::vector<Point>& t) {
    if (t.empty()) throw std::invalid_argument("affine_normalize: empty tuple");
    const size_t d = t.front().size();
    if (t.size() != d + 1)
        throw std::invalid_argument("affine_normalize: tuple must have d+1 points");

    // Columns of V are the edge vectors t[i+1] - t[0]; the map is V^{-1}.
    RatMatrix v(d, std::vector<Rat>(d));
    for (size_t c = 0; c < d; ++c)
        for (size_t r = 0; r < d; ++r) v[r][c] = t[c + 1][r] - t[0][r];

    AffineMap map;
    map.linear = invert(std::move(v));
    map.shift.resize(d);
    for (size_t r = 0; r < d; ++r) {
        Rat acc = 0;
        for (size_t c = 0; c < d; ++c) acc += map.linear[r][c] * t[0][c];
        map.shift[r] = -acc;
    }
    return map;
}

CellLabel classify_cell(const Point& x) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("classify_cell: dimension must be >= 1");
    Rat sum = 0;
    int pos = 0, neg = 0, pos_at = -1, neg_at = -1;
    for (int j = 0; j < d; ++j) {
        Sign s = sign_of(x[j]);
        if (s == Sign::Zero) return {CellKind::Boundary, 0};
        if (s == Sign::Pos) {
            ++pos;
            pos_at = j;
        } else {
            ++neg;
            neg_at = j;
        }
        sum += x[j];
    }
    Sign ssum = sign_of(Rat(sum - 1));
    if (ssum == Sign::Zero) return {CellKind::Boundary, 0};

    if (neg == d && ssum == Sign::Neg) return {CellKind::R, d + 1};
    if (pos == d && ssum == Sign::Pos) return {CellKind::S, d + 1};
    if (pos == 1 && neg == d - 1 && ssum == Sign::Pos) return {CellKind::R, pos_at + 1};
    if (neg == 1 && pos == d - 1 && ssum == Sign::Neg) return {CellKind::S, neg_at + 1};
    return {CellKind::Other, 0};
}

std::vector<StrictIneq> cell_inequalities(int d, const CellLabel& cell) {
    if (cell.kind != CellKind::R && cell.kind != CellKind::S)
        throw std::invalid_argument("cell_inequalities: label must be R or S");
    if (cell.index < 1 || cell.index > d + 1)
        throw std::invalid_argument("cell_inequalities: index out of range");

    const bool is_r = cell.kind == CellKind::R;
    std::vector<StrictIneq> sys;
    sys.reserve(d + 1);
    for (int j = 0; j < d; ++j) {
        // R(i): + at i-1, - elsewhere.  S(i): - at i-1, + elsewhere.
        bool positive;
        if (cell.index == d + 1)
            positive = !is_r;
        else
            positive = (j == cell.index - 1) == is_r;
        StrictIneq iq{std::vector<Rat>(d, Rat(0)), Rat(0)};
        iq.a[j] = positive ? 1 : -1;
        sys.push_back(std::move(iq));
    }
    // Sum functional: + for R(i<=d) and S(d+1), - otherwise.
    bool sum_positive = (cell.index == d + 1) ? !is_r : is_r;
    StrictIneq sum{std::vector<Rat>(d, Rat(sum_positive ? 1 : -1)),
                   Rat(sum_positive ? -1 : 1)};
    sys.push_back(std::move(sum));
    return sys;
}

bool strict_feasible(const std::vector<StrictIneq>& ineqs,
                     const std::optional<LinearEq>& eq,
                     std::vector<Rat>* witness) {
    size_t dim = eq ? eq->a.size() : (ineqs.empty() ? 0 : ineqs.front().a.size());
    for (const auto& iq : ineqs)
        if (iq.a.size() != dim) throw std::invalid_argument("strict_feasible: dimension mismatch");

    // Eliminate one variable via the equation, if given.
    size_t eq_var = dim;
    std::vector<Rat> eq_sub_a;  // x_eq_var = eq_sub_b + eq_sub_a . x_rest
    Rat eq_sub_b;
    std::vector<StrictIneq> sys;
    if (eq) {
        while (eq_var > 0 && eq->a[eq_var - 1] == 0) --eq_var;
        if (eq_var == 0) throw std::invalid_argument("strict_feasible: degenerate equation");
        --eq_var;
        Rat c = eq->a[eq_var];
        eq_sub_a.resize(dim - 1);
        for (size_t k = 0, o = 0; k < dim; ++k) {
            if (k == eq_var) continue;
            eq_sub_a[o++] = -eq->a[k] / c;
        }
        eq_sub_b = -eq->b / c;
        for (const auto& iq : ineqs) {
            StrictIneq red{std::vector<Rat>(dim - 1), Rat(iq.b + iq.a[eq_var] * eq_sub_b)};
            for (size_t k = 0, o = 0; k < dim; ++k) {
                if (k == eq_var) continue;
                red.a[o] = iq.a[k] + iq.a[eq_var] * eq_sub_a[o];
                ++o;
            }
            sys.push_back(std::move(red));
        }
    } else {
        sys = ineqs;
    }
    const size_t m = eq ? dim - 1 : dim;

    // Fourier-Motzkin, eliminating the highest-indexed variable each round.
    // levels[v] holds the system over variables 0..v.
    std::vector<std::vector<StrictIneq>> levels(m);
    for (size_t v = m; v-- > 0;) {
        levels[v] = sys;
        std::vector<StrictIneq> next;
        std::vector<const StrictIneq*> lowers, uppers;
        for (const auto& iq : sys) {
            Sign s = sign_of(iq.a[v]);
            if (s == Sign::Zero) {
                StrictIneq t{std::vector<Rat>(iq.a.begin(), iq.a.begin() + v), iq.b};
                next.push_back(std::move(t));
            } else if (s == Sign::Pos) {
                lowers.push_back(&iq);
            } else {
                uppers.push_back(&iq);
            }
        }
        for (const auto* lo : lowers) {
            for (const auto* up : uppers) {
                // (-c_up) * lo + c_lo * up, the eliminated variable cancels.
                Rat cl = lo->a[v], cu = up->a[v];
                StrictIneq t{std::vector<Rat>(v), Rat(-cu * lo->b + cl * up->b)};
                for (size_t k = 0; k < v; ++k) t.a[k] = -cu * lo->a[k] + cl * up->a[k];
                next.push_back(std::move(t));
            }
        }
        sys = std::move(next);
    }
    for (const auto& iq : sys)
        if (!(iq.b > 0)) return false;

    if (witness) {
        std::vector<Rat> x(m);
        for (size_t v = 0; v < m; ++v) {
            bool has_lo = false, has_up = false;
            Rat lo, up;
            for (const auto& iq : levels[v]) {
                Sign s = sign_of(iq.a[v]);
                if (s == Sign::Zero) continue;
                Rat rest = iq.b;
                for (size_t k = 0; k < v; ++k) rest += iq.a[k] * x[k];
                Rat bound = -rest / iq.a[v];
                if (s == Sign::Pos) {
                    if (!has_lo || bound > lo) lo = bound;
                    has_lo = true;
                } else {
                    if (!has_up || bound < up) up = bound;
                    has_up = true;
                }
            }
            if (has_lo && has_up)
                x[v] = (lo + up) / 2;
            else if (has_lo)
                x[v] = lo + 1;
            else if (has_up)
                x[v] = up - 1;
            else
                x[v] = 0;
        }
        if (eq) {
            witness->assign(dim, Rat(0));
            Rat xv = eq_sub_b;
            for (size_t k = 0, o = 0; k < dim; ++k) {
                if (k == eq_var) continue;
                (*witness)[k] = x[o];
                xv += eq_sub_a[o] * x[o];
                ++o;
            }
            (*witness)[eq_var] = xv;
        } else {
            *witness = std::move(x);
        }
    }
    return true;
}

std::vector<CellLabel> lemma1_transversal_report(const std::vector<Point>& t,
                                                 const Hyperplane& h) {
    const size_t d = t.empty() ? 0 : t.front().size();
    if (h.a.size() != d)
        throw std::invalid_argument("lemma1_transversal_report: dimension mismatch");
    affine_normalize(t);  // validates nondegeneracy

    // Push h into normalized coordinates: with x = V y + t[0] (V the edge
    // matrix), the transformed functional is (a^T V) . y + (a . t[0] + b).
    LinearEq eq;
    eq.a.resize(d);
    eq.b = h.b;
    for (size_t c = 0; c < d; ++c) {
        Rat acc = 0;
        for (size_t r = 0; r < d; ++r) acc += h.a[r] * (t[c + 1][r] - t[0][r]);
        eq.a[c] = acc;
    }
    for (size_t r = 0; r < d; ++r) eq.b += h.a[r] * t[0][r];

    std::vector<CellLabel> met;
    for (int i = 1; i <= static_cast<int>(d) + 1; ++i) {
        for (CellKind kind : {CellKind::R, CellKind::S}) {
            CellLabel cell{kind, i};
            if (strict_feasible(cell_inequalities(static_cast<int>(d), cell), eq))
                met.push_back(cell);
        }
    }
    return met;
}

bool lemma2_certificate(const std::vector<Point>& P, const std::vector<Point>& Q) {
    if (P.size() != Q.size())
        throw std::invalid_argument("lemma2_certificate: tuple size mismatch");
    const size_t d = P.empty() ? 0 : P.front().size();
    if (P.size() != d + 1)
        throw std::invalid_argument("lemma2_certificate: tuple must have d+1 points");

    for (size_t i = 0; i <= d; ++i) {
        Hyperplane f = facet_hyperplane(P, static_cast<int>(i));
        if (sign_of(offset(f, Q[i])) != Sign::Pos) return false;
        for (size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            if (!abs_offset_greater(f, Q[i], Q[j])) return false;
            if (!abs_offset_greater(f, P[i], Q[j])) return false;
        }
    }
    return true;
}

}  // namespace chirogrid
