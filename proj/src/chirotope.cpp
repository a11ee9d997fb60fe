#include "chirogrid/chirotope.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace chirogrid {

bool Chirotope::general_position() const {
    return std::none_of(signs.begin(), signs.end(),
                        [](Sign s) { return s == Sign::Zero; });
}

std::vector<std::vector<int>> enumerate_subsets(long n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("enumerate_subsets: need n >= k >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

long subset_rank(const std::vector<int>& subset, long n) {
    const int k = static_cast<int>(subset.size());
    Int rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        int c = subset[i];
        if (c <= prev || c >= n) throw std::invalid_argument("subset_rank: not an increasing subset");
        for (int j = prev + 1; j < c; ++j)
            rank += binomial(static_cast<unsigned long>(n - 1 - j),
                             static_cast<unsigned long>(k - 1 - i));
        prev = c;
    }
    return rank.get_si();
}

Chirotope compute_chirotope(const std::vector<Point>& pts, int d) {
    const long n = static_cast<long>(pts.size());
    if (n < d + 1) throw std::invalid_argument("compute_chirotope: need at least d+1 points");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("compute_chirotope: dimension mismatch");

    Chirotope c;
    c.d = d;
    c.n = n;
    auto subsets = enumerate_subsets(n, d + 1);
    c.signs.reserve(subsets.size());
    std::vector<Point> tuple(d + 1);
    for (const auto& sub : subsets) {
        for (int i = 0; i <= d; ++i) tuple[i] = pts[sub[i]];
        c.signs.push_back(orientation(tuple));
    }
    return c;
}

Sign orientation_of_ordered(const Chirotope& c, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != c.d + 1)
        throw std::invalid_argument("orientation_of_ordered: tuple must have d+1 indices");
    std::vector<int> sorted = tuple;
    // Insertion sort, counting swaps for the parity.
    long swaps = 0;
    for (size_t i = 1; i < sorted.size(); ++i) {
        int v = sorted[i];
        size_t j = i;
        while (j > 0 && sorted[j - 1] > v) {
            sorted[j] = sorted[j - 1];
            --j;
            ++swaps;
        }
        sorted[j] = v;
    }
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("orientation_of_ordered: repeated index");
    Sign s = c.signs.at(subset_rank(sorted, c.n));
    return (swaps % 2 == 0) ? s : -s;
}

std::vector<DiffEntry> chirotope_diff(const Chirotope& a, const Chirotope& b) {
    if (a.d != b.d || a.n != b.n)
        throw std::invalid_argument("chirotope_diff: shape mismatch");
    std::vector<DiffEntry> out;
    auto subsets = enumerate_subsets(a.n, a.d + 1);
    for (size_t i = 0; i < subsets.size(); ++i) {
        if (a.signs[i] == b.signs[i]) continue;
        DiffEntry e;
        e.subset = subsets[i];
        e.a = a.signs[i];
        e.b = b.signs[i];
        e.degenerate = a.signs[i] == Sign::Zero || b.signs[i] == Sign::Zero;
        out.push_back(std::move(e));
    }
    return out;
}

void write_chirotope(std::ostream& os, const Chirotope& c) {
    os << "chirotope " << c.d << ' ' << c.n << '\n';
    auto subsets = enumerate_subsets(c.n, c.d + 1);
    for (size_t i = 0; i < subsets.size(); ++i) {
        for (int idx : subsets[i]) os << idx + 1 << ' ';
        os << sign_char(c.signs[i]) << '\n';
    }
}

Chirotope read_chirotope(std::istream& is) {
    std::string tag;
    Chirotope c;
    if (!(is >> tag >> c.d >> c.n) || tag != "chirotope")
        throw std::runtime_error("read_chirotope: bad header");
    auto subsets = enumerate_subsets(c.n, c.d + 1);
    c.signs.reserve(subsets.size());
    for (const auto& sub : subsets) {
        for (int expected : sub) {
            int idx;
            if (!(is >> idx) || idx != expected + 1)
                throw std::runtime_error("read_chirotope: subset order mismatch");
        }
        std::string s;
        if (!(is >> s) || s.size() != 1)
            throw std::runtime_error("read_chirotope: bad sign token");
        c.signs.push_back(sign_from_char(s[0]));
    }
    return c;
}

std::vector<uint8_t> pack_signs(const std::vector<Sign>& signs) {
    std::vector<uint8_t> bytes((signs.size() + 3) / 4, 0);
    for (size_t i = 0; i < signs.size(); ++i) {
        // 0 -> ZERO, 1 -> POS, 2 -> NEG
        uint8_t code = signs[i] == Sign::Pos ? 1 : (signs[i] == Sign::Neg ? 2 : 0);
        bytes[i / 4] |= static_cast<uint8_t>(code << (2 * (i % 4)));
    }
    return bytes;
}

std::vector<Sign> unpack_signs(const std::vector<uint8_t>& bytes, size_t count) {
    if (bytes.size() < (count + 3) / 4)
        throw std::runtime_error("unpack_signs: truncated input");
    std::vector<Sign> signs(count);
    for (size_t i = 0; i < count; ++i) {
        uint8_t code = (bytes[i / 4] >> (2 * (i % 4))) & 3;
        if (code > 2) throw std::runtime_error("unpack_signs: invalid code");
        signs[i] = code == 1 ? Sign::Pos : (code == 2 ? Sign::Neg : Sign::Zero);
    }
    return signs;
}

}  // namespace chirogrid
