#pragma once

// Chirotope extraction and comparison. Signs are stored once per increasing
// (d+1)-subset of indices; ordered tuples are recovered by permutation
// parity.

#include <iosfwd>
#include <vector>

#include "chirogrid/exact.hpp"

namespace chirogrid {

struct Chirotope {
    int d = 0;
    long n = 0;
    std::vector<Sign> signs;  // lex order over increasing (d+1)-subsets

    bool general_position() const;
};

/// All increasing k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> enumerate_subsets(long n, int k);

/// Lexicographic rank of an increasing subset among all k-subsets of
/// {0, ..., n-1}.
long subset_rank(const std::vector<int>& subset, long n);

Chirotope compute_chirotope(const std::vector<Point>& pts, int d);

/// Sign of an ordered index tuple: stored sign of the sorted tuple times
/// the permutation parity. Throws on a repeated index.
Sign orientation_of_ordered(const Chirotope& c, const std::vector<int>& tuple);

struct DiffEntry {
    std::vector<int> subset;  // 0-based indices
    Sign a = Sign::Zero;
    Sign b = Sign::Zero;
    bool degenerate = false;  // either side ZERO, as opposed to a POS/NEG flip
};

/// Positions where the two chirotopes disagree.
std::vector<DiffEntry> chirotope_diff(const Chirotope& a, const Chirotope& b);

/// Text fixture format: "chirotope d n", then one line per subset with
/// 1-based indices and a sign in {+,-,0}.
void write_chirotope(std::ostream& os, const Chirotope& c);
Chirotope read_chirotope(std::istream& is);

/// 2-bit-per-sign packed serialization of the sign vector.
std::vector<uint8_t> pack_signs(const std::vector<Sign>& signs);
std::vector<Sign> unpack_signs(const std::vector<uint8_t>& bytes, size_t count);

}  // namespace chirogrid
