#pragma once

// Grid specification, nearest-grid rounding, and the fixed-width binary
// encoding of rounded configurations.

#include <cstdint>
#include <vector>

#include "chirogrid/exact.hpp"

namespace chirogrid {

/// Grid of step 1/M on each axis.
struct GridSpec {
    Int M;
};

/// M = ceil(n^(d+1+eps)). With eps = p/q this is the ceiling of the q-th
/// root of n^((d+1)q+p), so the realized grid is never coarser than the
/// nominal one.
GridSpec grid_from_params(long n, int d, const Rat& eps);

/// Nearest multiple of 1/M; exact half-step ties round away from zero.
Rat round_to_grid(const Rat& x, const Int& M);

Point round_point(const Point& p, const GridSpec& g);
std::vector<Point> round_config(const std::vector<Point>& pts, const GridSpec& g);

/// Number of coordinate pairs mapped to the same grid point (coincident
/// points count once per unordered pair of equal images).
long count_collisions(const std::vector<Point>& pts);

/// ceil(log2(2M+1)): the two's-complement width needed for values in [-M, M].
int coord_bit_width(const Int& M);

struct EncodedConfig {
    int d = 0;
    long n = 0;
    Int M;
    std::vector<uint8_t> payload;  // n*d integers, w bits each, MSB first
    size_t payload_bits = 0;
};

/// Encode an on-grid configuration with coordinates in [-1, 1]. Each
/// coordinate k/M is stored as the integer k, two's complement, fixed
/// width, row-major by point then coordinate. Throws on off-grid or
/// out-of-range coordinates.
EncodedConfig encode(const std::vector<Point>& pts, const GridSpec& g);

std::vector<Point> decode(const EncodedConfig& e);

/// File framing: 4-byte magic "CHGR", 1-byte version, then the header and
/// the padded payload.
std::vector<uint8_t> serialize(const EncodedConfig& e);
EncodedConfig deserialize(const std::vector<uint8_t>& bytes);

}  // namespace chirogrid
