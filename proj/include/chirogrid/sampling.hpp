#pragma once

// Seeded, reproducible uniform sampling with exact dyadic coordinates, and
// the point-set text format.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chirogrid/exact.hpp"

namespace chirogrid {

enum class Domain { Ball, Cube };

std::string domain_name(Domain d);
Domain domain_from_name(const std::string& s);

/// Counter-based 64-bit generator: output i of stream `key` is
/// mix64(key ^ mix64(i * GOLDEN)), with mix64 the SplitMix64 finalizer.
/// Pure function of (key, i), so streams are reproducible and independent
/// streams can be consumed in parallel.
struct CounterRng {
    uint64_t key = 0;
    uint64_t counter = 0;

    uint64_t next();
};

uint64_t mix64(uint64_t z);

/// Seed for trial i of an experiment with master seed `seed`.
uint64_t derive_seed(uint64_t seed, uint64_t trial);

struct SamplerConfig {
    Domain domain = Domain::Ball;
    int d = 2;
    long n = 0;
    int precision_bits = 96;
    uint64_t seed = 0;
};

struct PointConfig {
    int d = 0;
    long n = 0;
    std::vector<Point> points;
};

/// One coordinate: k drawn uniformly from [0, 2^B), mapped to the dyadic
/// value (2k + 1 - 2^B) / 2^B in (-1, 1). Symmetric under negation.
Rat sample_coordinate(CounterRng& rng, int bits);

/// One point; Ball rejects from the cube until |x|^2 <= 1 (exact test).
/// Throws after 10^4 consecutive rejections (RNG fault) and for Ball with
/// d >= 5 (rejection rate too low; unsupported).
Point sample_point(CounterRng& rng, int d, int bits, Domain domain);

/// Fully determined by cfg; identical cfg gives identical output.
PointConfig sample_config(const SamplerConfig& cfg);

/// Text format: "pointset d n" header, then n rows of d rationals
/// ("p/q" or integer), '#' comments.
void save_config(std::ostream& os, const PointConfig& cfg);
PointConfig load_config(std::istream& is);

void save_config_file(const std::string& path, const PointConfig& cfg);
PointConfig load_config_file(const std::string& path);

}  // namespace chirogrid
