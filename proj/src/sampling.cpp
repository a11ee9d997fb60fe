#include "chirogrid/sampling.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chirogrid {

namespace {
constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr int kMaxRejections = 10000;
}  // namespace

std::string domain_name(Domain d) { return d == Domain::Ball ? "ball" : "cube"; }

Domain domain_from_name(const std::string& s) {
    if (s == "ball") return Domain::Ball;
    if (s == "cube") return Domain::Cube;
    throw std::invalid_argument("domain_from_name: expected 'ball' or 'cube'");
}

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t CounterRng::next() { return mix64(key ^ mix64(counter++ * kGolden)); }

uint64_t derive_seed(uint64_t seed, uint64_t trial) {
    return mix64(seed + (trial + 1) * kGolden);
}

Rat sample_coordinate(CounterRng& rng, int bits) {
    if (bits < 1) throw std::invalid_argument("sample_coordinate: bits must be >= 1");
    Int k = 0;
    for (int have = 0; have < bits; have += 64) {
        k <<= 64;
        k |= Int(static_cast<unsigned long>(rng.next()));
    }
    mpz_fdiv_r_2exp(k.get_mpz_t(), k.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    Int pow = Int(1) << bits;
    Rat r(2 * k + 1 - pow, pow);
    r.canonicalize();
    return r;
}

Point sample_point(CounterRng& rng, int d, int bits, Domain domain) {
    if (d < 1) throw std::invalid_argument("sample_point: d must be >= 1");
    if (domain == Domain::Ball && d >= 5)
        throw std::invalid_argument("sample_point: ball sampling unsupported for d >= 5");
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        Point p(d);
        for (int c = 0; c < d; ++c) p[c] = sample_coordinate(rng, bits);
        if (domain == Domain::Cube) return p;
        Rat norm2 = 0;
        for (const auto& x : p) norm2 += x * x;
        if (norm2 <= 1) return p;
    }
    throw std::runtime_error("sample_point: rejection cap exceeded (RNG fault?)");
}

PointConfig sample_config(const SamplerConfig& cfg) {
    if (cfg.n < cfg.d + 1)
        throw std::invalid_argument("sample_config: need n >= d+1");
    CounterRng rng{cfg.seed, 0};
    PointConfig out;
    out.d = cfg.d;
    out.n = cfg.n;
    out.points.reserve(cfg.n);
    for (long i = 0; i < cfg.n; ++i)
        out.points.push_back(sample_point(rng, cfg.d, cfg.precision_bits, cfg.domain));
    return out;
}

void save_config(std::ostream& os, const PointConfig& cfg) {
    os << "pointset " << cfg.d << ' ' << cfg.n << '\n';
    for (const auto& p : cfg.points) {
        for (size_t c = 0; c < p.size(); ++c) {
            if (c) os << ' ';
            os << p[c];
        }
        os << '\n';
    }
}

namespace {

Rat parse_rat(const std::string& tok, long line) {
    Rat r;
    if (r.set_str(tok, 10) != 0 || r.get_den() == 0) {
        throw std::runtime_error("load_config: malformed rational '" + tok +
                                 "' on line " + std::to_string(line));
    }
    r.canonicalize();
    return r;
}

}  // namespace

PointConfig load_config(std::istream& is) {
    PointConfig cfg;
    std::string line;
    long lineno = 0;
    bool have_header = false;
    long rows = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "pointset" || !(ls >> cfg.d >> cfg.n) || cfg.d < 1 || cfg.n < 0)
                throw std::runtime_error("load_config: bad header on line " +
                                         std::to_string(lineno));
            have_header = true;
            continue;
        }
        Point p;
        p.push_back(parse_rat(tok, lineno));
        while (ls >> tok) p.push_back(parse_rat(tok, lineno));
        if (static_cast<int>(p.size()) != cfg.d)
            throw std::runtime_error("load_config: expected " + std::to_string(cfg.d) +
                                     " coordinates on line " + std::to_string(lineno));
        cfg.points.push_back(std::move(p));
        ++rows;
    }
    if (!have_header) throw std::runtime_error("load_config: missing header");
    if (rows != cfg.n)
        throw std::runtime_error("load_config: header declares " + std::to_string(cfg.n) +
                                 " points, found " + std::to_string(rows));
    return cfg;
}

void save_config_file(const std::string& path, const PointConfig& cfg) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_config_file: cannot open " + path);
    save_config(os, cfg);
}

PointConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_config_file: cannot open " + path);
    return load_config(is);
}

}  // namespace chirogrid
