#include "chirogrid/codec.hpp"

#include <cstring>
#include <map>
#include <stdexcept>

namespace chirogrid {

GridSpec grid_from_params(long n, int d, const Rat& eps) {
    if (n < 2) throw std::invalid_argument("grid_from_params: n must be >= 2");
    if (d < 1) throw std::invalid_argument("grid_from_params: d must be >= 1");
    if (eps < 0) throw std::invalid_argument("grid_from_params: eps must be >= 0");

    Int p = eps.get_num(), q = eps.get_den();
    Int e = Int(d + 1) * q + p;
    if (!e.fits_ulong_p() || !q.fits_ulong_p())
        throw std::invalid_argument("grid_from_params: exponent too large");
    Int base;
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(n), e.get_ui());

    GridSpec g;
    if (q == 1) {
        g.M = base;
    } else {
        int exact = mpz_root(g.M.get_mpz_t(), base.get_mpz_t(), q.get_ui());
        if (!exact) g.M += 1;
    }
    return g;
}

Rat round_to_grid(const Rat& x, const Int& M) {
    Rat t = x * M;
    Int a = t.get_num(), b = t.get_den();  // b > 0
    Int k;
    if (a >= 0) {
        Int num = 2 * a + b;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), Int(2 * b).get_mpz_t());
    } else {
        Int num = -2 * a + b;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), Int(2 * b).get_mpz_t());
        k = -k;
    }
    Rat r(k, M);
    r.canonicalize();
    return r;
}

Point round_point(const Point& p, const GridSpec& g) {
    Point out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(round_to_grid(x, g.M));
    return out;
}

std::vector<Point> round_config(const std::vector<Point>& pts, const GridSpec& g) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(round_point(p, g));
    return out;
}

long count_collisions(const std::vector<Point>& pts) {
    std::map<Point, long> seen;
    for (const auto& p : pts) ++seen[p];
    long pairs = 0;
    for (const auto& [_, c] : seen) pairs += c * (c - 1) / 2;
    return pairs;
}

int coord_bit_width(const Int& M) {
    if (M < 1) throw std::invalid_argument("coord_bit_width: M must be >= 1");
    return static_cast<int>(mpz_sizeinbase(M.get_mpz_t(), 2)) + 1;
}

namespace {

struct BitWriter {
    std::vector<uint8_t> bytes;
    size_t nbits = 0;

    void push(bool bit) {
        if (nbits % 8 == 0) bytes.push_back(0);
        if (bit) bytes.back() |= static_cast<uint8_t>(0x80u >> (nbits % 8));
        ++nbits;
    }
};

struct BitReader {
    const std::vector<uint8_t>& bytes;
    size_t pos = 0;

    bool next() {
        if (pos >= bytes.size() * 8) throw std::runtime_error("decode: truncated payload");
        bool bit = bytes[pos / 8] & (0x80u >> (pos % 8));
        ++pos;
        return bit;
    }
};

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32(const std::vector<uint8_t>& in, size_t& pos) {
    if (pos + 4 > in.size()) throw std::runtime_error("deserialize: truncated header");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(in[pos++]) << (8 * i);
    return v;
}

uint64_t get_u64(const std::vector<uint8_t>& in, size_t& pos) {
    if (pos + 8 > in.size()) throw std::runtime_error("deserialize: truncated header");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(in[pos++]) << (8 * i);
    return v;
}

constexpr uint8_t kMagic[4] = {'C', 'H', 'G', 'R'};
constexpr uint8_t kVersion = 1;

}  // namespace

EncodedConfig encode(const std::vector<Point>& pts, const GridSpec& g) {
    EncodedConfig e;
    e.n = static_cast<long>(pts.size());
    e.d = pts.empty() ? 0 : static_cast<int>(pts.front().size());
    e.M = g.M;
    const int w = coord_bit_width(g.M);
    Int two_w = Int(1) << w;

    BitWriter bw;
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != e.d)
            throw std::invalid_argument("encode: dimension mismatch");
        for (const auto& x : p) {
            Rat t = x * g.M;
            if (t.get_den() != 1)
                throw std::invalid_argument("encode: coordinate not on the grid");
            Int k = t.get_num();
            if (abs(k) > g.M)
                throw std::invalid_argument("encode: coordinate outside [-1, 1]");
            Int u = k < 0 ? Int(k + two_w) : k;
            for (int i = w - 1; i >= 0; --i)
                bw.push(mpz_tstbit(u.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0);
        }
    }
    e.payload = std::move(bw.bytes);
    e.payload_bits = bw.nbits;
    return e;
}

std::vector<Point> decode(const EncodedConfig& e) {
    const int w = coord_bit_width(e.M);
    if (e.payload_bits != static_cast<size_t>(e.n) * e.d * w)
        throw std::runtime_error("decode: payload length does not match header");
    if (e.payload.size() != (e.payload_bits + 7) / 8)
        throw std::runtime_error("decode: truncated payload");
    Int two_w = Int(1) << w;
    Int half = Int(1) << (w - 1);

    BitReader br{e.payload};
    std::vector<Point> pts(e.n, Point(e.d));
    for (long i = 0; i < e.n; ++i) {
        for (int c = 0; c < e.d; ++c) {
            Int u = 0;
            for (int bit = 0; bit < w; ++bit) {
                u <<= 1;
                if (br.next()) u |= 1;
            }
            Int k = u >= half ? Int(u - two_w) : u;
            Rat x(k, e.M);
            x.canonicalize();
            pts[i][c] = x;
        }
    }
    return pts;
}

std::vector<uint8_t> serialize(const EncodedConfig& e) {
    std::vector<uint8_t> out(kMagic, kMagic + 4);
    out.push_back(kVersion);
    put_u32(out, static_cast<uint32_t>(e.d));
    put_u64(out, static_cast<uint64_t>(e.n));

    size_t mlen = (mpz_sizeinbase(e.M.get_mpz_t(), 2) + 7) / 8;
    std::vector<uint8_t> mbytes(mlen);
    size_t written = 0;
    mpz_export(mbytes.data(), &written, 1, 1, 1, 0, e.M.get_mpz_t());
    put_u32(out, static_cast<uint32_t>(written));
    out.insert(out.end(), mbytes.begin(), mbytes.begin() + written);

    put_u64(out, static_cast<uint64_t>(e.payload_bits));
    out.insert(out.end(), e.payload.begin(), e.payload.end());
    return out;
}

EncodedConfig deserialize(const std::vector<uint8_t>& bytes) {
    if (bytes.size() < 5 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw std::runtime_error("deserialize: bad magic");
    if (bytes[4] != kVersion) throw std::runtime_error("deserialize: unsupported version");
    size_t pos = 5;

    EncodedConfig e;
    e.d = static_cast<int>(get_u32(bytes, pos));
    e.n = static_cast<long>(get_u64(bytes, pos));
    uint32_t mlen = get_u32(bytes, pos);
    if (pos + mlen > bytes.size()) throw std::runtime_error("deserialize: truncated header");
    mpz_import(e.M.get_mpz_t(), mlen, 1, 1, 1, 0, bytes.data() + pos);
    pos += mlen;
    if (e.M < 1) throw std::runtime_error("deserialize: invalid grid denominator");

    e.payload_bits = get_u64(bytes, pos);
    size_t nbytes = (e.payload_bits + 7) / 8;
    if (pos + nbytes != bytes.size()) throw std::runtime_error("deserialize: payload size mismatch");
    e.payload.assign(bytes.begin() + pos, bytes.end());
    if (e.payload_bits != static_cast<size_t>(e.n) * e.d * coord_bit_width(e.M))
        throw std::runtime_error("deserialize: width/M mismatch");
    return e;
}

}  // namespace chirogrid
