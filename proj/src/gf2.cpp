#include "c2f/gf2.hpp"

namespace c2f {
namespace gf2x {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
    int df = degree(f);
    if (df < 0) throw std::invalid_argument("gf2x::mod by zero");
    int da = degree(a);
    while (da >= df) {
        a ^= f << (da - df);
        da = degree(a);
    }
    return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    return mod(mul(a, b), f);
}

// x^(2^e) mod f by repeated squaring.
std::uint64_t frob_pow(std::uint64_t x, unsigned e, std::uint64_t f) {
    std::uint64_t r = x;
    for (unsigned i = 0; i < e; ++i) r = mulmod(r, r, f);
    return r;
}

} // namespace

bool irreducible(std::uint64_t f) {
    int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if ((f & 1) == 0) return false; // divisible by x
    // Rabin: x^(2^n) == x mod f, and gcd(x^(2^(n/p)) - x, f) == 1 for primes p | n.
    std::uint64_t x = 2;
    if (frob_pow(x, unsigned(n), f) != x) return false;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        std::uint64_t h = frob_pow(x, unsigned(n / p), f) ^ x;
        if (gcd(h, f) != 1) return false;
    }
    return true;
}

} // namespace gf2x

Gf2m::Gf2m(unsigned k, std::uint64_t modulus) : k_(k), mod_(modulus) {
    if (k == 0 || k > 16) throw std::invalid_argument("GF(2^k): k must be in 1..16");
    if (gf2x::degree(modulus) != int(k))
        throw std::invalid_argument("GF(2^k): modulus degree must equal k");
    if (!gf2x::irreducible(modulus))
        throw std::invalid_argument("GF(2^k): modulus is reducible over GF(2)");
}

std::uint64_t Gf2m::default_modulus(unsigned k) {
    // Low-weight irreducible polynomials, one per degree 1..16.
    static const std::uint64_t table[17] = {
        0,
        0x2,     // x
        0x7,     // x^2+x+1
        0xB,     // x^3+x+1
        0x13,    // x^4+x+1
        0x25,    // x^5+x^2+1
        0x43,    // x^6+x+1
        0x83,    // x^7+x+1
        0x11B,   // x^8+x^4+x^3+x+1
        0x203,   // x^9+x+1
        0x409,   // x^10+x^3+1
        0x805,   // x^11+x^2+1
        0x1009,  // x^12+x^3+1
        0x201B,  // x^13+x^4+x^3+x+1
        0x402B,  // x^14+x^5+x^3+x+1
        0x8003,  // x^15+x+1
        0x1002B, // x^16+x^5+x^3+x+1
    };
    if (k == 0 || k > 16) throw std::invalid_argument("default modulus: k must be in 1..16");
    return table[k];
}

Gf2m Gf2m::standard(unsigned k) { return Gf2m(k, default_modulus(k)); }

gfelem Gf2m::mul(gfelem a, gfelem b) const {
    if (k_ == 1) return a & b;
    return gfelem(gf2x::mod(gf2x::mul(a, b), mod_));
}

gfelem Gf2m::pow(gfelem a, std::uint64_t e) const {
    gfelem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

gfelem Gf2m::inv(gfelem a) const {
    if (a == 0) throw std::domain_error("GF(2^k): division by zero");
    // a^(2^k - 2)
    return pow(a, (std::uint64_t(1) << k_) - 2);
}

gfelem Gf2m::sqrt(gfelem a) const {
    if (k_ == 1) return a;
    return pow(a, std::uint64_t(1) << (k_ - 1));
}

int Gf2m::trace(gfelem a) const {
    gfelem s = 0, x = a;
    for (unsigned i = 0; i < k_; ++i) {
        s ^= x;
        x = mul(x, x);
    }
    if (s != 0 && s != 1) throw std::logic_error("GF(2^k): trace not in GF(2)");
    return int(s);
}

bool Gf2m::wp_solve(gfelem c, gfelem& out) const {
    if (trace(c) != 0) return false;
    for (gfelem x = 0; x < (gfelem(1) << k_); ++x) {
        if ((mul(x, x) ^ x) == c) {
            out = x;
            return true;
        }
    }
    throw std::logic_error("GF(2^k): trace-zero element without wp-preimage");
}

gfelem Gf2m::least_trace_one() const {
    for (gfelem x = 1; x < (gfelem(1) << k_); ++x)
        if (trace(x) == 1) return x;
    throw std::logic_error("GF(2^k): no trace-one element");
}

} // namespace c2f
