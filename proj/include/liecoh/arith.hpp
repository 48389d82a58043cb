#pragma once

// Exact arithmetic substrate: GMP integers/rationals plus small helpers
// shared across the library. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; on this ABI long is 64-bit wide.
static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
inline Int int_of(long long x) { return Int(static_cast<long>(x)); }
inline Rat rat_of(long long x) { return Rat(static_cast<long>(x)); }
inline Rat rat_of(long long num, long long den) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// Integer coordinate vectors (fundamental-weight or simple-root basis).
using Coords = std::vector<long long>;

inline Int rat_floor(const Rat& q) {
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z;
}

inline long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range");
    return z.get_si();
}

// q must be an integer in disguise (den == 1) or this throws.
inline long long rat_to_ll(const Rat& q) {
    if (q.get_den() != 1) throw std::domain_error("expected integral rational");
    return to_ll(q.get_num());
}

inline Coords coords_add(const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Coords coords_sub(const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Coords coords_neg(const Coords& a) {
    Coords c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline bool coords_is_zero(const Coords& a) {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

struct CoordsHash {
    size_t operator()(const Coords& c) const {
        size_t h = 1469598103934665603ull;
        for (long long x : c) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::string coords_str(const Coords& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

// Deterministic splittable RNG (64-bit splitmix) for seeded test vectors.
// Kept here so every consumer derives streams the same way on any platform.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi] inclusive; span must be modest
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline uint64_t hash_combine64(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace liecoh
