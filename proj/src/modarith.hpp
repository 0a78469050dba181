#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

// Word-sized modular arithmetic shared by the lifting-based solvers.
// Primes come from just under 2^62 so products fit unsigned __int128.

namespace pcp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Inverse mod a prime p; a must be nonzero mod p.
inline u64 invmod(u64 a, u64 p) {
    u64 r0 = p, r1 = a;
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        u64 q = r0 / r1;
        u64 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - static_cast<__int128>(q) * t1;
        t0 = t1;
        t1 = t2;
    }
    t0 %= static_cast<__int128>(p);
    if (t0 < 0) t0 += p;
    return static_cast<u64>(t0);
}

inline u64 mod_of(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

inline std::size_t bit_size(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

// Deterministic stream of word primes just under the mulmod ceiling.
class PrimeStream {
   public:
    PrimeStream() : p_(mpz_class(1) << 62) {}

    u64 next() {
        mpz_nextprime(p_.get_mpz_t(), p_.get_mpz_t());
        return p_.get_ui();
    }

   private:
    mpz_class p_;
};

inline std::vector<u64> lifting_primes(int count) {
    PrimeStream ps;
    std::vector<u64> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(ps.next());
    return out;
}

} // namespace pcp
