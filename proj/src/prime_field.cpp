#include "dapg/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace dapg {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; static_cast<long long>(f) * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

namespace {

int mod_pow(long long base, long long exp, int mod) {
    long long r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int smallest_factor(int n) {
    for (int f = 2; static_cast<long long>(f) * f <= n; ++f) {
        if (n % f == 0) return f;
    }
    return n;
}

}  // namespace

PrimeDim make_prime_dim(int d) {
    if (d == 2) {
        throw std::invalid_argument("make_prime_dim: d = 2 is excluded; need an odd prime");
    }
    if (d < 3) {
        throw std::invalid_argument("make_prime_dim: d must be at least 3 (got " +
                                    std::to_string(d) + ")");
    }
    if (!is_prime(d)) {
        throw std::invalid_argument("make_prime_dim: d = " + std::to_string(d) +
                                    " is composite (divisible by " +
                                    std::to_string(smallest_factor(d)) + ")");
    }

    PrimeDim p;
    p.d = d;
    p.inverses.assign(d, 0);
    for (int k = 1; k < d; ++k) {
        p.inverses[k] = mod_pow(k, d - 2, d);  // Fermat: k^(d-2) = k^-1 mod d
    }
    p.inv2 = p.inverses[2];
    return p;
}

int half(long long x, const PrimeDim& p) {
    return p.reduce(static_cast<long long>(p.reduce(x)) * p.inv2);
}

}  // namespace dapg
