#pragma once

#include <vector>

namespace dapg {

// Arithmetic modulo an odd prime d. Every stored value is the canonical
// representative in [0, d). The inverse of 2 is cached separately because
// the line parameterization and the basis phases both divide by 2 mod d.
struct PrimeDim {
    int d = 0;
    int inv2 = 0;                // (2 * inv2) % d == 1
    std::vector<int> inverses;   // inverses[k] * k % d == 1 for k in 1..d-1

    // canonical representative of x mod d, valid for negative x
    int reduce(long long x) const {
        long long r = x % d;
        return static_cast<int>(r < 0 ? r + d : r);
    }
};

bool is_prime(int n);

// Validates d (odd prime, >= 3) and builds the inverse tables.
// Throws std::invalid_argument naming the violated constraint otherwise.
PrimeDim make_prime_dim(int d);

// (x / 2) mod d; x may be negative or unreduced.
int half(long long x, const PrimeDim& p);

}  // namespace dapg
