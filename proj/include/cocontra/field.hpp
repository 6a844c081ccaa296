#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cocontra {

using Rat = mpq_class;

/// Scalar field: characteristic 0 means the rationals, otherwise a prime p.
struct Field {
    long long ch = 0;

    bool operator==(const Field&) const = default;
    bool is_rational() const { return ch == 0; }
};

Field rationals();
Field prime_field(long long p);

inline void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": field mismatch");
}

// Arithmetic mod p on canonical representatives 0..p-1.
long long mod_add(long long a, long long b, long long p);
long long mod_sub(long long a, long long b, long long p);
long long mod_mul(long long a, long long b, long long p);
long long mod_inv(long long a, long long p);
long long mod_reduce(long long a, long long p);

}  // namespace cocontra
