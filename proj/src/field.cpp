#include "cocontra/field.hpp"

namespace cocontra {

static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field rationals() { return Field{0}; }

Field prime_field(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_field: characteristic must be prime");
    return Field{p};
}

long long mod_reduce(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_add(long long a, long long b, long long p) { return (a + b) % p; }
long long mod_sub(long long a, long long b, long long p) { return mod_reduce(a - b, p); }
long long mod_mul(long long a, long long b, long long p) { return (a * b) % p; }

long long mod_inv(long long a, long long p) {
    a = mod_reduce(a, p);
    if (a == 0) throw std::domain_error("mod_inv: zero is not invertible");
    // extended Euclid
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

}  // namespace cocontra
