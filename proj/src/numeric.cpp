#include "symchar/numeric.hpp"

#include <stdexcept>

#include "symchar/common.hpp"

namespace symchar {

Integer factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step
    }
    return r;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

Factorization factorize(long long v) {
    if (v < 1) throw std::domain_error("factorize expects a positive integer");
    Factorization out;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d != 0) continue;
        int e = 0;
        while (v % d == 0) { v /= d; ++e; }
        out.push_back({d, e});
    }
    if (v > 1) out.push_back({v, 1});
    return out;
}

int p_valuation(const Integer& v, long long p) {
    internal_check(v != 0, "p_valuation of zero");
    if (p < 2) throw std::domain_error("p_valuation needs p >= 2");
    Integer x = abs(v);
    int e = 0;
    while (x % p == 0) { x /= p; ++e; }
    return e;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace symchar
