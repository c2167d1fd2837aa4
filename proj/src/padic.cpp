#include "symchar/padic.hpp"

#include <stdexcept>

namespace symchar {

PAdicDigits p_adic_digits(long long n, long long p) {
    if (!is_prime(p)) throw std::domain_error("p_adic_digits: p is not prime");
    if (n < 0) throw std::domain_error("p_adic_digits: negative n");
    PAdicDigits out;
    out.p = p;
    while (n > 0) {
        out.digits.push_back(static_cast<int>(n % p));
        n /= p;
    }
    return out;
}

bool is_p_adic_type(const Partition& beta, long long p) {
    const auto digits = p_adic_digits(beta.n(), p).digits;

    // Sum of parts exactly divisible by p^i, per i.
    std::vector<long long> sums(digits.size(), 0);
    for (int part : beta.parts()) {
        long long v = part;
        std::size_t i = 0;
        while (v % p == 0) { v /= p; ++i; }
        if (i >= sums.size()) sums.resize(i + 1, 0);
        sums[i] += part;
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
        long long expected =
            i < digits.size() ? digits[i] * ipow(p, static_cast<int>(i)) : 0;
        if (sums[i] != expected) return false;
    }
    return true;
}

int kummer_valuation(long long a, long long b, long long p) {
    if (!is_prime(p)) throw std::domain_error("kummer_valuation: p is not prime");
    if (a < 0 || b < 0) throw std::domain_error("kummer_valuation: negative argument");
    int carries = 0;
    long long carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long long digit = a % p + b % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += static_cast<int>(carry);
        a /= p;
        b /= p;
    }
    return carries;
}

} // namespace symchar
