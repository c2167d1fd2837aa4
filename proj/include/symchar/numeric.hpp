#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symchar {

// All character values, degrees and centralizer orders are exact integers;
// they overflow 64 bits already near n = 25, so everything value-like is a
// cpp_int and only structural data (parts, hook lengths, interval bounds)
// stays in machine words.
using Integer = boost::multiprecision::cpp_int;

Integer factorial(long long n);
Integer binomial(long long n, long long k);

bool is_prime(long long p);
std::vector<long long> primes_up_to(long long n);

struct PrimePower {
    long long prime = 0;
    int exp = 0;
};
using Factorization = std::vector<PrimePower>; // primes ascending

// Trial division; fine for the structural range (values <= 10^6).
Factorization factorize(long long v);

// Largest e with p^e | v, for v != 0.
int p_valuation(const Integer& v, long long p);

long long ipow(long long base, int exp);

} // namespace symchar
