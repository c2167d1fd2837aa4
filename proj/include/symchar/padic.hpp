#pragma once

#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

// Base-p digits of n, least significant first; empty for n = 0.
struct PAdicDigits {
    long long p = 0;
    std::vector<int> digits;
};

// Throws std::domain_error unless p is prime and n >= 0.
PAdicDigits p_adic_digits(long long n, long long p);

// True iff for every i >= 0, the parts of beta exactly divisible by p^i sum
// to a_i p^i, where the a_i are the base-p digits of |beta|.
bool is_p_adic_type(const Partition& beta, long long p);

// nu_p(binomial(a+b, b)) as the number of carries when adding a and b in
// base p.
int kummer_valuation(long long a, long long b, long long p);

} // namespace symchar
