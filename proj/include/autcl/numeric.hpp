#pragma once

#include <vector>

namespace autcl {

// Divisors of n in increasing order, n >= 1.
std::vector<int> divisors(int n);

int tau(int n);    // number of divisors
int sigma(int n);  // sum of divisors
int totient(int n);

bool is_prime(int n);

// True iff n = base^exp for a prime base and exp >= 1.
bool is_prime_power(int n, int* base = nullptr, int* exp = nullptr);

}  // namespace autcl
