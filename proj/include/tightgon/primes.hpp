#pragma once

#include <vector>

namespace tightgon {

/// All primes <= limit by Eratosthenes sieve.
std::vector<int> primes_up_to(int limit);

/// Odd primes <= limit (drops 2).
std::vector<int> odd_primes_up_to(int limit);

}  // namespace tightgon
