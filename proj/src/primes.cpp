#include "tightgon/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace tightgon {

std::vector<int> primes_up_to(int limit) {
    if (limit < 2)
        return {};
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (int i = 2; static_cast<long long>(i) * i <= limit; ++i) {
        if (composite[i])
            continue;
        for (long long j = static_cast<long long>(i) * i; j <= limit; j += i)
            composite[static_cast<size_t>(j)] = true;
    }
    std::vector<int> out;
    for (int i = 2; i <= limit; ++i)
        if (!composite[i])
            out.push_back(i);
    return out;
}

std::vector<int> odd_primes_up_to(int limit) {
    auto p = primes_up_to(limit);
    if (!p.empty() && p.front() == 2)
        p.erase(p.begin());
    return p;
}

}  // namespace tightgon
