#include "autcl/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace autcl {

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<int> out;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int tau(int n) { return static_cast<int>(divisors(n).size()); }

int sigma(int n) {
    int s = 0;
    for (int d : divisors(n)) s += d;
    return s;
}

int totient(int n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(int n, int* base, int* exp) {
    if (n < 2) return false;
    int p = n;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return false;
    if (base) *base = p;
    if (exp) *exp = k;
    return true;
}

}  // namespace autcl
