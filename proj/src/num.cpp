#include "ggraph/num.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ggraph {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_prime_power(long n, long* p_out, int* k_out) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (p_out) *p_out = f[0].first;
    if (k_out) *k_out = f[0].second;
    return true;
}

long totient(long n) {
    long t = n;
    for (auto& [p, e] : factorize(n)) t -= t / p;
    return t;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t base = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace ggraph
