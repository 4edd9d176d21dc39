#include "ggraph/catalog.hpp"

#include <algorithm>
#include <set>

#include "ggraph/num.hpp"

namespace ggraph {

namespace {

// partitions of e as descending part lists
std::vector<std::vector<int>> partitions(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

std::string invariant_factor_spec(const std::vector<long>& factors) {
    std::string s;
    for (long d : factors) {
        if (!s.empty()) s += " x ";
        s += "Z(" + std::to_string(d) + ")";
    }
    return s;
}

std::vector<std::string> abelian_specs_of(long n) {
    auto fact = factorize(n);
    // choice of one exponent partition per prime
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto& [p, e] : fact) per_prime.push_back(partitions(e));

    std::vector<std::string> out;
    std::vector<std::size_t> pick(fact.size(), 0);
    while (true) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < fact.size(); ++i)
            k = std::max(k, per_prime[i][pick[i]].size());
        // align the largest parts so consecutive factors divide each other
        std::vector<long> factors(k, 1);
        for (std::size_t i = 0; i < fact.size(); ++i) {
            const auto& parts = per_prime[i][pick[i]];
            for (std::size_t j = 0; j < parts.size(); ++j) {
                long pp = 1;
                for (int t = 0; t < parts[j]; ++t) pp *= fact[i].first;
                factors[j] *= pp;
            }
        }
        std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
        out.push_back(invariant_factor_spec(factors));

        std::size_t i = 0;
        for (; i < fact.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == fact.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::string> abelian_specs_upto(long max_order) {
    std::vector<std::string> out;
    for (long n = 2; n <= max_order; ++n)
        for (auto& s : abelian_specs_of(n)) out.push_back(s);
    return out;
}

std::vector<std::string> abelian_p_group_specs_upto(long max_order) {
    std::vector<std::string> out;
    for (long n = 2; n <= max_order; ++n) {
        if (!is_prime_power(n)) continue;
        for (auto& s : abelian_specs_of(n)) out.push_back(s);
    }
    return out;
}

std::vector<std::string> cyclic_specs_upto(long max_m) {
    std::vector<std::string> out;
    for (long m = 2; m <= max_m; ++m) out.push_back("Z(" + std::to_string(m) + ")");
    return out;
}

std::vector<std::string> quaternion_specs_upto(long max_order) {
    std::vector<std::string> out;
    for (long q = 8; q <= max_order; q *= 2) out.push_back("Q(" + std::to_string(q) + ")");
    return out;
}

std::vector<std::string> named_family_specs(long max_order) {
    std::vector<std::string> out;
    for (long m = 4; m <= max_order; m += 2) out.push_back("D(" + std::to_string(m) + ")");
    for (auto& s : quaternion_specs_upto(max_order)) out.push_back(s);
    for (long m = 3; m * 8 <= max_order; m += 2)
        for (long q = 8; m * q <= max_order; q *= 2)
            out.push_back("Z(" + std::to_string(m) + ") x Q(" + std::to_string(q) + ")");
    const char* spice[] = {"Sym(3)", "Sym(4)", "Sym(5)", "Alt(4)",
                           "Alt(5)", "SL(2,3)", "SL(2,5)"};
    const long spice_order[] = {6, 24, 120, 12, 60, 24, 120};
    for (std::size_t i = 0; i < sizeof(spice) / sizeof(spice[0]); ++i)
        if (spice_order[i] <= max_order) out.push_back(spice[i]);
    return out;
}

std::vector<std::string> full_catalog(long abelian_cap, long named_cap) {
    std::vector<std::string> out = abelian_specs_upto(abelian_cap);
    std::set<std::string> seen(out.begin(), out.end());
    for (auto& s : named_family_specs(named_cap))
        if (seen.insert(s).second) out.push_back(s);
    return out;
}

}  // namespace ggraph
