#include "ggraph/divisor.hpp"

#include <algorithm>

#include "ggraph/errors.hpp"
#include "ggraph/num.hpp"

namespace ggraph {

Divisor divisor_of(long d, const std::vector<std::pair<long, int>>& n_fact) {
    if (d <= 0) throw InvalidParameter("divisors must be positive, got " + std::to_string(d));
    Divisor out;
    out.exp.assign(n_fact.size(), 0);
    long rest = d;
    for (std::size_t i = 0; i < n_fact.size(); ++i)
        while (rest % n_fact[i].first == 0) {
            rest /= n_fact[i].first;
            if (++out.exp[i] > n_fact[i].second)
                throw InvalidParameter(std::to_string(d) + " does not divide the ambient n");
        }
    if (rest != 1)
        throw InvalidParameter(std::to_string(d) + " does not divide the ambient n");
    out.value = d;
    return out;
}

long phi_of(const Divisor& d, const std::vector<long>& primes) {
    long phi = 1;
    for (std::size_t i = 0; i < d.exp.size(); ++i) {
        if (d.exp[i] == 0) continue;
        long pp = 1;
        for (int k = 1; k < d.exp[i]; ++k) pp *= primes[i];
        phi *= pp * (primes[i] - 1);
    }
    return phi;
}

bool divisor_divides(const Divisor& a, const Divisor& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

bool divisors_coprime(const Divisor& a, const Divisor& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

bool symbolic_diff_adjacent(const Divisor& d1, const Divisor& d2) {
    return !divisors_coprime(d1, d2) && !divisor_divides(d1, d2) &&
           !divisor_divides(d2, d1);
}

FamilyFlags classify_family(const std::vector<Divisor>& members,
                            const std::vector<long>& primes) {
    FamilyFlags f;
    for (const Divisor& d : members) f.weight += phi_of(d, primes);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Divisor &a = members[i], &b = members[j];
            bool ab = divisor_divides(a, b), ba = divisor_divides(b, a);
            if (!ab && !ba) f.is_chain = false;
            if (ab || ba) f.is_sperner = false;
            if (divisors_coprime(a, b)) f.is_intersecting = false;
        }
    return f;
}

namespace {

// Max-weight clique over a compatibility relation on the divisor list.
// Candidates are visited in ascending index order and only strict
// improvements are kept, so the witness is the first optimum in
// lexicographic order of the index sequence.
struct FamilySearch {
    int m = 0;
    std::size_t words = 0;
    std::vector<uint64_t> compat;  // m rows
    std::vector<long> wt;
    long best = 0;
    std::vector<int> best_set, cur;

    void dfs(std::vector<uint64_t>& cand, long curw, long candw) {
        if (curw > best) {
            best = curw;
            best_set = cur;
        }
        for (std::size_t w = 0; w < words; ++w) {
            while (cand[w]) {
                if (curw + candw <= best) return;
                int v = int(w * 64) + __builtin_ctzll(cand[w]);
                cand[w] &= cand[w] - 1;
                candw -= wt[v];
                std::vector<uint64_t> next(words);
                const uint64_t* cv = compat.data() + std::size_t(v) * words;
                long nextw = 0;
                for (std::size_t k = 0; k < words; ++k) {
                    next[k] = (k < w ? 0 : k == w ? cand[w] : cand[k]) & cv[k];
                    uint64_t bits = next[k];
                    while (bits) {
                        nextw += wt[int(k * 64) + __builtin_ctzll(bits)];
                        bits &= bits - 1;
                    }
                }
                cur.push_back(v);
                dfs(next, curw + wt[v], nextw);
                cur.pop_back();
            }
        }
    }

    std::pair<long, std::vector<int>> run() {
        std::vector<uint64_t> all(words, 0);
        long total = 0;
        for (int v = 0; v < m; ++v) {
            all[std::size_t(v) / 64] |= uint64_t(1) << (v % 64);
            total += wt[v];
        }
        best = 0;
        best_set.clear();
        cur.clear();
        dfs(all, 0, total);
        return {best, best_set};
    }
};

}  // namespace

OmegaDivisorResult omega_via_divisors(long n, GraphKind kind) {
    if (kind != GraphKind::Power && kind != GraphKind::IntersectionPower &&
        kind != GraphKind::Difference)
        throw InvalidParameter("divisor clique search covers power, ipg and diff only");
    if (n < 1 || n > 1000000000000L)
        throw PreconditionFailed("n must lie in [1, 10^12], got " + std::to_string(n));
    auto fact = factorize(n);
    if (fact.size() > 12)
        throw PreconditionFailed("n must have at most 12 distinct prime factors");
    std::vector<long> divs = divisors(n);
    if (divs.size() > 4096)
        throw TooManyDivisors(std::to_string(n) + " has " + std::to_string(divs.size()) +
                              " divisors, limit is 4096");
    std::vector<long> primes;
    for (auto& [p, e] : fact) primes.push_back(p);

    std::vector<Divisor> dv;
    dv.reserve(divs.size());
    for (long d : divs) dv.push_back(divisor_of(d, fact));

    OmegaDivisorResult res;
    res.n = n;
    res.kind = kind;

    if (kind == GraphKind::Power) {
        // heaviest chain by divisibility, bottom up; smallest predecessor
        // wins ties so reconstruction is deterministic
        int m = int(divs.size());
        std::vector<long> dp(m);
        std::vector<int> from(m, -1);
        for (int i = 0; i < m; ++i) {
            dp[i] = phi_of(dv[i], primes);
            long bestp = 0;
            for (int j = 0; j < i; ++j)
                if (divs[i] % divs[j] == 0 && dp[j] > bestp) {
                    bestp = dp[j];
                    from[i] = j;
                }
            dp[i] += bestp;
        }
        int at = int(std::max_element(dp.begin(), dp.end()) - dp.begin());
        res.weight_value = dp[at];
        for (; at >= 0; at = from[at]) res.weight_witness.push_back(divs[at]);
        std::sort(res.weight_witness.begin(), res.weight_witness.end());
        return res;
    }

    // search space: divisors >= 2 (the identity divisor cannot meet
    // anything, and its element is the "+1" of the ipg convention)
    std::vector<int> keep;
    for (std::size_t i = 0; i < dv.size(); ++i)
        if (divs[i] >= 2) keep.push_back(int(i));
    int m = int(keep.size());

    FamilySearch fs;
    fs.m = m;
    fs.words = std::size_t(m + 63) / 64;
    fs.compat.assign(std::size_t(m) * fs.words, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const Divisor &a = dv[keep[i]], &b = dv[keep[j]];
            bool ok = kind == GraphKind::IntersectionPower
                          ? !divisors_coprime(a, b)
                          : symbolic_diff_adjacent(a, b);
            if (ok) fs.compat[std::size_t(i) * fs.words + std::size_t(j) / 64] |=
                uint64_t(1) << (j % 64);
        }

    auto witness_values = [&](const std::vector<int>& set) {
        std::vector<long> vals;
        for (int v : set) vals.push_back(divs[keep[v]]);
        std::sort(vals.begin(), vals.end());
        return vals;
    };

    fs.wt.assign(m, 0);
    for (int i = 0; i < m; ++i) fs.wt[i] = phi_of(dv[keep[i]], primes);
    auto [wv, wset] = fs.run();
    if (kind == GraphKind::IntersectionPower) {
        res.weight_value = 1 + wv;
        res.weight_witness = witness_values(wset);
        return res;
    }

    res.weight_value = wv;
    res.weight_witness = witness_values(wset);
    fs.wt.assign(m, 1);
    auto [cv, cset] = fs.run();
    res.card_value = cv;
    res.card_witness = witness_values(cset);
    return res;
}

SpernerFamily graph_to_sperner(const Graph& g) {
    if (g.n() < 1) throw PreconditionFailed("need at least one vertex");
    SpernerFamily f;
    f.sets.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        f.ground_labels.push_back("v" + std::to_string(v));
        f.sets[v].push_back(v);
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) {
                int e = int(f.ground_labels.size());
                f.ground_labels.push_back("e(" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
                f.sets[u].push_back(e);
                f.sets[v].push_back(e);
            }
    f.ground_size = int(f.ground_labels.size());
    return f;
}

namespace {

// first 64 primes; enough for |V| + |E| <= 64 ground members
constexpr long kPrimes[64] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
    43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

}  // namespace

CyclicEmbedding embed_in_cyclic(const Graph& g) {
    CyclicEmbedding emb;
    emb.family = graph_to_sperner(g);
    if (emb.family.ground_size > 64)
        throw GroundSetTooLarge("need " + std::to_string(emb.family.ground_size) +
                                " primes, table holds 64");
    emb.primes.assign(kPrimes, kPrimes + emb.family.ground_size);

    for (int v = 0; v < g.n(); ++v) {
        Divisor d;
        d.exp.assign(emb.family.ground_size, 0);
        for (int x : emb.family.sets[v]) d.exp[x] = 1;
        long val = 1;
        bool fits = true;
        for (int x : emb.family.sets[v]) {
            if (val > 1000000000000000000L / emb.primes[x]) {
                fits = false;
                break;
            }
            val *= emb.primes[x];
        }
        if (fits) d.value = val;
        emb.divisors.push_back(std::move(d));
    }

    emb.verified = true;
    for (int u = 0; u < g.n() && emb.verified; ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (symbolic_diff_adjacent(emb.divisors[u], emb.divisors[v]) !=
                g.adjacent(u, v)) {
                emb.verified = false;
                break;
            }
    return emb;
}

}  // namespace ggraph
