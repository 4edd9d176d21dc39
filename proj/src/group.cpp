#include "ggraph/group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "ggraph/num.hpp"
#include "ggraph/simple_groups.hpp"

namespace ggraph {

namespace {
// Orders at or below this get a frozen multiplication table.
constexpr long kTableCap = 4096;
constexpr int kMaxWidth = 255;
}  // namespace

struct FiniteGroup::Impl {
    enum class Kind { Table, Cyclic, Dihedral, Quaternion, Product, Closure };

    Kind kind = Kind::Table;
    long n = 0;
    std::string name;
    std::vector<std::string> disp;
    std::vector<long> ord;
    std::vector<int> invv;
    bool abelian = false;

    // Table
    std::vector<uint16_t> table;

    // Dihedral: rot rotations, indices [0, rot) are r^i, [rot, 2*rot) are r^i s.
    long rot = 0;
    // Quaternion: half = |<a>|, quarter = half/2; indices [0, half) are a^i,
    // [half, 2*half) are a^i b, and b^2 = a^quarter.
    long half = 0, quarter = 0;

    // Product, row-major over factor indices.
    std::vector<FiniteGroup> factors;

    // Closure: one element per width-byte word, hash index for lookups.
    struct SvHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    int width = 0;
    std::vector<uint8_t> elems;
    std::unordered_map<std::string, int, SvHash, std::equal_to<>> index;
    ComposeFn compose;
    std::vector<int> gen_ids;

    int mul(int a, int b) const {
        switch (kind) {
            case Kind::Table:
                return table[std::size_t(a) * n + b];
            case Kind::Cyclic:
                return int((a + long(b)) % n);
            case Kind::Dihedral: {
                long i = a % rot, k = b % rot;
                bool fa = a >= rot, fb = b >= rot;
                long r = fa ? (i - k) % rot : (i + k) % rot;
                if (r < 0) r += rot;
                return int((fa != fb) ? rot + r : r);
            }
            case Kind::Quaternion: {
                long i = a % half, k = b % half;
                bool fa = a >= half, fb = b >= half;
                long r = fa ? i - k : i + k;
                if (fa && fb) r += quarter;
                r %= half;
                if (r < 0) r += half;
                return int((fa != fb) ? half + r : r);
            }
            case Kind::Product: {
                long ia = a, ib = b, out = 0;
                // decode from the last factor, multiply, re-encode
                long radix[16];
                int comp[16];
                int m = int(factors.size());
                for (int f = m - 1; f >= 0; --f) {
                    long sz = factors[f].order();
                    int ca = int(ia % sz), cb = int(ib % sz);
                    ia /= sz;
                    ib /= sz;
                    comp[f] = factors[f].mul(ca, cb);
                    radix[f] = sz;
                }
                for (int f = 0; f < m; ++f) out = out * radix[f] + comp[f];
                return int(out);
            }
            case Kind::Closure: {
                uint8_t buf[kMaxWidth];
                compose(elems.data() + std::size_t(a) * width,
                        elems.data() + std::size_t(b) * width, buf);
                auto it = index.find(std::string_view(reinterpret_cast<const char*>(buf),
                                                     std::size_t(width)));
                if (it == index.end())
                    throw GroupConstructionError(name + ": product left the closed element set");
                return it->second;
            }
        }
        return 0;
    }
};

namespace {

using Impl = FiniteGroup::Impl;

// Walk power chains to fill element orders and inverses; requires mul.
void compute_chains(Impl& g) {
    g.ord.assign(g.n, 1);
    g.invv.assign(g.n, 0);
    for (long e = 1; e < g.n; ++e) {
        int x = int(e), prev = 0;
        long k = 1;
        while (x != 0) {
            if (++k > g.n + 1)
                throw GroupConstructionError(g.name + ": power chain does not reach identity");
            prev = x;
            x = g.mul(x, int(e));
        }
        g.ord[e] = k;
        g.invv[e] = prev;
    }
}

void verify_axioms(Impl& g) {
    for (long e = 0; e < g.n; ++e) {
        if (g.mul(0, int(e)) != e || g.mul(int(e), 0) != e)
            throw GroupConstructionError(g.name + ": index 0 is not an identity");
        if (g.mul(int(e), g.invv[e]) != 0 || g.mul(g.invv[e], int(e)) != 0)
            throw GroupConstructionError(g.name + ": bad inverse for element " + std::to_string(e));
        if (g.n % g.ord[e] != 0)
            throw GroupConstructionError(g.name + ": element order does not divide group order");
    }
    auto check = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw GroupConstructionError(g.name + ": associativity fails at (" +
                                         std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
    };
    if (g.n <= 64) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0xc0ffee ^ uint64_t(g.n));
        std::uniform_int_distribution<long> pick(0, g.n - 1);
        for (int t = 0; t < 100000; ++t)
            check(int(pick(rng)), int(pick(rng)), int(pick(rng)));
    }
}

void check_cap(long order, long cap, const std::string& name) {
    if (order > cap)
        throw OrderLimitExceeded(name + " has order " + std::to_string(order) +
                                 ", cap is " + std::to_string(cap));
}

// Freeze a rule-described group into a table-backed Impl.
std::shared_ptr<Impl> make_table(const std::string& name, long n,
                                 const std::function<int(int, int)>& mulfn,
                                 const std::function<std::string(int)>& dispfn, bool abelian) {
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Table;
    g->n = n;
    g->name = name;
    g->abelian = abelian;
    g->table.resize(std::size_t(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            int v = mulfn(int(a), int(b));
            if (v < 0 || v >= n)
                throw GroupConstructionError(name + ": product index out of range");
            g->table[std::size_t(a) * n + b] = uint16_t(v);
        }
    g->disp.reserve(n);
    for (long e = 0; e < n; ++e) g->disp.push_back(dispfn(int(e)));
    compute_chains(*g);
    verify_axioms(*g);
    return g;
}

std::shared_ptr<Impl> build_cyclic(long n, long cap) {
    std::string name = "Z(" + std::to_string(n) + ")";
    if (n < 1) throw InvalidParameter(name + ": modulus must be >= 1");
    check_cap(n, cap, name);
    auto dispfn = [](int e) { return std::to_string(e); };
    if (n <= kTableCap)
        return make_table(name, n, [n](int a, int b) { return int((a + long(b)) % n); }, dispfn,
                          true);
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Cyclic;
    g->n = n;
    g->name = name;
    g->abelian = true;
    g->ord.resize(n);
    g->invv.resize(n);
    g->disp.reserve(n);
    for (long e = 0; e < n; ++e) {
        g->ord[e] = n / std::gcd(n, e);
        g->invv[e] = int((n - e) % n);
        g->disp.push_back(std::to_string(e));
    }
    verify_axioms(*g);
    return g;
}

std::string dihedral_disp(long rot, int e) {
    long i = e % rot;
    bool flip = e >= rot;
    std::string base = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (!flip) return base.empty() ? "e" : base;
    return base.empty() ? "s" : base + " s";
}

std::shared_ptr<Impl> build_dihedral(long m, long cap) {
    std::string name = "D(" + std::to_string(m) + ")";
    if (m < 2 || m % 2 != 0)
        throw InvalidParameter(name + ": parameter is the group order and must be even, >= 2");
    check_cap(m, cap, name);
    long rot = m / 2;
    auto rule = [rot](int a, int b) {
        long i = a % rot, k = b % rot;
        bool fa = a >= rot, fb = b >= rot;
        long r = fa ? (i - k) % rot : (i + k) % rot;
        if (r < 0) r += rot;
        return int((fa != fb) ? rot + r : r);
    };
    auto dispfn = [rot](int e) { return dihedral_disp(rot, e); };
    if (m <= kTableCap) return make_table(name, m, rule, dispfn, rot <= 2);
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Dihedral;
    g->n = m;
    g->name = name;
    g->rot = rot;
    g->abelian = false;
    g->ord.resize(m);
    g->invv.resize(m);
    g->disp.reserve(m);
    for (long e = 0; e < m; ++e) {
        if (e < rot) {
            g->ord[e] = rot / std::gcd(rot, e);
            g->invv[e] = int((rot - e) % rot);
        } else {
            g->ord[e] = 2;
            g->invv[e] = int(e);
        }
        g->disp.push_back(dispfn(int(e)));
    }
    verify_axioms(*g);
    return g;
}

std::string quaternion_disp(long half, int e) {
    long i = e % half;
    bool flip = e >= half;
    std::string base = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    if (!flip) return base.empty() ? "e" : base;
    return base.empty() ? "b" : base + " b";
}

std::shared_ptr<Impl> build_quaternion(long m, long cap) {
    std::string name = "Q(" + std::to_string(m) + ")";
    if (!is_power_of_two(m) || m < 8)
        throw InvalidParameter(name + ": parameter must be a power of two, >= 8");
    check_cap(m, cap, name);
    long half = m / 2, quarter = m / 4;
    auto rule = [half, quarter](int a, int b) {
        long i = a % half, k = b % half;
        bool fa = a >= half, fb = b >= half;
        long r = fa ? i - k : i + k;
        if (fa && fb) r += quarter;
        r %= half;
        if (r < 0) r += half;
        return int((fa != fb) ? half + r : r);
    };
    auto dispfn = [half](int e) { return quaternion_disp(half, e); };
    if (m <= kTableCap) return make_table(name, m, rule, dispfn, false);
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Quaternion;
    g->n = m;
    g->name = name;
    g->half = half;
    g->quarter = quarter;
    g->abelian = false;
    g->ord.resize(m);
    g->invv.resize(m);
    g->disp.reserve(m);
    for (long e = 0; e < m; ++e) {
        long i = e % half;
        if (e < half) {
            g->ord[e] = half / std::gcd(half, i);
            g->invv[e] = int((half - i) % half);
        } else {
            g->ord[e] = 4;
            g->invv[e] = int(half + (i + quarter) % half);
        }
        g->disp.push_back(dispfn(int(e)));
    }
    verify_axioms(*g);
    return g;
}

std::shared_ptr<Impl> build_product(const std::string& name, std::vector<FiniteGroup> factors,
                                    long cap) {
    long n = 1;
    for (auto& f : factors) {
        if (f.order() > cap / n)
            throw OrderLimitExceeded(name + " exceeds the order cap " + std::to_string(cap));
        n *= f.order();
    }
    if (factors.size() > 16)
        throw InvalidParameter(name + ": at most 16 direct factors supported");
    auto decode = [&](long e, int* comp) {
        for (int f = int(factors.size()) - 1; f >= 0; --f) {
            long sz = factors[f].order();
            comp[f] = int(e % sz);
            e /= sz;
        }
    };
    auto dispfn = [&](int e) {
        int comp[16];
        decode(e, comp);
        std::string s = "(";
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f) s += ",";
            s += factors[f].display(comp[f]);
        }
        return s + ")";
    };
    bool abelian = std::all_of(factors.begin(), factors.end(),
                               [](const FiniteGroup& f) { return f.is_abelian(); });
    if (n <= kTableCap) {
        auto mulfn = [&](int a, int b) {
            int ca[16], cb[16];
            decode(a, ca);
            decode(b, cb);
            long out = 0;
            for (std::size_t f = 0; f < factors.size(); ++f)
                out = out * factors[f].order() + factors[f].mul(ca[f], cb[f]);
            return int(out);
        };
        return make_table(name, n, mulfn, dispfn, abelian);
    }
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Product;
    g->n = n;
    g->name = name;
    g->abelian = abelian;
    g->ord.resize(n);
    g->invv.resize(n);
    g->disp.reserve(n);
    int comp[16];
    for (long e = 0; e < n; ++e) {
        decode(e, comp);
        long o = 1, iv = 0;
        std::string d = "(";
        for (std::size_t f = 0; f < factors.size(); ++f) {
            o = std::lcm(o, factors[f].element_order(comp[f]));
            iv = iv * factors[f].order() + factors[f].inv(comp[f]);
            if (f) d += ",";
            d += factors[f].display(comp[f]);
        }
        g->ord[e] = o;
        g->invv[e] = int(iv);
        g->disp.push_back(d + ")");
    }
    g->factors = std::move(factors);
    verify_axioms(*g);
    return g;
}

}  // namespace

// --- FiniteGroup forwarding ---

long FiniteGroup::order() const { return impl_->n; }
const std::string& FiniteGroup::name() const { return impl_->name; }
int FiniteGroup::mul(int a, int b) const { return impl_->mul(a, b); }
int FiniteGroup::inv(int a) const { return impl_->invv[a]; }
long FiniteGroup::element_order(int g) const { return impl_->ord[g]; }
const std::string& FiniteGroup::display(int g) const { return impl_->disp[g]; }
bool FiniteGroup::is_abelian() const { return impl_->abelian; }

std::vector<int> FiniteGroup::cyclic_subgroup(int g) const {
    std::vector<int> out{0};
    int x = g;
    while (x != 0) {
        out.push_back(x);
        x = mul(x, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int FiniteGroup::power(int g, long k) const {
    long o = element_order(g);
    k %= o;
    if (k < 0) k += o;
    int x = 0;
    for (long i = 0; i < k; ++i) x = mul(x, g);
    return x;
}

std::vector<int> FiniteGroup::elements_of_order(long k) const {
    std::vector<int> out;
    for (long e = 0; e < impl_->n; ++e)
        if (impl_->ord[e] == k) out.push_back(int(e));
    return out;
}

std::vector<int> FiniteGroup::center() const {
    const Impl& g = *impl_;
    std::vector<int> out;
    if (g.abelian) {
        out.resize(g.n);
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    switch (g.kind) {
        case Impl::Kind::Dihedral:
            out.push_back(0);
            if (g.rot % 2 == 0) out.push_back(int(g.rot / 2));
            break;
        case Impl::Kind::Quaternion:
            out = {0, int(g.quarter)};
            break;
        case Impl::Kind::Product: {
            std::vector<std::vector<int>> zc;
            for (auto& f : g.factors) zc.push_back(f.center());
            // cross product in row-major order keeps the result sorted
            std::vector<long> acc{0};
            for (std::size_t f = 0; f < g.factors.size(); ++f) {
                std::vector<long> next;
                for (long base : acc)
                    for (int z : zc[f]) next.push_back(base * g.factors[f].order() + z);
                acc = std::move(next);
            }
            for (long e : acc) out.push_back(int(e));
            break;
        }
        case Impl::Kind::Closure:
            if (!g.gen_ids.empty()) {
                for (long e = 0; e < g.n; ++e) {
                    bool c = true;
                    for (int h : g.gen_ids)
                        if (g.mul(int(e), h) != g.mul(h, int(e))) {
                            c = false;
                            break;
                        }
                    if (c) out.push_back(int(e));
                }
                break;
            }
            [[fallthrough]];
        default:
            for (long e = 0; e < g.n; ++e) {
                bool c = true;
                for (long h = 0; h < g.n && c; ++h) c = g.mul(int(e), int(h)) == g.mul(int(h), int(e));
                if (c) out.push_back(int(e));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> FiniteGroup::unique_involution() const {
    int found = -1;
    for (long e = 1; e < impl_->n; ++e)
        if (impl_->ord[e] == 2) {
            if (found >= 0) return std::nullopt;
            found = int(e);
        }
    return found >= 0 ? std::optional<int>(found) : std::nullopt;
}

bool FiniteGroup::is_cyclic() const {
    for (long e = 0; e < impl_->n; ++e)
        if (impl_->ord[e] == impl_->n) return true;
    return impl_->n == 1;
}

// --- closure builder ---

FiniteGroup closure_group(const std::string& name, int width,
                          const std::vector<std::vector<uint8_t>>& generators,
                          const std::vector<uint8_t>& identity, ComposeFn compose,
                          DisplayFn display, long order_cap,
                          std::optional<long> expected_order) {
    if (width < 1 || width > kMaxWidth)
        throw InvalidParameter(name + ": element width out of range");
    auto g = std::make_shared<Impl>();
    g->kind = Impl::Kind::Closure;
    g->name = name;
    g->width = width;
    g->compose = compose;

    auto key_of = [width](const uint8_t* p) {
        return std::string(reinterpret_cast<const char*>(p), std::size_t(width));
    };
    auto push = [&](const uint8_t* p) -> int {
        auto [it, fresh] = g->index.try_emplace(key_of(p), int(g->elems.size() / width));
        if (fresh) {
            g->elems.insert(g->elems.end(), p, p + width);
            if (long(g->index.size()) > order_cap)
                throw OrderLimitExceeded(name + " closure exceeds the order cap " +
                                         std::to_string(order_cap));
        }
        return it->second;
    };

    push(identity.data());
    std::vector<uint8_t> buf(width);
    for (std::size_t head = 0; head * width < g->elems.size(); ++head) {
        for (auto& gen : generators) {
            std::vector<uint8_t> cur(g->elems.begin() + head * width,
                                     g->elems.begin() + (head + 1) * width);
            compose(cur.data(), gen.data(), buf.data());
            push(buf.data());
        }
    }
    g->n = long(g->index.size());
    if (expected_order && g->n != *expected_order)
        throw GroupConstructionError(name + ": closure has order " + std::to_string(g->n) +
                                     ", expected " + std::to_string(*expected_order));

    for (auto& gen : generators) {
        auto it = g->index.find(key_of(gen.data()));
        int id = it->second;
        if (id != 0 && std::find(g->gen_ids.begin(), g->gen_ids.end(), id) == g->gen_ids.end())
            g->gen_ids.push_back(id);
    }
    bool abelian = true;
    for (std::size_t i = 0; i < g->gen_ids.size() && abelian; ++i)
        for (std::size_t j = i + 1; j < g->gen_ids.size() && abelian; ++j)
            abelian = g->mul(g->gen_ids[i], g->gen_ids[j]) == g->mul(g->gen_ids[j], g->gen_ids[i]);
    g->abelian = abelian;

    if (g->n <= kTableCap) {
        // freeze into a table; closure lookups only pay off while building
        auto mulfn = [&](int a, int b) { return g->mul(a, b); };
        auto dispfn = [&](int e) { return display(g->elems.data() + std::size_t(e) * width); };
        auto t = make_table(name, g->n, mulfn, dispfn, abelian);
        return FiniteGroup(std::move(t));
    }
    g->disp.reserve(g->n);
    for (long e = 0; e < g->n; ++e)
        g->disp.push_back(display(g->elems.data() + std::size_t(e) * width));
    compute_chains(*g);
    verify_axioms(*g);
    return FiniteGroup(std::move(g));
}

// --- permutation words ---

std::vector<uint8_t> perm_identity(int degree) {
    std::vector<uint8_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<uint8_t> perm_from_cycles(const std::string& cycles, int degree) {
    std::vector<std::vector<int>> parsed;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> SyntaxError { return SyntaxError(msg, i); };
    int maxpt = 0;
    while (i < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
            ++i;
            continue;
        }
        if (cycles[i] != '(') throw fail("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        while (true) {
            while (i < cycles.size() &&
                   (std::isspace(static_cast<unsigned char>(cycles[i])) || cycles[i] == ','))
                ++i;
            if (i >= cycles.size()) throw fail("unterminated cycle");
            if (cycles[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(cycles[i])))
                throw fail("expected point number in cycle");
            int v = 0;
            while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i])))
                v = v * 10 + (cycles[i++] - '0');
            if (v < 1 || v > kMaxWidth) throw fail("cycle points must be in 1..255");
            cyc.push_back(v);
            maxpt = std::max(maxpt, v);
        }
        parsed.push_back(std::move(cyc));
    }
    if (degree == 0) degree = std::max(maxpt, 1);
    if (maxpt > degree) throw SyntaxError("cycle point exceeds the degree", 0);
    auto p = perm_identity(degree);
    for (auto& cyc : parsed) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
            if (p[from] != from)
                throw SyntaxError("point " + std::to_string(from + 1) + " repeated across cycles",
                                  0);
            p[from] = uint8_t(to);
        }
    }
    return p;
}

std::string perm_to_cycles(const uint8_t* p, int degree) {
    std::string out;
    std::vector<bool> seen(degree, false);
    for (int s = 0; s < degree; ++s) {
        if (seen[s] || p[s] == s) continue;
        out += "(";
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += " ";
            out += std::to_string(x + 1);
            first = false;
            x = p[x];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

FiniteGroup perm_closure_group(const std::string& name, int degree,
                               const std::vector<std::vector<uint8_t>>& gens, long order_cap,
                               std::optional<long> expected_order) {
    // product pq acts as "p then q"
    ComposeFn compose = [degree](const uint8_t* a, const uint8_t* b, uint8_t* out) {
        for (int i = 0; i < degree; ++i) out[i] = b[a[i]];
    };
    DisplayFn display = [degree](const uint8_t* p) { return perm_to_cycles(p, degree); };
    return closure_group(name, degree, gens, perm_identity(degree), compose, display, order_cap,
                         expected_order);
}

// --- atom dispatch ---

namespace {

long checked_factorial(long n, long cap, const std::string& name) {
    long f = 1;
    for (long i = 2; i <= n; ++i) {
        if (f > cap * 2) throw OrderLimitExceeded(name + " exceeds the order cap");
        f *= i;
    }
    return f;
}

FiniteGroup build_sym(long n, long cap) {
    std::string name = "Sym(" + std::to_string(n) + ")";
    if (n < 1) throw InvalidParameter(name + ": degree must be >= 1");
    long expected = checked_factorial(n, cap, name);
    check_cap(expected, cap, name);
    if (n == 1) return FiniteGroup(build_cyclic(1, cap));
    std::vector<std::vector<uint8_t>> gens;
    gens.push_back(perm_from_cycles("(1 2)", int(n)));
    if (n > 2) {
        std::string full = "(";
        for (long i = 1; i <= n; ++i) full += (i > 1 ? " " : "") + std::to_string(i);
        full += ")";
        gens.push_back(perm_from_cycles(full, int(n)));
    }
    return perm_closure_group(name, int(n), gens, cap, expected);
}

FiniteGroup build_alt(long n, long cap) {
    std::string name = "Alt(" + std::to_string(n) + ")";
    if (n < 1) throw InvalidParameter(name + ": degree must be >= 1");
    if (n <= 2) return FiniteGroup(build_cyclic(1, cap));
    long expected = checked_factorial(n, cap, name) / 2;
    check_cap(expected, cap, name);
    std::vector<std::vector<uint8_t>> gens;
    gens.push_back(perm_from_cycles("(1 2 3)", int(n)));
    if (n > 3) {
        // (1..n) for odd n, (2..n) for even n; both are even permutations
        long start = (n % 2 == 1) ? 1 : 2;
        std::string cyc = "(";
        for (long i = start; i <= n; ++i) cyc += (i > start ? " " : "") + std::to_string(i);
        cyc += ")";
        gens.push_back(perm_from_cycles(cyc, int(n)));
    }
    return perm_closure_group(name, int(n), gens, cap, expected);
}

FiniteGroup build_perm(const AtomSpec& a, long cap) {
    if (a.strs.empty()) throw InvalidParameter("Perm needs at least one generator string");
    int degree = 1;
    for (auto& s : a.strs) {
        auto p = perm_from_cycles(s, 0);
        degree = std::max(degree, int(p.size()));
    }
    std::vector<std::vector<uint8_t>> gens;
    for (auto& s : a.strs) gens.push_back(perm_from_cycles(s, degree));
    return perm_closure_group(a.text(), degree, gens, cap, std::nullopt);
}

FiniteGroup build_atom(const AtomSpec& a, const BuildOptions& opt) {
    long cap = opt.order_cap;
    auto need_nums = [&](std::size_t k) {
        if (a.nums.size() != k || !a.strs.empty())
            throw InvalidParameter(a.atom + " expects " + std::to_string(k) +
                                   " integer argument(s)");
    };
    if (a.atom == "Z") {
        need_nums(1);
        return FiniteGroup(build_cyclic(a.nums[0], cap));
    }
    if (a.atom == "D") {
        need_nums(1);
        return FiniteGroup(build_dihedral(a.nums[0], cap));
    }
    if (a.atom == "Q") {
        need_nums(1);
        return FiniteGroup(build_quaternion(a.nums[0], cap));
    }
    if (a.atom == "ElemAb") {
        need_nums(2);
        long p = a.nums[0], k = a.nums[1];
        if (!is_prime(p)) throw InvalidParameter("ElemAb: " + std::to_string(p) + " is not prime");
        if (k < 1 || k > 16) throw InvalidParameter("ElemAb: exponent must be in 1..16");
        long order = 1;
        for (long i = 0; i < k; ++i) {
            if (order > cap / p) throw OrderLimitExceeded(a.text() + " exceeds the order cap");
            order *= p;
        }
        std::vector<FiniteGroup> fs(k, FiniteGroup(build_cyclic(p, cap)));
        return FiniteGroup(build_product(a.text(), std::move(fs), cap));
    }
    if (a.atom == "Sym") {
        need_nums(1);
        return build_sym(a.nums[0], cap);
    }
    if (a.atom == "Alt") {
        need_nums(1);
        return build_alt(a.nums[0], cap);
    }
    if (a.atom == "SL") {
        need_nums(2);
        if (a.nums[0] != 2) throw InvalidParameter("SL: only degree 2 is supported");
        return build_sl2(a.nums[1], cap);
    }
    if (a.atom == "PSL") {
        need_nums(2);
        if (a.nums[0] != 2) throw InvalidParameter("PSL: only degree 2 is supported");
        return build_psl2(a.nums[1], cap);
    }
    if (a.atom == "M11") {
        if (!a.nums.empty() || !a.strs.empty()) throw InvalidParameter("M11 takes no arguments");
        return build_m11(cap);
    }
    if (a.atom == "Perm") {
        if (!a.nums.empty()) throw InvalidParameter("Perm takes only generator strings");
        return build_perm(a, cap);
    }
    throw InvalidParameter("unknown atom " + a.atom);
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opt) {
    if (spec.factors.empty()) throw InvalidParameter("empty group spec");
    std::vector<FiniteGroup> parts;
    for (auto& a : spec.factors) parts.push_back(build_atom(a, opt));
    if (parts.size() == 1) return parts[0];
    return FiniteGroup(build_product(spec.text(), std::move(parts), opt.order_cap));
}

FiniteGroup build_group(const std::string& spec_text, const BuildOptions& opt) {
    return build_group(parse_group_spec(spec_text), opt);
}

}  // namespace ggraph
