#include "ggraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include <json.hpp>

#include "ggraph/catalog.hpp"
#include "ggraph/cyclic.hpp"
#include "ggraph/divisor.hpp"
#include "ggraph/num.hpp"
#include "ggraph/simple_groups.hpp"

namespace ggraph {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::Discrepancy: return "DISCREPANCY";
        case Outcome::Unknown: return "UNKNOWN";
    }
    return "?";
}

Outcome outcome_from_name(const std::string& s) {
    if (s == "PASS") return Outcome::Pass;
    if (s == "FAIL") return Outcome::Fail;
    if (s == "DISCREPANCY") return Outcome::Discrepancy;
    if (s == "UNKNOWN") return Outcome::Unknown;
    throw SchemaError("unknown outcome \"" + s + "\"");
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["instances"] = r.instances;
    j["outcome"] = outcome_name(r.outcome);
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const Witness& w : r.witnesses)
        j["witnesses"].push_back({{"group", w.group}, {"detail", w.detail}});
    j["runtime_ms"] = r.runtime_ms;
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("report must be an object");
    for (auto& [key, val] : j.items()) {
        (void)val;
        if (key != "claim_id" && key != "instances" && key != "outcome" &&
            key != "witnesses" && key != "runtime_ms")
            throw SchemaError("unexpected report key \"" + key + "\"");
    }
    for (const char* key : {"claim_id", "instances", "outcome", "witnesses", "runtime_ms"})
        if (!j.contains(key)) throw SchemaError(std::string("missing report key \"") + key + "\"");
    VerificationReport r;
    if (!j["claim_id"].is_string() || !j["instances"].is_string() ||
        !j["outcome"].is_string() || !j["witnesses"].is_array() ||
        !j["runtime_ms"].is_number_integer())
        throw SchemaError("report field has the wrong type");
    r.claim_id = j["claim_id"].get<std::string>();
    r.instances = j["instances"].get<std::string>();
    r.outcome = outcome_from_name(j["outcome"].get<std::string>());
    for (const auto& w : j["witnesses"]) {
        if (!w.is_object() || !w.contains("group") || !w.contains("detail"))
            throw SchemaError("witness must carry group and detail");
        r.witnesses.push_back({w["group"].get<std::string>(), w["detail"].get<std::string>()});
    }
    r.runtime_ms = j["runtime_ms"].get<long>();
    return r;
}

namespace {

VerifyOptions normalized(VerifyOptions o) {
    if (o.max_order > 0) {
        o.abelian_cap = std::min(o.abelian_cap, o.max_order);
        o.named_cap = std::min(o.named_cap, o.max_order);
        o.cyclic_cap = std::min(o.cyclic_cap, o.max_order);
        o.conn_cap = std::min(o.conn_cap, o.max_order);
    }
    return o;
}

FiniteGroup build_spec(const std::string& s, const VerifyOptions& o) {
    BuildOptions b;
    b.order_cap = o.build_cap;
    return build_group(s, b);
}

// Collects pass/fail/discrepancy evidence and settles the outcome at
// the end; failures outrank discrepancies in both the outcome and the
// witness list.
struct Evidence {
    std::vector<Witness> fails, discrepancies;

    void fail(const std::string& g, const std::string& d) { fails.push_back({g, d}); }
    void disc(const std::string& g, const std::string& d) { discrepancies.push_back({g, d}); }

    void settle(VerificationReport& r) const {
        r.witnesses = fails;
        r.witnesses.insert(r.witnesses.end(), discrepancies.begin(), discrepancies.end());
        r.outcome = !fails.empty() ? Outcome::Fail
                    : !discrepancies.empty() ? Outcome::Discrepancy
                                             : Outcome::Pass;
        const std::size_t cap = 10;
        if (r.witnesses.size() > cap) {
            std::size_t extra = r.witnesses.size() - cap;
            r.witnesses.resize(cap);
            r.witnesses.push_back(
                {"(catalog)", std::to_string(extra) + " further instances omitted"});
        }
    }
};

bool diff_edgeless(const CyclicLattice& L) {
    BitMatrix adj = class_adjacency(L, GraphKind::Difference);
    for (int a = 0; a < L.num_classes(); ++a)
        if (adj.row_popcount(a) != 0) return false;
    return true;
}

// Connectivity and diameter of the element-level difference graph read
// off the class graph: distinct classes keep their class distance, and
// two members of one kept class sit at distance 2 through any neighbor
// (never 1: same-class pairs are non-adjacent).
struct DiffShape {
    bool nonempty = false;
    bool connected = false;
    int elem_diameter = -1;
};

DiffShape diff_shape(const CyclicLattice& L) {
    Graph cg = build_class_graph(L, GraphKind::Difference);
    DiffShape s;
    if (cg.n() == 0) return s;
    s.nonempty = true;
    AnalysisResult a = analyze(cg, Exec::Serial);
    if (a.components.size() != 1) return s;
    s.connected = true;
    bool multi = false;
    for (int v = 0; v < cg.n(); ++v)
        if (cg.vertex(v).weight >= 2) multi = true;
    s.elem_diameter = std::max(a.diameter, multi ? 2 : 0);
    return s;
}

bool is_zpq(const FiniteGroup& G) {
    if (!G.is_cyclic()) return false;
    auto f = factorize(G.order());
    return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

bool generalized_quaternion(const FiniteGroup& G) {
    long p = 0;
    int k = 0;
    if (!is_prime_power(G.order(), &p, &k) || p != 2 || G.order() < 8) return false;
    return !G.is_cyclic() && G.unique_involution().has_value();
}

Graph element_diff(const FiniteGroup& G) {
    return build_graph(CyclicLattice::build(G), GraphKind::Difference);
}

std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// ---- claims ----

VerificationReport claim_p_elts(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "p-elts";
    r.instances = "abelian groups of order <= " + std::to_string(o.abelian_cap) +
                  " plus named families of order <= " + std::to_string(o.named_cap) +
                  "; generator isolation over Z(m), m <= " + std::to_string(o.cyclic_cap);
    Evidence ev;
    for (const auto& spec : full_catalog(o.abelian_cap, o.named_cap)) {
        FiniteGroup G = build_spec(spec, o);
        CyclicLattice L = CyclicLattice::build(G);
        BitMatrix adj = class_adjacency(L, GraphKind::DifferenceUndeleted);
        for (int a = 0; a < L.num_classes(); ++a) {
            long ord = L.cls(a).subgroup_order;
            if (ord != 1 && !is_prime(ord)) continue;
            if (adj.row_popcount(a) != 0)
                ev.fail(spec, "element " + G.display(L.cls(a).representative) +
                                  " of order " + std::to_string(ord) + " is not isolated");
        }
    }
    for (long m = 2; m <= o.cyclic_cap; ++m) {
        std::string spec = "Z(" + std::to_string(m) + ")";
        FiniteGroup G = build_spec(spec, o);
        CyclicLattice L = CyclicLattice::build(G);
        BitMatrix adj = class_adjacency(L, GraphKind::DifferenceUndeleted);
        for (int a = 0; a < L.num_classes(); ++a)
            if (L.cls(a).subgroup_order == m && adj.row_popcount(a) != 0)
                ev.fail(spec, "a generator is not isolated");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_nulld_cograph(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "nulld-cograph";
    r.instances = "abelian groups of order <= " + std::to_string(o.abelian_cap) +
                  " plus named families of order <= " + std::to_string(o.named_cap) +
                  "; converse witness Z(2) x Z(4)";
    Evidence ev;
    for (const auto& spec : full_catalog(o.abelian_cap, o.named_cap)) {
        FiniteGroup G = build_spec(spec, o);
        CyclicLattice L = CyclicLattice::build(G);
        if (!diff_edgeless(L)) continue;
        Graph p = build_graph(L, GraphKind::Power);
        CographResult cr = is_cograph(p);
        if (!cr.cograph)
            ev.fail(spec, "difference graph is edgeless but the power graph contains "
                          "an induced P4");
    }
    // the converse must genuinely fail on Z(2) x Z(4)
    FiniteGroup W = build_spec("Z(2) x Z(4)", o);
    CyclicLattice LW = CyclicLattice::build(W);
    if (!is_cograph(build_graph(LW, GraphKind::Power)).cograph)
        ev.fail("Z(2) x Z(4)", "power graph should be a cograph");
    if (diff_edgeless(LW))
        ev.fail("Z(2) x Z(4)", "difference graph should have edges");
    ev.settle(r);
    return r;
}

VerificationReport claim_conn(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:conn";
    Evidence ev;
    int max_diam = -1;
    long count = 0;
    for (const auto& spec : full_catalog(o.abelian_cap, o.named_cap)) {
        FiniteGroup G = build_spec(spec, o);
        if (pi_of_center(G).size() < 2) continue;
        ++count;
        CyclicLattice L = CyclicLattice::build(G);
        DiffShape s = diff_shape(L);
        bool expect_connected = !is_zpq(G);
        if (s.connected != expect_connected) {
            ev.fail(spec, s.connected ? "difference graph is connected but the group "
                                        "is cyclic of order pq"
                                      : "difference graph is not connected");
            continue;
        }
        if (s.connected) {
            if (s.elem_diameter > 6)
                ev.fail(spec, "diameter " + std::to_string(s.elem_diameter) + " exceeds 6");
            max_diam = std::max(max_diam, s.elem_diameter);
        }
    }
    r.instances = "groups with at least two center primes out of abelian <= " +
                  std::to_string(o.abelian_cap) + " plus named <= " +
                  std::to_string(o.named_cap) + " (" + std::to_string(count) +
                  " instances); max observed diameter " + std::to_string(max_diam);
    ev.settle(r);
    return r;
}

VerificationReport claim_isol(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:isol";
    r.instances = "Z(m) for m <= " + std::to_string(o.cyclic_cap) +
                  " with at least 2 prime divisors";
    Evidence ev;
    for (long m = 2; m <= o.cyclic_cap; ++m) {
        if (prime_divisors(m).size() < 2) continue;
        std::string spec = "Z(" + std::to_string(m) + ")";
        FiniteGroup G = build_spec(spec, o);
        std::vector<int> computed = isolated_vertices_of_difference(G);

        std::vector<int> predicted;  // the stated case split
        if (is_zpq(G)) {
            predicted.resize(m);
            std::iota(predicted.begin(), predicted.end(), 0);
        } else {
            predicted.push_back(0);
            for (int x = 1; x < m; ++x)
                if (G.element_order(x) == m) predicted.push_back(x);
            std::sort(predicted.begin(), predicted.end());
        }
        if (computed == predicted) continue;

        // the only deviation consistent with the prime-order statement:
        // the computed set additionally carries every prime-order element
        std::vector<int> reconciled = predicted;
        for (int x = 1; x < m; ++x)
            if (is_prime(G.element_order(x))) reconciled.push_back(x);
        std::sort(reconciled.begin(), reconciled.end());
        reconciled.erase(std::unique(reconciled.begin(), reconciled.end()),
                         reconciled.end());
        if (computed == reconciled) {
            std::vector<long> extra_orders;
            for (int x : computed)
                if (!std::binary_search(predicted.begin(), predicted.end(), x))
                    extra_orders.push_back(G.element_order(x));
            std::sort(extra_orders.begin(), extra_orders.end());
            extra_orders.erase(std::unique(extra_orders.begin(), extra_orders.end()),
                               extra_orders.end());
            ev.disc(spec, "stated isolated set is generators plus identity (" +
                              std::to_string(predicted.size()) + " elements), computed " +
                              std::to_string(computed.size()) +
                              ": prime-order elements (orders " + join_longs(extra_orders) +
                              ") are isolated too");
        } else {
            ev.fail(spec, "computed isolated set matches neither the stated one nor "
                          "the prime-order reconciliation");
        }
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_twoprimes(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:twoprimes";
    r.instances = "Z(m) for m <= " + std::to_string(o.cyclic_cap) +
                  " with at least 2 prime divisors";
    Evidence ev;
    for (long m = 2; m <= o.cyclic_cap; ++m) {
        if (prime_divisors(m).size() < 2) continue;
        std::string spec = "Z(" + std::to_string(m) + ")";
        FiniteGroup G = build_spec(spec, o);
        bool null = diff_edgeless(CyclicLattice::build(G));
        if (null != is_zpq(G))
            ev.fail(spec, null ? "difference graph is edgeless but m is not pq"
                               : "difference graph has edges although m = pq");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_disc(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:disc";
    Evidence ev;
    int max_diam = -1;
    for (long m = 2; m <= o.conn_cap; ++m) {
        if (prime_divisors(m).size() < 2) continue;
        std::string spec = "Z(" + std::to_string(m) + ")";
        FiniteGroup G = build_spec(spec, o);
        DiffShape s = diff_shape(CyclicLattice::build(G));
        bool expect_connected = !is_zpq(G);
        if (s.connected != expect_connected) {
            ev.fail(spec, s.connected ? "connected although m = pq" : "not connected");
            continue;
        }
        if (s.connected) {
            if (s.elem_diameter > 6)
                ev.fail(spec, "diameter " + std::to_string(s.elem_diameter) + " exceeds 6");
            max_diam = std::max(max_diam, s.elem_diameter);
        }
    }
    r.instances = "Z(m) for m <= " + std::to_string(o.conn_cap) +
                  " with at least 2 prime divisors; max observed diameter " +
                  std::to_string(max_diam);
    ev.settle(r);
    return r;
}

VerificationReport claim_cxq(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:cxq";
    r.instances = "Z(m) x Q(2^k) for m in {3,5,15,21}, k in {3,4}";
    Evidence ev;
    for (long m : {3L, 5L, 15L, 21L})
        for (long q : {8L, 16L}) {
            std::string spec =
                "Z(" + std::to_string(m) + ") x Q(" + std::to_string(q) + ")";
            FiniteGroup G = build_spec(spec, o);
            Graph d = element_diff(G);
            AnalysisResult a = analyze(d, Exec::Serial);
            if (d.n() == 0 || a.components.size() != 1)
                ev.fail(spec, "difference graph is not connected");
            else if (a.diameter > 3)
                ev.fail(spec, "diameter " + std::to_string(a.diameter) + " exceeds 3");
        }
    ev.settle(r);
    return r;
}

VerificationReport claim_empty(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:empty";
    r.instances = "abelian p-groups of order <= 256 plus Q(8)..Q(64); "
                  "non-null witness Z(2) x Z(4)";
    Evidence ev;
    std::vector<std::string> specs = abelian_p_group_specs_upto(std::min<long>(256, o.abelian_cap));
    for (const auto& s : quaternion_specs_upto(64)) specs.push_back(s);
    for (const auto& spec : specs) {
        FiniteGroup G = build_spec(spec, o);
        CyclicLattice L = CyclicLattice::build(G);
        bool null = diff_edgeless(L);

        bool trivial_meets = true;
        auto maxc = L.maximal_class_ids();
        for (std::size_t i = 0; i < maxc.size() && trivial_meets; ++i)
            for (std::size_t j = i + 1; j < maxc.size(); ++j)
                if (L.meets_nontrivially(maxc[i], maxc[j])) {
                    trivial_meets = false;
                    break;
                }
        bool oracle = G.is_cyclic() || (!generalized_quaternion(G) && trivial_meets);
        if (null != oracle)
            ev.fail(spec, null ? "edgeless although the structural test predicts edges"
                               : "has edges although the structural test predicts none");
    }
    FiniteGroup W = build_spec("Z(2) x Z(4)", o);
    if (diff_edgeless(CyclicLattice::build(W)))
        ev.fail("Z(2) x Z(4)", "difference graph should have edges");
    ev.settle(r);
    return r;
}

VerificationReport claim_gq_isol(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:gq-isol";
    r.instances = "Q(8)..Q(128)";
    Evidence ev;
    for (const auto& spec : quaternion_specs_upto(128)) {
        FiniteGroup G = build_spec(spec, o);
        std::vector<int> computed = isolated_vertices_of_difference(G);
        std::vector<int> expected{0, *G.unique_involution()};
        std::sort(expected.begin(), expected.end());
        if (computed != expected)
            ev.fail(spec, "isolated set has " + std::to_string(computed.size()) +
                              " elements, expected exactly the identity and the "
                              "involution");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_nilp(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:nilp";
    r.instances = "D(Z(30)), D(Z(60)), D(Z(210)), D(Z(2) x Z(2) x Z(15))";
    Evidence ev;

    // an exhausted hole search is UNKNOWN for the whole claim, not a FAIL
    auto settled = [&](const std::string& spec, const Graph& d) {
        PerfectnessResult p = is_perfect(d);
        if (p.status == Perfectness::Unknown)
            throw BudgetExceeded("perfectness of D(" + spec +
                                 ") undecided within the hole search budget");
        return p;
    };

    if (settled("Z(30)", element_diff(build_spec("Z(30)", o))).status != Perfectness::Perfect)
        ev.fail("Z(30)", "difference graph should be perfect");

    auto expect_imperfect_with_5_hole = [&](const std::string& spec) {
        Graph d = element_diff(build_spec(spec, o));
        PerfectnessResult p = settled(spec, d);
        if (p.status != Perfectness::Imperfect) {
            ev.fail(spec, "difference graph should be imperfect");
            return;
        }
        if (!find_odd_hole(d, 5))
            ev.fail(spec, "no induced 5-cycle found");
    };
    expect_imperfect_with_5_hole("Z(60)");
    expect_imperfect_with_5_hole("Z(210)");
    expect_imperfect_with_5_hole("Z(2) x Z(2) x Z(15)");

    // the stated hole order patterns, checked symbolically
    auto pattern = [&](long n, const std::vector<long>& orders) {
        auto fact = factorize(n);
        std::vector<Divisor> dv;
        for (long x : orders) dv.push_back(divisor_of(x, fact));
        int k = int(orders.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                bool want = j == i + 1 || (i == 0 && j == k - 1);
                if (symbolic_diff_adjacent(dv[i], dv[j]) != want) return false;
            }
        return true;
    };
    if (!pattern(60, {4, 6, 15, 12, 30}))
        ev.fail("Z(60)", "orders (4,6,15,12,30) do not trace an induced 5-cycle");
    if (!pattern(210, {6, 10, 35, 30, 70}))
        ev.fail("Z(210)", "orders (6,10,35,30,70) do not trace an induced 5-cycle");
    ev.settle(r);
    return r;
}

VerificationReport claim_bip(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:bip";
    r.instances = "abelian groups of order <= " + std::to_string(o.abelian_cap) +
                  " with at least 2 prime divisors";
    Evidence ev;
    for (const auto& spec : abelian_specs_upto(o.abelian_cap)) {
        FiniteGroup G = build_spec(spec, o);
        auto f = factorize(G.order());
        if (f.size() < 2) continue;
        bool paq = G.is_cyclic() && f.size() == 2 && (f[0].second == 1 || f[1].second == 1);
        Graph d = element_diff(G);
        AnalysisResult a = analyze(d, Exec::Serial);
        if (a.bipartite != paq)
            ev.fail(spec, a.bipartite
                              ? "difference graph is bipartite but the order is not p^a q"
                              : "difference graph is not bipartite for order p^a q");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_euler(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "t:euler";
    r.instances = "degree parity over abelian <= " + std::to_string(o.abelian_cap) +
                  " plus named families <= " + std::to_string(o.named_cap);
    Evidence ev;
    for (const auto& spec : full_catalog(o.abelian_cap, o.named_cap)) {
        FiniteGroup G = build_spec(spec, o);
        CyclicLattice L = CyclicLattice::build(G);
        BitMatrix adj = class_adjacency(L, GraphKind::DifferenceUndeleted);
        for (int a = 0; a < L.num_classes(); ++a) {
            long deg = 0;
            for (int b = 0; b < L.num_classes(); ++b)
                if (adj.get(a, b)) deg += long(L.cls(b).members.size());
            if (deg % 2 != 0) {
                ev.fail(spec, "element " + G.display(L.cls(a).representative) +
                                  " has odd degree " + std::to_string(deg));
                break;
            }
        }
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_univ(const VerifyOptions& o) {
    (void)o;
    VerificationReport r;
    r.claim_id = "t:univ";
    r.instances = "all isomorphism classes of graphs on 5 vertices plus 50 random "
                  "graphs on 6 vertices (seed 1837)";
    Evidence ev;

    // pair index table for 5 vertices
    int pidx[5][5];
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            pidx[i][j] = pidx[j][i] = int(pairs.size());
            pairs.push_back({i, j});
        }
    std::set<unsigned> canon;
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (unsigned mask = 0; mask < 1u << 10; ++mask) {
        unsigned best = mask;
        std::vector<int> p = perm;
        do {
            unsigned m2 = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1u) m2 |= 1u << pidx[p[pairs[e].first]][p[pairs[e].second]];
            best = std::min(best, m2);
        } while (std::next_permutation(p.begin(), p.end()));
        canon.insert(best);
    }
    if (canon.size() != 34)
        ev.fail("(enumeration)", "expected 34 isomorphism classes on 5 vertices, got " +
                                     std::to_string(canon.size()));
    for (unsigned mask : canon) {
        Graph g(5);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1u) g.add_edge(pairs[e].first, pairs[e].second);
        if (!embed_in_cyclic(g).verified)
            ev.fail("graph#" + std::to_string(mask), "symbolic embedding check failed");
    }

    std::mt19937_64 rng(1837);
    for (int t = 0; t < 50; ++t) {
        Graph g(6);
        uint64_t bits = rng();
        int e = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j, ++e)
                if (bits >> e & 1u) g.add_edge(i, j);
        if (!embed_in_cyclic(g).verified)
            ev.fail("random#" + std::to_string(t), "symbolic embedding check failed");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_sec6(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "sec6-cliques";
    r.instances = "divisor families of size <= 5 against element graphs for n <= 300; "
                  "exact difference clique numbers for n in {30,60,210,2310}";
    Evidence ev;

    for (long n = 2; n <= 300; ++n) {
        FiniteGroup G = build_spec("Z(" + std::to_string(n) + ")", o);
        CyclicLattice L = CyclicLattice::build(G);
        int c = L.num_classes();
        std::vector<long> ds = divisors(n);
        bool aligned = long(ds.size()) == c;
        for (int i = 0; aligned && i < c; ++i)
            if (L.cls(i).subgroup_order != ds[i]) aligned = false;
        if (!aligned) {
            ev.fail("Z(" + std::to_string(n) + ")",
                    "generator classes do not align with the divisor lattice");
            continue;
        }

        Graph P = build_graph(L, GraphKind::Power);
        Graph I = build_graph(L, GraphKind::IntersectionPower);
        auto all_pairs_adjacent = [&](const Graph& g, int a, int b) {
            for (int x : L.cls(a).members)
                for (int y : L.cls(b).members) {
                    if (a == b && x >= y) continue;
                    if (!g.adjacent(x, y)) return false;
                }
            return true;
        };
        std::vector<char> wP(c, 1), wI(c, 1);
        std::vector<char> xP(std::size_t(c) * c, 0), xI(std::size_t(c) * c, 0);
        for (int a = 0; a < c; ++a) {
            wP[a] = all_pairs_adjacent(P, a, a);
            wI[a] = all_pairs_adjacent(I, a, a);
            for (int b = a + 1; b < c; ++b) {
                xP[std::size_t(a) * c + b] = xP[std::size_t(b) * c + a] =
                    all_pairs_adjacent(P, a, b);
                xI[std::size_t(a) * c + b] = xI[std::size_t(b) * c + a] =
                    all_pairs_adjacent(I, a, b);
            }
        }
        // the identity joins every clique of either graph
        for (int b = 1; b < c; ++b)
            if (!xP[b] || !xI[b])
                ev.fail("Z(" + std::to_string(n) + ")",
                        "identity is not adjacent to the class of order " +
                            std::to_string(L.cls(b).subgroup_order));

        std::vector<int> cls2;
        for (int a = 0; a < c; ++a)
            if (L.cls(a).subgroup_order >= 2) cls2.push_back(a);
        std::vector<int> cur;
        auto visit = [&](const std::vector<int>& S) {
            bool chain = true, inter = true;
            for (std::size_t i = 0; i < S.size(); ++i)
                for (std::size_t j = i + 1; j < S.size(); ++j) {
                    long a = L.cls(S[i]).subgroup_order, b = L.cls(S[j]).subgroup_order;
                    if (a % b != 0 && b % a != 0) chain = false;
                    if (gcd(a, b) == 1) inter = false;
                }
            bool cliqueP = true, cliqueI = true;
            for (std::size_t i = 0; i < S.size(); ++i) {
                cliqueP = cliqueP && wP[S[i]];
                cliqueI = cliqueI && wI[S[i]];
                for (std::size_t j = i + 1; j < S.size(); ++j) {
                    cliqueP = cliqueP && xP[std::size_t(S[i]) * c + S[j]];
                    cliqueI = cliqueI && xI[std::size_t(S[i]) * c + S[j]];
                }
            }
            if (cliqueP != chain) {
                std::vector<long> vals;
                for (int s : S) vals.push_back(L.cls(s).subgroup_order);
                ev.fail("Z(" + std::to_string(n) + ")",
                        "S={" + join_longs(vals) + "}: chain=" +
                            (chain ? "yes" : "no") + " but power clique=" +
                            (cliqueP ? "yes" : "no"));
            }
            if (cliqueI != inter) {
                std::vector<long> vals;
                for (int s : S) vals.push_back(L.cls(s).subgroup_order);
                ev.fail("Z(" + std::to_string(n) + ")",
                        "S={" + join_longs(vals) + "}: intersecting=" +
                            (inter ? "yes" : "no") + " but intersection clique=" +
                            (cliqueI ? "yes" : "no"));
            }
        };
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (!cur.empty()) visit(cur);
            if (cur.size() == 5) return;
            for (std::size_t i = start; i < cls2.size(); ++i) {
                cur.push_back(cls2[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    for (long n : {30L, 60L, 210L, 2310L}) {
        std::string spec = "Z(" + std::to_string(n) + ")";
        OmegaDivisorResult dres = omega_via_divisors(n, GraphKind::Difference);
        Graph d = element_diff(build_spec(spec, o));
        long omega = long(max_clique(d).vertices.size());
        if (omega != dres.card_value)
            ev.fail(spec, "divisor cardinality optimum " + std::to_string(dres.card_value) +
                              " but exact clique number " + std::to_string(omega));
        if (dres.weight_value != omega)
            ev.disc(spec, "stated phi-weighted clique count " +
                              std::to_string(dres.weight_value) + " (family {" +
                              join_longs(dres.weight_witness) +
                              "}) vs exact clique number " + std::to_string(omega) +
                              ": same-order elements are never adjacent");
    }
    ev.settle(r);
    return r;
}

VerificationReport claim_psl2(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "psl2";
    Evidence ev;
    std::vector<long> qs;
    for (long q : psl2_default_scan_set())
        if (q <= o.psl_qmax) qs.push_back(q);
    r.instances = "PSL(2,q) for q in {" + join_longs(qs) + "}";
    for (const PslScanRow& row : psl2_nullness_scan(qs, o.build_cap))
        if (!row.agree)
            ev.fail("PSL(2," + std::to_string(row.q) + ")",
                    std::string("predicate says ") + (row.predicate ? "null" : "edges") +
                        " but the graph has " + (row.computed_null ? "no edges" : "edges"));
    ev.settle(r);
    return r;
}

VerificationReport claim_dihedral(const VerifyOptions& o) {
    (void)o;
    VerificationReport r;
    r.claim_id = "dihedral";
    r.instances = "D(2n) against Z(n) for n in [3, 100]";
    Evidence ev;
    for (long n = 3; n <= 100; ++n)
        if (!dihedral_reduction_check(n))
            ev.fail("D(" + std::to_string(2 * n) + ")",
                    "difference graph does not reduce to the one of Z(" +
                        std::to_string(n) + ")");
    ev.settle(r);
    return r;
}

VerificationReport claim_sec9(const VerifyOptions& o) {
    VerificationReport r;
    r.claim_id = "sec9-clique";
    r.instances = "Q(8), SL(2,3), Z(2) x Z(2), and the SL(3,4) matrix identities";
    Evidence ev;
    if (!even_order_clique_check(build_spec("Q(8)", o)))
        ev.fail("Q(8)", "even-order elements are not pairwise adjacent");
    if (!even_order_clique_check(build_spec("SL(2,3)", o)))
        ev.fail("SL(2,3)", "even-order elements are not pairwise adjacent");
    bool rejected = false;
    try {
        even_order_clique_check(build_spec("Z(2) x Z(2)", o));
    } catch (const PreconditionFailed&) {
        rejected = true;
    }
    if (!rejected)
        ev.fail("Z(2) x Z(2)", "check accepted a group with three involutions");
    Sl34Check s = sl34_quaternion_check();
    if (!s.dets_one) ev.fail("SL(3,4)", "some X_a has determinant != 1");
    if (!s.squares_are_z) ev.fail("SL(3,4)", "some X_a^2 differs from Z");
    if (!s.z_square_is_identity) ev.fail("SL(3,4)", "Z^2 is not the identity");
    if (!s.quaternion)
        ev.fail("SL(3,4)", "<X_1,X_x> has order " + std::to_string(s.closure_order) +
                               ", expected a quaternion group of order 8");
    ev.settle(r);
    return r;
}

// M11 pipeline.  The structure checks return an empty string on success
// and a failure description otherwise.
std::string m11_structure_check(const Graph& h, std::vector<int>* part_a,
                                std::vector<int>* part_b) {
    if (h.n() != 825)
        return "reduced graph has " + std::to_string(h.n()) + " vertices, expected 825";
    std::vector<int> A, B;
    for (int v = 0; v < h.n(); ++v) (h.degree(v) == 4 ? A : B).push_back(v);
    if (A.size() != 165)
        return "degree-4 part has " + std::to_string(A.size()) + " vertices, expected 165";
    if (B.size() != 660)
        return "remainder has " + std::to_string(B.size()) + " vertices, expected 660";
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (h.adjacent(A[i], A[j])) return "degree-4 part is not independent";
    Graph sub = h.induced(B);
    for (int v = 0; v < sub.n(); ++v)
        if (sub.degree(v) != 5)
            return "remainder is not 5-regular (vertex of degree " +
                   std::to_string(sub.degree(v)) + ")";
    AnalysisResult a = analyze(sub);
    if (a.components.size() != 1 || a.diameter != 9)
        return "remainder diameter is " + std::to_string(a.diameter) + ", expected 9";
    if (a.girth != 3) return "remainder girth is " + std::to_string(a.girth) + ", expected 3";
    if (part_a) *part_a = A;
    if (part_b) *part_b = B;
    return "";
}

}  // namespace

M11Result run_m11(const VerifyOptions& opt_in) {
    VerifyOptions o = normalized(opt_in);
    auto t0 = std::chrono::steady_clock::now();
    M11Result out;
    out.report.claim_id = "m11";

    FiniteGroup G = build_m11(o.build_cap);
    CyclicLattice L = CyclicLattice::build(G);
    Graph gU = build_graph(L, GraphKind::DifferenceUndeleted);
    std::vector<int> keep;
    for (int v = 0; v < gU.n(); ++v)
        if (gU.degree(v) > 0) keep.push_back(v);
    Graph gD = gU.induced(keep);

    TwinReduction tr = twin_reduce(gD);
    out.reduced = tr.reduced;
    out.report.instances = "M11 (order 7920): " + std::to_string(gD.n()) +
                           " non-isolated vertices, " + std::to_string(tr.rounds) +
                           " twin merges, reduced to " + std::to_string(tr.reduced.n());

    Evidence ev;
    std::string err = m11_structure_check(tr.reduced, &out.part_a, &out.part_b);
    if (!err.empty()) {
        ev.fail("M11", err);
        // the writeup does not pin the pipeline order down; report what
        // the documented alternatives give
        TwinReduction open_only = twin_reduce_modes(gD, true, false);
        TwinReduction closed_only = twin_reduce_modes(gD, false, true);
        TwinReduction swapped = twin_reduce(gU);
        std::vector<int> alive;
        for (int v = 0; v < swapped.reduced.n(); ++v)
            if (swapped.reduced.degree(v) > 0) alive.push_back(v);
        Graph swapped_clean = swapped.reduced.induced(alive);
        ev.fail("M11", "alternative pipelines: open-only " +
                           std::to_string(open_only.reduced.n()) + ", closed-only " +
                           std::to_string(closed_only.reduced.n()) +
                           ", reduce-then-remove " + std::to_string(swapped_clean.n()));
        const std::pair<const char*, const Graph*> alts[] = {
            {"open-only", &open_only.reduced},
            {"closed-only", &closed_only.reduced},
            {"reduce-then-remove", &swapped_clean}};
        for (const auto& [name, g] : alts) {
            std::string e2 = m11_structure_check(*g, &out.part_a, &out.part_b);
            if (e2.empty()) {
                out.reduced = *g;
                out.report.instances += "; matched by the " + std::string(name) + " pipeline";
                ev.fails.clear();
                break;
            }
        }
    }
    ev.settle(out.report);
    out.report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    return out;
}

std::vector<std::string> claim_ids() {
    return {"p-elts", "nulld-cograph", "t:conn", "t:isol",   "t:twoprimes", "t:disc",
            "t:cxq",  "t:empty",       "t:gq-isol", "t:nilp", "t:bip",      "t:euler",
            "t:univ", "sec6-cliques",  "psl2",   "dihedral", "sec9-clique", "m11"};
}

bool claim_in_all(const std::string& id) { return id != "m11"; }

VerificationReport run_claim(const std::string& id, const VerifyOptions& opt_in) {
    VerifyOptions o = normalized(opt_in);
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
        if (id == "p-elts") r = claim_p_elts(o);
        else if (id == "nulld-cograph") r = claim_nulld_cograph(o);
        else if (id == "t:conn") r = claim_conn(o);
        else if (id == "t:isol") r = claim_isol(o);
        else if (id == "t:twoprimes") r = claim_twoprimes(o);
        else if (id == "t:disc") r = claim_disc(o);
        else if (id == "t:cxq") r = claim_cxq(o);
        else if (id == "t:empty") r = claim_empty(o);
        else if (id == "t:gq-isol") r = claim_gq_isol(o);
        else if (id == "t:nilp") r = claim_nilp(o);
        else if (id == "t:bip") r = claim_bip(o);
        else if (id == "t:euler") r = claim_euler(o);
        else if (id == "t:univ") r = claim_univ(o);
        else if (id == "sec6-cliques") r = claim_sec6(o);
        else if (id == "psl2") r = claim_psl2(o);
        else if (id == "dihedral") r = claim_dihedral(o);
        else if (id == "sec9-clique") r = claim_sec9(o);
        else if (id == "m11") r = run_m11(o).report;
        else throw UnknownClaim("no claim named \"" + id + "\"");
    } catch (const BudgetExceeded& e) {
        r.claim_id = id;
        r.instances = "(sweep aborted by search budget)";
        r.outcome = Outcome::Unknown;
        r.witnesses = {{"(budget)", e.what()}};
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace ggraph
