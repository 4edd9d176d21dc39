#pragma once
// The claim registry: each claim sweeps a group catalog, evaluates one
// statement instance by instance, and aggregates into a report.  PASS
// and FAIL mean what they say; DISCREPANCY is reserved for statements
// the source material itself makes inconsistently, and the report then
// carries witnesses showing both readings; UNKNOWN covers exhausted
// search budgets.

#include <string>
#include <vector>

#include "ggraph/analysis.hpp"
#include "ggraph/graph.hpp"

namespace ggraph {

enum class Outcome { Pass, Fail, Discrepancy, Unknown };

std::string outcome_name(Outcome o);  // PASS, FAIL, DISCREPANCY, UNKNOWN
Outcome outcome_from_name(const std::string& s);

struct Witness {
    std::string group;
    std::string detail;
    bool operator==(const Witness&) const = default;
};

struct VerificationReport {
    std::string claim_id;
    std::string instances;  // description of the catalog swept, plus observations
    Outcome outcome = Outcome::Pass;
    std::vector<Witness> witnesses;  // nonempty for FAIL and DISCREPANCY
    long runtime_ms = 0;
    bool operator==(const VerificationReport&) const = default;
};

// Schema: {claim_id, instances, outcome, witnesses[], runtime_ms} with
// witnesses as {group, detail} objects.  Parsing throws SchemaError.
std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

struct VerifyOptions {
    long abelian_cap = 400;  // abelian catalog order bound
    long named_cap = 210;    // named families order bound
    long cyclic_cap = 210;   // cyclic sweeps (t:twoprimes, t:isol)
    long conn_cap = 1000;    // cyclic connectivity sweep (t:conn, t:disc)
    long psl_qmax = 25;      // scan q's up to this bound
    long build_cap = 60000;  // group construction order cap
    long max_order = 0;      // when positive, tightens every sweep cap above
};

// Registry order; run_claim throws UnknownClaim for anything else.
std::vector<std::string> claim_ids();

// m11 is excluded from `verify all` and runs only on demand.
bool claim_in_all(const std::string& id);

VerificationReport run_claim(const std::string& id, const VerifyOptions& opt = {});

// The M11 pipeline with its artifacts, so the CLI can write the reduced
// graph out.  part_a is the independent low-degree part, part_b the
// regular remainder, both as vertex ids of `reduced`.
struct M11Result {
    VerificationReport report;
    Graph reduced;
    std::vector<int> part_a, part_b;
};
M11Result run_m11(const VerifyOptions& opt = {});

}  // namespace ggraph
