// Release gate: one line per criterion, nonzero exit when any fails.
// Each criterion runs the relevant claims at their default sweep sizes
// and, where a runtime budget applies, enforces it on wall time.

#include <chrono>
#include <cstdio>
#include <string>

#include "ggraph/errors.hpp"
#include "ggraph/verify.hpp"

using namespace ggraph;

namespace {

bool want(const VerificationReport& r, Outcome o, std::string& why) {
    if (r.outcome == o) return true;
    why += r.claim_id + " ended " + outcome_name(r.outcome) + ", wanted " + outcome_name(o);
    if (!r.witnesses.empty())
        why += " [" + r.witnesses[0].group + ": " + r.witnesses[0].detail + "]";
    why += "; ";
    return false;
}

}  // namespace

int main() {
    int failed = 0;

    auto criterion = [&](int n, long cap_ms, auto&& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = body(why);
        } catch (const std::exception& e) {
            ok = false;
            why += std::string("threw: ") + e.what();
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (ok && cap_ms > 0 && ms >= cap_ms) {
            ok = false;
            why += "took " + std::to_string(ms) + " ms, budget " + std::to_string(cap_ms);
        }
        if (ok) {
            std::printf("criterion %d: pass (%ld ms)\n", n, ms);
        } else {
            std::printf("criterion %d: FAIL %s(%ld ms)\n", n, why.c_str(), ms);
            ++failed;
        }
        std::fflush(stdout);
    };

    criterion(1, 10000, [](std::string& why) {
        return want(run_claim("t:twoprimes"), Outcome::Pass, why);
    });

    criterion(2, 120000, [](std::string& why) {
        bool a = want(run_claim("t:disc"), Outcome::Pass, why);
        bool b = want(run_claim("t:conn"), Outcome::Pass, why);
        return a && b;
    });

    criterion(3, 30000, [](std::string& why) {
        return want(run_claim("t:cxq"), Outcome::Pass, why);
    });

    criterion(4, 0, [](std::string& why) {
        bool a = want(run_claim("p-elts"), Outcome::Pass, why);
        VerificationReport isol = run_claim("t:isol");
        bool b = want(isol, Outcome::Discrepancy, why);
        if (b && (isol.witnesses.empty() || isol.witnesses[0].group != "Z(12)")) {
            why += "t:isol discrepancy does not lead with Z(12); ";
            b = false;
        }
        return a && b;
    });

    criterion(5, 30000, [](std::string& why) {
        bool a = want(run_claim("t:empty"), Outcome::Pass, why);
        bool b = want(run_claim("t:gq-isol"), Outcome::Pass, why);
        return a && b;
    });

    criterion(6, 300000, [](std::string& why) {
        return want(run_claim("t:euler"), Outcome::Pass, why);
    });

    criterion(7, 0, [](std::string& why) {
        return want(run_claim("t:bip"), Outcome::Pass, why);
    });

    criterion(8, 60000, [](std::string& why) {
        return want(run_claim("t:nilp"), Outcome::Pass, why);
    });

    criterion(9, 120000, [](std::string& why) {
        return want(run_claim("sec6-cliques"), Outcome::Discrepancy, why);
    });

    criterion(10, 10000, [](std::string& why) {
        return want(run_claim("t:univ"), Outcome::Pass, why);
    });

    criterion(11, 180000, [](std::string& why) {
        return want(run_claim("psl2"), Outcome::Pass, why);
    });

    criterion(12, 600000, [](std::string& why) {
        return want(run_m11().report, Outcome::Pass, why);
    });

    criterion(13, 0, [](std::string& why) {
        return want(run_claim("nulld-cograph"), Outcome::Pass, why);
    });

    std::printf("%d of 13 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
