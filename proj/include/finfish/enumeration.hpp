#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finfish/decomp.hpp"
#include "finfish/perm.hpp"
#include "json.hpp"

// Exhaustive generators for 2SSPs, the closed-form counts they must match,
// and the cross-check harness tying sorting, decomposition, and the fish
// bijection together at desk scale.

namespace finfish {

enum class EnumMethod { Brute, Grammar };

// All 2SSPs of size n in lexicographic order.  Brute filters S_n through
// S(S(p)) = id; Grammar builds each 2SSP exactly once from the two
// constructions.  Capped at n <= 10.
std::vector<Perm> enumerate_2ssp(int n, EnumMethod method, int workers = 1);

// 2 C(3n+1, n) / ((n+1)(3n+1)), the number of 2SSPs of size n >= 1.  The
// division is exact; inexactness would be a bug and raises internal_error.
std::int64_t count_formula(int n);

// C(2i+j+1, j) C(i+2j+1, i) / ((i+1)(j+1)), the number of 2SSPs with i
// ascents and j descents, i, j >= 0.  The division is exact.
std::int64_t refined_count(int i, int j);

using StatKey = std::array<int, 7>;  // len, lmax, rmax, asc, des, slmax, sldes
StatKey stat_key(const StatVector& s);

struct CountTable {
    std::map<int, std::int64_t> by_n;
    std::map<std::pair<int, int>, std::int64_t> by_asc_des;  // (asc, des)
    std::map<StatKey, std::int64_t> by_full_stats;
};

// Brute-force census of T_1..T_nmax.  Workers split S_n by first entry.
CountTable tally_2ssp(int nmax, int workers = 1);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::int64_t checked = 0;
    std::string detail;  // first counterexample when failing, else empty
};

struct VerifyReport {
    int nmax = 0;
    std::int64_t permutations = 0;  // total 2SSPs examined per check family
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Which construction produced p.  Seam for fault-injection tests; verify_all
// uses classify when none is supplied.
using Classifier = std::function<DecompKind(const Perm&)>;

// Runs every cross-check on T_1..T_nmax (nmax <= 8): both sorting
// implementations agree and S(S(p)) = id, grammar and brute enumeration
// coincide, counts match both closed forms, decompose/construct round trips,
// and phi is a statistic-preserving bijection onto valid fish.  Check
// failures land in the report rather than in exceptions.
VerifyReport verify_all(int nmax, int workers = 1, const Classifier& cls = {});

std::string report_to_text(const VerifyReport& r);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace finfish
