// Acceptance gate: nine desk-scale criteria, one line each, nonzero exit on
// any failure.  Everything is exact; there are no tolerances.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "finfish/bijection.hpp"
#include "finfish/decomp.hpp"
#include "finfish/enumeration.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish.hpp"
#include "finfish/perm.hpp"
#include "finfish/series.hpp"
#include "finfish/waspwaist.hpp"

using namespace finfish;

namespace {

int failures = 0;

void outcome(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s", ok ? "PASS" : "FAIL", idx, name.c_str());
    if (!ok && !detail.empty()) std::printf(" [%s]", detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <typename Body>
void criterion(int idx, const std::string& name, Body&& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const error& e) {
        detail = e.what();
    }
    outcome(idx, name, ok, detail);
}

constexpr std::int64_t kCounts[] = {1, 2, 6, 22, 91, 408, 1938, 9614, 49335, 260130};

}  // namespace

int main() {
    // Shared corpora: T[n] lists all 2SSPs of size n, F[n] their fish images
    // with F[0] = {empty}.
    std::vector<std::vector<Perm>> T(10);
    for (int n = 1; n <= 9; ++n) T[static_cast<std::size_t>(n)] = enumerate_2ssp(n, EnumMethod::Grammar);
    std::vector<std::vector<FightingFish>> F(10);
    F[0] = {FightingFish{}};
    for (int n = 1; n <= 9; ++n) {
        F[static_cast<std::size_t>(n)].reserve(T[static_cast<std::size_t>(n)].size());
        for (const Perm& p : T[static_cast<std::size_t>(n)])
            F[static_cast<std::size_t>(n)].push_back(phi(p));
    }

    criterion(1, "closed-form counting by brute force", [&](std::string& detail) {
        const CountTable table = tally_2ssp(8, 1);
        for (int n = 1; n <= 8; ++n) {
            const auto it = table.by_n.find(n);
            const std::int64_t got = it == table.by_n.end() ? 0 : it->second;
            if (got != kCounts[n - 1] || count_formula(n) != kCounts[n - 1]) {
                detail = "n=" + std::to_string(n) + " counted " + std::to_string(got);
                return false;
            }
        }
        return true;
    });

    criterion(2, "refined ascent-descent counting", [&](std::string& detail) {
        const CountTable table = tally_2ssp(8, 1);
        for (int n = 1; n <= 8; ++n)
            for (int i = 0; i <= n - 1; ++i) {
                const int j = n - 1 - i;
                const auto it = table.by_asc_des.find({i, j});
                const std::int64_t got = it == table.by_asc_des.end() ? 0 : it->second;
                const auto mirror = table.by_asc_des.find({j, i});
                const std::int64_t sym =
                    mirror == table.by_asc_des.end() ? 0 : mirror->second;
                if (got != refined_count(i, j) || got != sym) {
                    detail = "asc=" + std::to_string(i) + " des=" + std::to_string(j);
                    return false;
                }
            }
        return true;
    });

    criterion(3, "decomposition round trip and sorted-statistic recursions",
              [&](std::string& detail) {
        for (int n = 1; n <= 8; ++n)
            for (const Perm& p : T[static_cast<std::size_t>(n)]) {
                const DecompKind kind = classify(p);
                const auto [p1, p2] = decompose(p);
                const Perm rebuilt = kind.tag == CKind::C1 ? construct_c1(p1, p2)
                                                           : construct_c2(p1, p2, kind.i);
                if (rebuilt != p) {
                    detail = seq_to_string(p) + " rebuilt as " + seq_to_string(rebuilt);
                    return false;
                }
                const StatVector sp = stats(p), s1 = stats(p1), s2 = stats(p2);
                const int want_slmax = kind.tag == CKind::C1
                                           ? s1.slmax + s2.slmax + 1
                                           : s1.slmax + s2.slmax - kind.i + 1;
                const int want_sldes = kind.tag == CKind::C1 ? s1.sldes + s2.sldes
                                                             : s1.sldes + s2.sldes + 1;
                if (sp.slmax != want_slmax || sp.sldes != want_sldes) {
                    detail = seq_to_string(p) + " sorted statistics break the recursion";
                    return false;
                }
            }
        return true;
    });

    criterion(4, "statistic-preserving bijection onto fighting fish",
              [&](std::string& detail) {
        for (int n = 1; n <= 8; ++n) {
            std::set<std::string> keys;
            for (std::size_t k = 0; k < T[static_cast<std::size_t>(n)].size(); ++k) {
                const Perm& p = T[static_cast<std::size_t>(n)][k];
                const FightingFish& f = F[static_cast<std::size_t>(n)][k];
                if (!validate(f).ok) {
                    detail = seq_to_string(p) + " maps to an invalid complex";
                    return false;
                }
                if (!check_transfer(p).pass()) {
                    detail = seq_to_string(p) + " breaks a statistic identity";
                    return false;
                }
                if (phi_inverse(f) != p) {
                    detail = seq_to_string(p) + " does not round trip";
                    return false;
                }
                keys.insert(fish_key(f));
            }
            if (keys.size() != static_cast<std::size_t>(kCounts[n - 1])) {
                detail = "n=" + std::to_string(n) + " yields " +
                         std::to_string(keys.size()) + " distinct fish";
                return false;
            }
        }
        return true;
    });

    criterion(5, "construction statistics recursions on all trees with <= 10 nodes",
              [&](std::string& detail) {
        for (int a = 0; a <= 9; ++a)
            for (int b = 0; a + b <= 9; ++b)
                for (const FightingFish& f1 : F[static_cast<std::size_t>(a)])
                    for (const FightingFish& f2 : F[static_cast<std::size_t>(b)]) {
                        const FishStats s1 = fish_stats(f1), s2 = fish_stats(f2);
                        const FishStats c1 = fish_stats(c1_bullet(f1, f2));
                        const FishStats c1w{
                            s1.size + s2.size,
                            f1.empty() ? s2.lsize : s1.lsize + s2.lsize,
                            f2.empty() ? s1.rsize : s1.rsize + s2.rsize,
                            s1.fin + s2.fin,
                            s1.tails - 1 + s2.tails};
                        if (c1 != c1w) {
                            detail = "first construction at sizes " + std::to_string(a) +
                                     "," + std::to_string(b);
                            return false;
                        }
                        if (f1.empty() || f2.empty()) continue;
                        for (int i = 1; i <= s2.fin - 1; ++i) {
                            const FishStats c2 = fish_stats(c2_bullet(f1, f2, i));
                            const FishStats c2w{s1.size + s2.size,
                                                s1.lsize + s2.lsize,
                                                s1.rsize + s2.rsize,
                                                s1.fin + s2.fin - i,
                                                s1.tails + s2.tails};
                            if (c2 != c2w) {
                                detail = "second construction i=" + std::to_string(i) +
                                         " at sizes " + std::to_string(a) + "," +
                                         std::to_string(b);
                                return false;
                            }
                        }
                    }
        return true;
    });

    criterion(6, "generating function matches enumeration at order 8",
              [&](std::string& detail) {
        const TruncatedSeries iterated = iterate_T(8);
        if (iterated != series_from_enumeration(8)) {
            detail = "series differ";
            return false;
        }
        const std::map<int, std::int64_t> counts = counts_by_t(iterated);
        for (int n = 1; n <= 8; ++n) {
            const auto it = counts.find(n);
            if (it == counts.end() || it->second != kCounts[n - 1]) {
                detail = "all-ones coefficient of t^" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(7, "catalytic equation system residuals vanish to t^8",
              [&](std::string& detail) {
        const ResidualReport rep = check_system(8);
        for (const ResidualEntry& e : rep.equations)
            if (!e.zero) {
                detail = e.equation + " residual " + e.offending;
                return false;
            }
        return rep.equations.size() == 4;
    });

    criterion(8, "independent oracles coincide", [&](std::string& detail) {
        for (int n = 1; n <= 8; ++n) {
            Perm p(static_cast<std::size_t>(n));
            std::iota(p.begin(), p.end(), value_t{1});
            do {
                const Seq once = stack_sort(p);
                if (once != stack_sort_lazy(p)) {
                    detail = seq_to_string(p) + ": sorters disagree";
                    return false;
                }
                if (avoids_231(p) != std::is_sorted(once.begin(), once.end())) {
                    detail = seq_to_string(p) + ": pattern test disagrees";
                    return false;
                }
            } while (std::next_permutation(p.begin(), p.end()));
            if (enumerate_2ssp(n, EnumMethod::Brute) != T[static_cast<std::size_t>(n)]) {
                detail = "n=" + std::to_string(n) + ": enumeration methods disagree";
                return false;
            }
        }
        return true;
    });

    criterion(9, "wasp-waist decomposition inverts every construction",
              [&](std::string& detail) {
        // Every fish with at most 8 lower free edges arises from exactly one
        // construction event; decomposition must return that event.
        struct Event {
            CKind tag;
            int i;
            std::string key1, key2;
        };
        std::map<std::string, Event> made;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b)
                for (const FightingFish& f1 : F[static_cast<std::size_t>(a)])
                    for (const FightingFish& f2 : F[static_cast<std::size_t>(b)]) {
                        const std::string k1 = fish_key(f1), k2 = fish_key(f2);
                        const int flen = fish_stats(f2).fin;
                        const auto insert = [&](CKind tag, int i, const FightingFish& f) {
                            const auto [it, fresh] =
                                made.try_emplace(fish_key(f), Event{tag, i, k1, k2});
                            if (!fresh) {
                                detail = "two construction events share one fish";
                                return false;
                            }
                            return true;
                        };
                        if (!insert(CKind::C1, 0, c1_bullet(f1, f2))) return false;
                        if (f1.empty() || f2.empty()) continue;
                        for (int i = 1; i <= flen - 1; ++i)
                            if (!insert(CKind::C2, i, c2_bullet(f1, f2, i))) return false;
                    }
        std::int64_t expected = 0;
        for (int n = 1; n <= 7; ++n) expected += kCounts[n - 1];
        if (made.size() != static_cast<std::size_t>(expected)) {
            detail = "event census " + std::to_string(made.size());
            return false;
        }
        for (int n = 1; n <= 7; ++n)
            for (const FightingFish& f : F[static_cast<std::size_t>(n)]) {
                const WaspWaist w = waspwaist_decompose(f);
                const auto it = made.find(fish_key(f));
                if (it == made.end()) {
                    detail = "decomposed fish missing from the event map";
                    return false;
                }
                const Event& e = it->second;
                if (w.kind.tag != e.tag || (e.tag == CKind::C2 && w.kind.i != e.i) ||
                    fish_key(w.p1) != e.key1 || fish_key(w.p2) != e.key2) {
                    detail = "decomposition disagrees with the construction event";
                    return false;
                }
            }
        bool empty_guard = false;
        try {
            waspwaist_decompose(FightingFish{});
        } catch (const domain_error&) {
            empty_guard = true;
        }
        if (!empty_guard) detail = "empty fish decomposed";
        return empty_guard;
    });

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria hold\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failures);
    return 1;
}
