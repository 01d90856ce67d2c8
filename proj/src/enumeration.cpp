#include "finfish/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "finfish/bijection.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish.hpp"

namespace finfish {

namespace {

constexpr int kBruteCap = 10;

// Multiplicative scheme: every intermediate quotient is itself a binomial
// coefficient, so the divisions are exact.
unsigned __int128 binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int d = 1; d <= k; ++d) {
        r *= static_cast<unsigned>(n - k + d);
        r /= static_cast<unsigned>(d);
    }
    return r;
}

std::int64_t narrow(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
        throw internal_error(std::string(what) + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// Visits every 2SSP of S_n that starts with `first`, in lexicographic order.
template <typename F>
void scan_first(int n, value_t first, F&& fn) {
    Perm rest;
    for (value_t v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    Perm p(static_cast<std::size_t>(n));
    p[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), p.begin() + 1);
        if (is_two_stack_sortable(p)) fn(p);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// Workers take interleaved first entries; concatenating the per-first slices
// in entry order restores the global lexicographic order.
template <typename F>
void scan_parallel(int n, int workers, F&& per_first) {
    workers = std::clamp(workers, 1, n);
    if (workers == 1) {
        for (value_t f = 1; f <= n; ++f) per_first(f);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&per_first, n, w, workers] {
            for (value_t f = 1 + w; f <= n; f += workers) per_first(f);
        });
    for (std::thread& t : pool) t.join();
}

std::vector<Perm> enumerate_brute(int n, int workers) {
    std::vector<std::vector<Perm>> parts(static_cast<std::size_t>(n));
    scan_parallel(n, workers, [n, &parts](value_t first) {
        auto& slot = parts[static_cast<std::size_t>(first - 1)];
        scan_first(n, first, [&slot](const Perm& p) { slot.push_back(p); });
    });
    std::vector<Perm> out;
    for (std::vector<Perm>& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

std::vector<Perm> enumerate_grammar(int n) {
    std::vector<std::vector<Perm>> levels(static_cast<std::size_t>(n) + 1);
    levels[0] = {Perm{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<Perm>& out = levels[static_cast<std::size_t>(m)];
        for (int k = 0; k <= m - 1; ++k) {
            const auto& left = levels[static_cast<std::size_t>(k)];
            const auto& right = levels[static_cast<std::size_t>(m - 1 - k)];
            for (const Perm& p2 : right) {
                const int top = p2.empty() ? 0 : stats(p2).slmax;
                for (const Perm& p1 : left) {
                    out.push_back(construct_c1(p1, p2));
                    if (p1.empty()) continue;
                    for (int i = 1; i <= top; ++i) out.push_back(construct_c2(p1, p2, i));
                }
            }
        }
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw internal_error("grammar produced a duplicate permutation");
    }
    return std::move(levels[static_cast<std::size_t>(n)]);
}

void add_to_table(CountTable& t, const StatVector& s) {
    ++t.by_n[s.len];
    ++t.by_asc_des[{s.asc, s.des}];
    ++t.by_full_stats[stat_key(s)];
}

void merge_tables(CountTable& into, const CountTable& from) {
    for (const auto& [k, v] : from.by_n) into.by_n[k] += v;
    for (const auto& [k, v] : from.by_asc_des) into.by_asc_des[k] += v;
    for (const auto& [k, v] : from.by_full_stats) into.by_full_stats[k] += v;
}

}  // namespace

std::vector<Perm> enumerate_2ssp(int n, EnumMethod method, int workers) {
    if (n < 1) throw invalid_input("enumeration needs n >= 1");
    if (n > kBruteCap) throw resource_error("enumeration is capped at n = 10");
    return method == EnumMethod::Brute ? enumerate_brute(n, workers) : enumerate_grammar(n);
}

std::int64_t count_formula(int n) {
    if (n < 1) throw invalid_input("count_formula needs n >= 1");
    if (n > 40) throw resource_error("count_formula is capped at n = 40");
    unsigned __int128 num = 2 * binom(3 * n + 1, n);
    unsigned __int128 den =
        static_cast<unsigned __int128>(n + 1) * static_cast<unsigned>(3 * n + 1);
    if (num % den != 0) throw internal_error("count formula division is not exact");
    return narrow(num / den, "count_formula");
}

std::int64_t refined_count(int i, int j) {
    if (i < 0 || j < 0) throw invalid_input("refined_count needs i, j >= 0");
    if (i > 20 || j > 20) throw resource_error("refined_count is capped at i, j = 20");
    unsigned __int128 num = binom(2 * i + j + 1, j) * binom(i + 2 * j + 1, i);
    unsigned __int128 den =
        static_cast<unsigned __int128>(i + 1) * static_cast<unsigned>(j + 1);
    if (num % den != 0) throw internal_error("refined count division is not exact");
    return narrow(num / den, "refined_count");
}

StatKey stat_key(const StatVector& s) {
    return {s.len, s.lmax, s.rmax, s.asc, s.des, s.slmax, s.sldes};
}

CountTable tally_2ssp(int nmax, int workers) {
    if (nmax < 1) throw invalid_input("tally_2ssp needs nmax >= 1");
    if (nmax > kBruteCap) throw resource_error("tally_2ssp is capped at nmax = 10");
    CountTable table;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<CountTable> parts(static_cast<std::size_t>(n));
        scan_parallel(n, workers, [n, &parts](value_t first) {
            CountTable& local = parts[static_cast<std::size_t>(first - 1)];
            scan_first(n, first, [&local](const Perm& p) { add_to_table(local, stats(p)); });
        });
        for (const CountTable& part : parts) merge_tables(table, part);
    }
    return table;
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify_all(int nmax, int workers, const Classifier& cls) {
    if (nmax < 1) throw invalid_input("verify_all needs nmax >= 1");
    if (nmax > 8) throw resource_error("verify_all is exhaustive and capped at nmax = 8");
    const Classifier classify_fn = cls ? cls : Classifier(&classify);

    VerifyReport rep;
    rep.nmax = nmax;

    std::vector<std::vector<Perm>> grammar(static_cast<std::size_t>(nmax) + 1);
    std::vector<std::vector<Perm>> brute(static_cast<std::size_t>(nmax) + 1);
    for (int n = 1; n <= nmax; ++n) {
        grammar[static_cast<std::size_t>(n)] = enumerate_2ssp(n, EnumMethod::Grammar, workers);
        brute[static_cast<std::size_t>(n)] = enumerate_2ssp(n, EnumMethod::Brute, workers);
        rep.permutations += static_cast<std::int64_t>(grammar[static_cast<std::size_t>(n)].size());
    }
    const CountTable table = tally_2ssp(nmax, workers);

    auto run = [&rep](const std::string& name, auto&& body) {
        CheckResult c;
        c.name = name;
        try {
            body(c);
        } catch (const error& e) {
            c.pass = false;
            if (c.detail.empty()) c.detail = e.what();
        }
        rep.checks.push_back(std::move(c));
    };
    auto fail = [](CheckResult& c, std::string detail) {
        c.pass = false;
        c.detail = std::move(detail);
    };

    run("grammar-vs-brute", [&](CheckResult& c) {
        for (int n = 1; n <= nmax && c.pass; ++n) {
            const auto& g = grammar[static_cast<std::size_t>(n)];
            const auto& b = brute[static_cast<std::size_t>(n)];
            if (g == b) {
                c.checked += static_cast<std::int64_t>(g.size());
                continue;
            }
            std::ostringstream os;
            os << "n=" << n << ": grammar yields " << g.size() << " permutations, brute "
               << b.size();
            auto [gi, bi] = std::mismatch(g.begin(), g.end(), b.begin(), b.end());
            if (gi != g.end() || bi != b.end()) {
                os << "; first difference "
                   << (gi != g.end() ? seq_to_string(*gi) : std::string("<none>")) << " vs "
                   << (bi != b.end() ? seq_to_string(*bi) : std::string("<none>"));
            }
            fail(c, os.str());
        }
    });

    run("sorting-oracles", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n)
            for (const Perm& p : grammar[static_cast<std::size_t>(n)]) {
                const Seq once = stack_sort(p);
                if (once != stack_sort_lazy(p))
                    return fail(c, seq_to_string(p) + ": the two sorters disagree");
                if (!avoids_231(once))
                    return fail(c, seq_to_string(p) + ": S(p) contains a 231 pattern");
                const Seq twice = stack_sort(once);
                for (std::size_t k = 0; k < twice.size(); ++k)
                    if (twice[k] != static_cast<value_t>(k) + 1)
                        return fail(c, seq_to_string(p) + ": S(S(p)) = " + seq_to_string(twice));
                ++c.checked;
            }
    });

    run("counts-vs-formula", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n) {
            const std::int64_t want = count_formula(n);
            const auto it = table.by_n.find(n);
            const std::int64_t brute_n = it == table.by_n.end() ? 0 : it->second;
            const auto grammar_n =
                static_cast<std::int64_t>(grammar[static_cast<std::size_t>(n)].size());
            if (brute_n != want || grammar_n != want) {
                std::ostringstream os;
                os << "n=" << n << ": formula " << want << ", brute " << brute_n << ", grammar "
                   << grammar_n;
                return fail(c, os.str());
            }
            ++c.checked;
        }
    });

    run("refined-counts", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n) {
            std::int64_t row = 0;
            for (int i = 0; i <= n - 1; ++i) {
                const int j = n - 1 - i;
                const auto it = table.by_asc_des.find({i, j});
                const std::int64_t got = it == table.by_asc_des.end() ? 0 : it->second;
                const std::int64_t want = refined_count(i, j);
                if (got != want) {
                    std::ostringstream os;
                    os << "asc=" << i << " des=" << j << ": table " << got << ", formula "
                       << want;
                    return fail(c, os.str());
                }
                const auto mirror = table.by_asc_des.find({j, i});
                const std::int64_t sym = mirror == table.by_asc_des.end() ? 0 : mirror->second;
                if (sym != got) {
                    std::ostringstream os;
                    os << "asymmetry: (" << i << "," << j << ") counts " << got << " but ("
                       << j << "," << i << ") counts " << sym;
                    return fail(c, os.str());
                }
                row += got;
                ++c.checked;
            }
            if (row != count_formula(n)) {
                std::ostringstream os;
                os << "row n=" << n << " sums to " << row;
                return fail(c, os.str());
            }
        }
    });

    run("reconstruction", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n)
            for (const Perm& p : grammar[static_cast<std::size_t>(n)]) {
                try {
                    const DecompKind kind = classify_fn(p);
                    const auto [p1, p2] = decompose(p);
                    const Perm rebuilt = kind.tag == CKind::C1
                                             ? construct_c1(p1, p2)
                                             : construct_c2(p1, p2, kind.i);
                    if (rebuilt != p)
                        return fail(c, seq_to_string(p) + ": reconstructed as " +
                                           seq_to_string(rebuilt));
                } catch (const error& e) {
                    return fail(c, seq_to_string(p) + ": " + e.what());
                }
                ++c.checked;
            }
    });

    run("phi-bijection", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n) {
            std::set<std::string> keys;
            for (const Perm& p : grammar[static_cast<std::size_t>(n)]) {
                const FightingFish f = phi(p);
                const ValidationReport v = validate(f);
                if (!v.ok)
                    return fail(c, seq_to_string(p) + ": image fails " + v.invariant + ": " +
                                       v.detail);
                keys.insert(fish_key(f));
                if (phi_inverse(f) != p)
                    return fail(c, seq_to_string(p) + ": phi_inverse(phi(p)) = " +
                                       seq_to_string(phi_inverse(f)));
                ++c.checked;
            }
            if (keys.size() != grammar[static_cast<std::size_t>(n)].size()) {
                std::ostringstream os;
                os << "fish census at n=" << n << ": " << keys.size() << " distinct images of "
                   << grammar[static_cast<std::size_t>(n)].size() << " permutations";
                return fail(c, os.str());
            }
        }
    });

    run("stat-transfers", [&](CheckResult& c) {
        for (int n = 1; n <= nmax; ++n)
            for (const Perm& p : grammar[static_cast<std::size_t>(n)]) {
                const TransferReport tr = check_transfer(p);
                if (!tr.pass())
                    return fail(c, seq_to_string(p) + ": " + stats_to_string(tr.perm) +
                                       " against fish " + fish_stats_to_string(tr.fish));
                ++c.checked;
            }
    });

    return rep;
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "exhaustive verification up to n = " << r.nmax << " (" << r.permutations
       << " permutations per check family)\n";
    for (const CheckResult& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked)";
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    return os.str();
}

nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json entry = {{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}};
        entry["detail"] = c.detail.empty() ? nlohmann::json() : nlohmann::json(c.detail);
        checks.push_back(std::move(entry));
    }
    return {{"nmax", r.nmax},
            {"permutations", r.permutations},
            {"pass", r.all_pass()},
            {"checks", std::move(checks)}};
}

}  // namespace finfish
