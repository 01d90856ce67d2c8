#include "finfish/perm.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "finfish/errors.hpp"

namespace finfish {

void require_distinct(const Seq& a) {
    std::unordered_set<value_t> seen;
    seen.reserve(a.size() * 2);
    for (value_t x : a) {
        if (!seen.insert(x).second)
            throw invalid_input("duplicate entry " + std::to_string(x) + " in sequence");
    }
}

void require_perm(const Perm& p) {
    std::vector<bool> hit(p.size(), false);
    for (value_t x : p) {
        if (x < 1 || x > static_cast<value_t>(p.size()) || hit[static_cast<std::size_t>(x - 1)])
            throw invalid_input("not a permutation of 1.." + std::to_string(p.size()));
        hit[static_cast<std::size_t>(x - 1)] = true;
    }
}

Seq stack_sort(const Seq& a) {
    require_distinct(a);
    Seq out;
    out.reserve(a.size());
    // A frame is either a half-open range of a still to sort, or a pending
    // maximum to emit once both its sides are done.
    struct Frame {
        std::size_t lo, hi;
        value_t emit;
        bool is_emit;
    };
    std::vector<Frame> work;
    work.push_back({0, a.size(), 0, false});
    while (!work.empty()) {
        Frame f = work.back();
        work.pop_back();
        if (f.is_emit) {
            out.push_back(f.emit);
            continue;
        }
        if (f.lo >= f.hi) continue;
        std::size_t m = f.lo;
        for (std::size_t i = f.lo + 1; i < f.hi; ++i)
            if (a[i] > a[m]) m = i;
        // Emit last; left side must come out before the right side.
        work.push_back({0, 0, a[m], true});
        work.push_back({m + 1, f.hi, 0, false});
        work.push_back({f.lo, m, 0, false});
    }
    return out;
}

Seq stack_sort_lazy(const Seq& a) {
    require_distinct(a);
    Seq out, ls;
    out.reserve(a.size());
    for (value_t x : a) {
        while (!ls.empty() && ls.back() < x) {
            out.push_back(ls.back());
            ls.pop_back();
        }
        ls.push_back(x);
    }
    while (!ls.empty()) {
        out.push_back(ls.back());
        ls.pop_back();
    }
    return out;
}

Perm standardize(const Seq& a) {
    require_distinct(a);
    std::vector<std::size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
    Perm out(a.size());
    for (std::size_t rank = 0; rank < idx.size(); ++rank)
        out[idx[rank]] = static_cast<value_t>(rank + 1);
    return out;
}

namespace {

value_t checked_add(value_t x, value_t k) {
    value_t r;
    if (__builtin_add_overflow(x, k, &r)) throw internal_error("shift overflow");
    return r;
}

}  // namespace

Seq shift_uniform(const Seq& s, value_t k) {
    require_distinct(s);
    Seq out;
    out.reserve(s.size());
    for (value_t x : s) out.push_back(checked_add(x, k));
    return out;
}

Seq shift_split(const Seq& s, value_t k1, value_t m, value_t k2) {
    if (k1 >= k2) throw invalid_input("shift_split requires k1 < k2");
    require_distinct(s);
    Seq out;
    out.reserve(s.size());
    for (value_t x : s) out.push_back(checked_add(x, x < m ? k1 : k2));
    return out;
}

bool avoids_231(const Seq& a) {
    require_distinct(a);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j] <= a[i]) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                if (a[k] < a[i]) return false;
        }
    return true;
}

bool is_two_stack_sortable(const Perm& p) {
    require_perm(p);
    if (p.empty()) throw invalid_input("the empty permutation is not in the 2SSP domain");
    Seq s = stack_sort(stack_sort(p));
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<value_t>(i + 1)) return false;
    return true;
}

std::vector<value_t> left_to_right_maxima(const Seq& a) {
    std::vector<value_t> out;
    bool have = false;
    value_t best = 0;
    for (value_t x : a) {
        if (!have || x > best) {
            out.push_back(x);
            best = x;
            have = true;
        }
    }
    return out;
}

StatVector stats(const Perm& p) {
    require_perm(p);
    StatVector v;
    v.len = static_cast<int>(p.size());
    if (p.empty()) return v;

    value_t best = p[0];
    v.lmax = 1;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > best) {
            best = p[i];
            ++v.lmax;
        }
    best = p.back();
    v.rmax = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;)
        if (p[i] > best) {
            best = p[i];
            ++v.rmax;
        }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        (p[i] < p[i + 1] ? v.asc : v.des) += 1;

    Seq s = stack_sort(p);
    v.slmax = static_cast<int>(left_to_right_maxima(s).size());
    // Position of each value in S(p); values are exactly 1..n here.
    std::vector<std::size_t> pos(s.size() + 1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[static_cast<std::size_t>(s[i])] = i;
    for (std::size_t a = 2; a <= s.size(); ++a)
        if (pos[a] < pos[a - 1]) ++v.sldes;
    return v;
}

Seq parse_seq(const std::string& text) {
    Seq out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    };
    skip_ws();
    if (i == n) return out;
    for (;;) {
        skip_ws();
        std::size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = 0;
        while (i < n && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++digits;
        }
        if (digits == 0)
            throw invalid_input("expected an integer at position " + std::to_string(start) +
                                " of \"" + text + "\"");
        try {
            out.push_back(std::stoll(text.substr(start, i - start)));
        } catch (const std::out_of_range&) {
            throw invalid_input("integer out of range at position " + std::to_string(start));
        }
        skip_ws();
        if (i == n) break;
        if (text[i] != ',')
            throw invalid_input("expected ',' at position " + std::to_string(i) + " of \"" + text + "\"");
        ++i;
    }
    require_distinct(out);
    return out;
}

std::string seq_to_string(const Seq& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

std::string stats_to_string(const StatVector& s) {
    std::ostringstream os;
    os << "len=" << s.len << " lmax=" << s.lmax << " rmax=" << s.rmax << " asc=" << s.asc
       << " des=" << s.des << " slmax=" << s.slmax << " sldes=" << s.sldes;
    return os.str();
}

}  // namespace finfish
