#include "finfish/series.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "finfish/enumeration.hpp"
#include "finfish/errors.hpp"
#include "finfish/perm.hpp"

namespace finfish {

namespace {

constexpr int kVarCount = 7;
constexpr const char* kVarNames[kVarCount] = {"t", "x", "u", "v", "p", "q", "s"};

int shift_of(int var) { return 8 * (kVarCount - 1 - var); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw internal_error("series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw internal_error("series coefficient overflow");
    return r;
}

int t_exp(MonoKey m) { return static_cast<int>((m >> shift_of(0)) & 0xff); }

// Keys whose t-exponent exceeds `limit` form a suffix of any key-sorted
// range, so one comparison against this sentinel prunes them.
MonoKey t_fence(int limit) { return static_cast<MonoKey>(limit + 1) << shift_of(0); }

TruncatedSeries normalize(int order, std::unordered_map<MonoKey, std::int64_t>&& acc) {
    TruncatedSeries r;
    r.order = order;
    r.terms.reserve(acc.size());
    for (const auto& [key, coef] : acc)
        if (coef != 0) r.terms.emplace_back(key, coef);
    std::sort(r.terms.begin(), r.terms.end());
    return r;
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order != b.order) {
        std::ostringstream os;
        os << "series order mismatch: " << a.order << " against " << b.order;
        throw invalid_input(os.str());
    }
}

}  // namespace

MonoKey mono_make(int t, int x, int u, int v, int p, int q, int s) {
    const int e[kVarCount] = {t, x, u, v, p, q, s};
    MonoKey m = 0;
    for (int k = 0; k < kVarCount; ++k) {
        if (e[k] < 0 || e[k] > 255) throw invalid_input("monomial exponent outside 0..255");
        m |= static_cast<MonoKey>(e[k]) << shift_of(k);
    }
    return m;
}

int mono_exp(MonoKey m, Var var) {
    return static_cast<int>((m >> shift_of(static_cast<int>(var))) & 0xff);
}

MonoKey mono_mul(MonoKey a, MonoKey b) {
    MonoKey m = 0;
    for (int k = 0; k < kVarCount; ++k) {
        const int sum = static_cast<int>((a >> shift_of(k)) & 0xff) +
                        static_cast<int>((b >> shift_of(k)) & 0xff);
        if (sum > 255) throw internal_error("monomial exponent overflow");
        m |= static_cast<MonoKey>(sum) << shift_of(k);
    }
    return m;
}

std::string mono_to_string(MonoKey m) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < kVarCount; ++k) {
        const int e = static_cast<int>((m >> shift_of(k)) & 0xff);
        if (e == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << kVarNames[k];
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

TruncatedSeries series_zero(int order) {
    TruncatedSeries r;
    r.order = order;
    return r;
}

TruncatedSeries series_one(int order) { return series_term(order, 0, 1); }

TruncatedSeries series_term(int order, MonoKey m, std::int64_t coef) {
    TruncatedSeries r;
    r.order = order;
    if (coef != 0 && t_exp(m) <= order) r.terms.emplace_back(m, coef);
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r;
    r.order = a.order;
    r.terms.reserve(a.terms.size() + b.terms.size());
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
            r.terms.push_back(*ia++);
        } else if (ia == a.terms.end() || ib->first < ia->first) {
            r.terms.push_back(*ib++);
        } else {
            const std::int64_t coef = checked_add(ia->second, ib->second);
            if (coef != 0) r.terms.emplace_back(ia->first, coef);
            ++ia, ++ib;
        }
    }
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries neg = b;
    for (auto& [key, coef] : neg.terms) coef = checked_mul(coef, -1);
    return series_add(a, neg);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::unordered_map<MonoKey, std::int64_t> acc;
    for (const auto& [ka, ca] : a.terms) {
        const MonoKey fence = t_fence(a.order - t_exp(ka));
        const auto stop = std::lower_bound(
            b.terms.begin(), b.terms.end(), fence,
            [](const auto& term, MonoKey key) { return term.first < key; });
        for (auto ib = b.terms.begin(); ib != stop; ++ib) {
            std::int64_t& slot = acc[mono_mul(ka, ib->first)];
            slot = checked_add(slot, checked_mul(ca, ib->second));
        }
    }
    return normalize(a.order, std::move(acc));
}

TruncatedSeries specialize(const TruncatedSeries& a, Var var) {
    if (var == Var::t) throw invalid_input("cannot specialize t");
    const MonoKey mask = ~(static_cast<MonoKey>(0xff) << shift_of(static_cast<int>(var)));
    std::unordered_map<MonoKey, std::int64_t> acc;
    for (const auto& [key, coef] : a.terms) {
        std::int64_t& slot = acc[key & mask];
        slot = checked_add(slot, coef);
    }
    return normalize(a.order, std::move(acc));
}

TruncatedSeries divided_difference_x(const TruncatedSeries& a) {
    const int xshift = shift_of(static_cast<int>(Var::x));
    std::unordered_map<MonoKey, std::int64_t> acc;
    for (const auto& [key, coef] : a.terms) {
        const int xe = static_cast<int>((key >> xshift) & 0xff);
        const MonoKey base = key & ~(static_cast<MonoKey>(0xff) << xshift);
        for (int k = 0; k < xe; ++k) {
            std::int64_t& slot = acc[base | (static_cast<MonoKey>(k) << xshift)];
            slot = checked_add(slot, coef);
        }
    }
    TruncatedSeries quotient = normalize(a.order, std::move(acc));

    TruncatedSeries x_minus_1 = series_term(a.order, mono_make(0, 1), 1);
    x_minus_1 = series_add(x_minus_1, series_term(a.order, 0, -1));
    if (series_add(series_mul(x_minus_1, quotient), specialize(a, Var::x)) != a)
        throw internal_error("divided difference failed to re-multiply");
    return quotient;
}

std::int64_t coefficient(const TruncatedSeries& a, MonoKey m) {
    const auto it = std::lower_bound(
        a.terms.begin(), a.terms.end(), m,
        [](const auto& term, MonoKey key) { return term.first < key; });
    return it != a.terms.end() && it->first == m ? it->second : 0;
}

std::map<int, std::int64_t> counts_by_t(const TruncatedSeries& a) {
    std::map<int, std::int64_t> out;
    for (const auto& [key, coef] : a.terms) {
        auto [it, fresh] = out.try_emplace(t_exp(key), 0);
        (void)fresh;
        it->second = checked_add(it->second, coef);
    }
    std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
    return out;
}

namespace {

// Right-hand side of the master equation applied to a candidate T.
TruncatedSeries rhs_master(const TruncatedSeries& T) {
    const int N = T.order;
    const TruncatedSeries one = series_one(N);
    const TruncatedSeries txuv = series_term(N, mono_make(1, 1, 1, 1), 1);
    const TruncatedSeries ps = series_term(N, mono_make(0, 0, 0, 0, 1), 1);
    const TruncatedSeries qs = series_term(N, mono_make(0, 0, 0, 0, 0, 1), 1);
    const TruncatedSeries pqs = series_term(N, mono_make(0, 0, 0, 0, 1, 1, 1), 1);

    const TruncatedSeries Tv1 = specialize(T, Var::v);
    const TruncatedSeries Tu1 = specialize(T, Var::u);
    const TruncatedSeries plain =
        series_mul(series_add(one, series_mul(ps, Tv1)),
                   series_add(one, series_mul(qs, Tu1)));
    const TruncatedSeries waisted =
        series_mul(pqs, series_mul(Tv1, divided_difference_x(Tu1)));
    return series_mul(txuv, series_add(plain, waisted));
}

// The u=1, v=1 and u=v=1 images of the master equation.  Each right-hand
// side consumes the matching specializations of the candidate.
TruncatedSeries rhs_specialized(const TruncatedSeries& with_p, const TruncatedSeries& with_q,
                                MonoKey head) {
    const int N = with_p.order;
    const TruncatedSeries one = series_one(N);
    const TruncatedSeries lead = series_term(N, head, 1);
    const TruncatedSeries ps = series_term(N, mono_make(0, 0, 0, 0, 1), 1);
    const TruncatedSeries qs = series_term(N, mono_make(0, 0, 0, 0, 0, 1), 1);
    const TruncatedSeries pqs = series_term(N, mono_make(0, 0, 0, 0, 1, 1, 1), 1);

    const TruncatedSeries plain = series_mul(series_add(one, series_mul(ps, with_p)),
                                             series_add(one, series_mul(qs, with_q)));
    const TruncatedSeries waisted =
        series_mul(pqs, series_mul(with_p, divided_difference_x(with_q)));
    return series_mul(lead, series_add(plain, waisted));
}

}  // namespace

TruncatedSeries iterate_T(int order) {
    if (order < 1) throw invalid_input("iterate_T needs order >= 1");
    if (order > 10) throw resource_error("iterate_T is capped at order 10");
    TruncatedSeries T = series_zero(order);
    for (int round = 0; round < order; ++round) T = rhs_master(T);
    if (rhs_master(T) != T) throw internal_error("master equation iteration did not converge");
    return T;
}

TruncatedSeries series_from_enumeration(int order) {
    if (order < 1) throw invalid_input("series_from_enumeration needs order >= 1");
    if (order > 8) throw resource_error("series_from_enumeration is capped at order 8");
    std::unordered_map<MonoKey, std::int64_t> acc;
    for (int n = 1; n <= order; ++n)
        for (const Perm& perm : enumerate_2ssp(n, EnumMethod::Grammar)) {
            const StatVector st = stats(perm);
            const MonoKey key =
                mono_make(st.len, st.slmax, st.lmax, st.rmax, st.asc, st.des, st.sldes);
            std::int64_t& slot = acc[key];
            slot = checked_add(slot, 1);
        }
    return normalize(order, std::move(acc));
}

bool ResidualReport::all_zero() const {
    return std::all_of(equations.begin(), equations.end(),
                       [](const ResidualEntry& e) { return e.zero; });
}

ResidualReport check_system_for(const TruncatedSeries& T) {
    const TruncatedSeries Tu1 = specialize(T, Var::u);
    const TruncatedSeries Tv1 = specialize(T, Var::v);
    const TruncatedSeries Tuv1 = specialize(Tu1, Var::v);

    ResidualReport rep;
    auto record = [&rep](const std::string& label, const TruncatedSeries& lhs,
                         const TruncatedSeries& rhs) {
        ResidualEntry e;
        e.equation = label;
        const TruncatedSeries residual = series_sub(lhs, rhs);
        e.zero = residual.terms.empty();
        if (!e.zero) {
            std::ostringstream os;
            os << residual.terms.front().second;
            const std::string vars = mono_to_string(residual.terms.front().first);
            if (!vars.empty()) os << ' ' << vars;
            e.offending = os.str();
        }
        rep.equations.push_back(std::move(e));
    };

    record("full", T, rhs_master(T));
    record("u=1", Tu1, rhs_specialized(Tuv1, Tu1, mono_make(1, 1, 0, 1)));
    record("v=1", Tv1, rhs_specialized(Tv1, Tuv1, mono_make(1, 1, 1, 0)));
    record("u=v=1", Tuv1, rhs_specialized(Tuv1, Tuv1, mono_make(1, 1)));
    return rep;
}

ResidualReport check_system(int order) {
    if (order < 1) throw invalid_input("check_system needs order >= 1");
    if (order > 8) throw resource_error("check_system is capped at order 8");
    return check_system_for(iterate_T(order));
}

std::string series_to_string(const TruncatedSeries& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coef] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << coef;
        const std::string vars = mono_to_string(key);
        if (!vars.empty()) os << ' ' << vars;
    }
    return os.str();
}

nlohmann::json series_to_json(const TruncatedSeries& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coef] : a.terms) {
        nlohmann::json entry = {{"coef", coef}};
        for (int k = 0; k < kVarCount; ++k)
            entry[kVarNames[k]] = static_cast<int>((key >> shift_of(k)) & 0xff);
        terms.push_back(std::move(entry));
    }
    return {{"order", a.order}, {"terms", std::move(terms)}};
}

}  // namespace finfish
