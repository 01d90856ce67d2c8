#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

// Exact multivariate power series truncated in t, and the fixed-point
// machinery for the master functional equation of the 2SSP series
//
//   T = t x u v (1 + p T|v=1)(1 + q T|u=1) + t x u v p q s T|v=1 D(T|u=1),
//
// where D is the divided difference (A - A|x=1)/(x - 1).  A permutation pi
// contributes t^len x^slmax u^lmax v^rmax p^asc q^des s^sldes, so the
// coefficient of t^n tabulates all seven statistics over T_n.

namespace finfish {

enum class Var : int { t = 0, x, u, v, p, q, s };

// One byte per exponent with t highest, so raw key order is t-degree first.
using MonoKey = std::uint64_t;

MonoKey mono_make(int t, int x = 0, int u = 0, int v = 0, int p = 0, int q = 0, int s = 0);
int mono_exp(MonoKey m, Var var);
MonoKey mono_mul(MonoKey a, MonoKey b);
std::string mono_to_string(MonoKey m);  // "t^2 x u"; the unit monomial gives ""

struct TruncatedSeries {
    int order = 0;  // terms with t-exponent above this are discarded
    std::vector<std::pair<MonoKey, std::int64_t>> terms;  // key-ascending, no zeros

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_zero(int order);
TruncatedSeries series_one(int order);
TruncatedSeries series_term(int order, MonoKey m, std::int64_t coef);

// Exact ring operations; the operands must share one truncation order.
// Coefficient overflow raises internal_error.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Sets var := 1 by summing coefficients over its exponent.  Any variable but
// t; eliminating t would break the truncation bookkeeping.
TruncatedSeries specialize(const TruncatedSeries& a, Var var);

// (a - a|x=1)/(x - 1), computed per monomial: c x^k contributes c to
// x^{k-1}, ..., x^0.  The quotient is re-multiplied and compared against a,
// so an inexact division cannot slip through.
TruncatedSeries divided_difference_x(const TruncatedSeries& a);

std::int64_t coefficient(const TruncatedSeries& a, MonoKey m);

// Every variable except t set to 1: n -> number of objects of size n.
std::map<int, std::int64_t> counts_by_t(const TruncatedSeries& a);

// Fixed-point iteration of the master equation from T = 0.  The global
// factor t makes coefficients of t^k exact after k rounds; one extra round
// must change nothing, otherwise internal_error.  order in 1..10.
TruncatedSeries iterate_T(int order);

// The same series assembled directly from the permutations.  order in 1..8.
TruncatedSeries series_from_enumeration(int order);

struct ResidualEntry {
    std::string equation;   // full, u=1, v=1, u=v=1
    bool zero = true;
    std::string offending;  // lowest nonzero residual term, empty when zero
};

struct ResidualReport {
    std::vector<ResidualEntry> equations;

    bool all_zero() const;
};

// Residuals of the master equation and its three specializations, evaluated
// on a caller-supplied candidate series.
ResidualReport check_system_for(const TruncatedSeries& T);

// check_system_for on iterate_T(order); order in 1..8.
ResidualReport check_system(int order);

// Terms in key order, "coef vars" with unit exponents left bare:
// "1 t x u v + 1 t^2 x^2 u v^2 q + ...".  The zero series prints "0".
std::string series_to_string(const TruncatedSeries& a);
nlohmann::json series_to_json(const TruncatedSeries& a);

}  // namespace finfish
