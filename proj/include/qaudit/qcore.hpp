/// @file qcore.hpp
/// @brief q-combinatorial primitives over truncated series: q-shifted
///        factorials (finite and infinite), Gaussian binomials, the two
///        q-exponentials, the general basic hypergeometric series, and the
///        q-differential operator D_q.
#pragma once

#include "qaudit/pseries.hpp"

#include <stdexcept>
#include <vector>

namespace qaudit {

/// Raised when a series is undefined because a Pochhammer factor in a
/// denominator vanishes; the auditor maps this to an UNDEFINED verdict
/// rather than treating it as a failure.
class undefined_series : public std::runtime_error {
public:
    explicit undefined_series(const std::string& what) : std::runtime_error(what) {}
};

// ---- scalar q-combinatorics -------------------------------------------------

/// (c;q)_n for a scalar c: prod_{j<n} (1 - q^j c). n < 0 is rejected.
RatFunQ poch_scalar(const RatFunQ& c, int n);

/// (q;q)_n.
RatFunQ poch_q(int n);

/// Gaussian binomial [n,k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k}); a polynomial
/// in q. Zero when k < 0 or k > n; n < 0 is rejected.
RatFunQ qbinom(int n, int k);

/// q^(k(k-1)/2) as an exact scalar; k >= 0.
RatFunQ q_binom2_power(int k);

// ---- Pochhammer series ------------------------------------------------------

/// (u;q)_n = prod_{j<n} (1 - q^j u) as an exact series; u may have analytic
/// degree 0, in which case the result is a constant series.
/// Throws std::invalid_argument("negative Pochhammer length") for n < 0.
MultiSeries qpoch_n(const MonomialArg& u, int n, const VarTable& vars, int order);

/// (u;q)_inf truncated at the given order, computed from the Euler expansion
/// sum_k q^(k(k-1)/2) (-u)^k / (q;q)_k. The zero argument yields 1; a
/// nonzero argument of analytic degree 0 does not truncate and is rejected.
MultiSeries qpoch_inf(const MonomialArg& u, const VarTable& vars, int order);

/// (u1, u2, ..., um; q)_inf: product of the individual infinite symbols.
MultiSeries qpoch_multi(const std::vector<MonomialArg>& args, const VarTable& vars, int order);

// ---- q-exponentials ---------------------------------------------------------

/// e_q(u) = sum_k u^k / (q;q)_k = 1/(u;q)_inf.
MultiSeries eq_exp(const MonomialArg& u, const VarTable& vars, int order);

/// E_q(u) = sum_k q^(k(k-1)/2) u^k / (q;q)_k = (-u;q)_inf.
MultiSeries Eq_exp(const MonomialArg& u, const VarTable& vars, int order);

// ---- basic hypergeometric series --------------------------------------------

/// r_phi_s data: term_k = prod_i (a_i;q)_k / ((q;q)_k prod_j (b_j;q)_k)
///               * [(-1)^k q^(k(k-1)/2)]^(1+s-r) * z^k.
struct PhiSpec {
    std::vector<MonomialArg> num_params;
    std::vector<MonomialArg> den_params;
    MonomialArg argument;
};

/// Truncated value of the series described by a PhiSpec.
/// Throws undefined_series when a scalar denominator Pochhammer vanishes at
/// some k within range ("undefined series (zero denominator at k=...)").
/// Throws std::invalid_argument when the sum cannot terminate.
MultiSeries phi_series(const PhiSpec& spec, const VarTable& vars, int order);

// ---- q-differential operator ------------------------------------------------

/// D_q f = (f(x) - f(q x))/x: each term c x^m (rest) maps to
/// c (1-q^m) x^(m-1) (rest). The declared order drops by one because the
/// degree-N slot of the result would need degree-(N+1) input data.
MultiSeries dq(const MultiSeries& f, const std::string& var);

/// k-fold application of D_q.
MultiSeries dq_k(const MultiSeries& f, const std::string& var, int k);

} // namespace qaudit
