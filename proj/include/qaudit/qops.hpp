/// @file qops.hpp
/// @brief Heine binomial operators H_n(bD_q), their limit operator T(bD_q),
///        homogeneous Hahn polynomials, and Rogers-Szego polynomials.
///
/// H_n(b D_q) f = sum_k (q^n;q)_k / (q;q)_k * b^k D_q^k f, formally
/// 1/(b D_q; q)_n; the n -> infinity limit replaces (q^n;q)_k by 1, giving
/// T(b D_q) = sum_k (b D_q)^k / (q;q)_k.
///
/// Order bookkeeping: D_q costs one order per application and multiplying by
/// the monomial b^k restores k*deg(b), so for deg(b) >= 1 every operator
/// image is exact at the input's order.
#pragma once

#include "qaudit/qcore.hpp"

#include <optional>

namespace qaudit {

/// Finite order n >= 0 selecting (q^n;q)_k/(q;q)_k, or infinity selecting
/// the T-operator coefficients 1/(q;q)_k.
class HeineOrder {
public:
    static HeineOrder finite(int n);
    static HeineOrder infinity() { return HeineOrder(std::nullopt); }

    bool is_infinite() const { return !n_.has_value(); }
    int value() const { return n_.value(); }

private:
    explicit HeineOrder(std::optional<int> n) : n_(n) {}
    std::optional<int> n_;
};

/// Per-k contributions b^k D_q^k f (no coefficient weights); shared ledger
/// behind both operators and the basis of the limit-consistency check.
/// The sum terminates either because deg(b) >= 1 stacks analytic degree or
/// because D_q^k annihilates a polynomial input; a var-saturated series with
/// a scalar b cannot terminate and is rejected ("sum does not truncate").
std::vector<MultiSeries> operator_term_ledger(const MonomialArg& b, const std::string& var,
                                              const MultiSeries& f);

/// Applies the operator with the given order to f.
MultiSeries binomial_operator(const HeineOrder& order, const MonomialArg& b,
                              const std::string& var, const MultiSeries& f);

/// H_n(b D_q) f for finite n >= 0.
MultiSeries heine_apply(int n, const MonomialArg& b, const std::string& var,
                        const MultiSeries& f);

/// T(b D_q) f.
MultiSeries t_apply(const MonomialArg& b, const std::string& var, const MultiSeries& f);

/// Homogeneous Hahn polynomial
/// Phi_m^(alpha)(x, y) = sum_k [m,k]_q (alpha;q)_k x^k y^(m-k),
/// with (alpha;q)_k the finite product of series factors (alpha may itself
/// carry analytic variables).
MultiSeries hahn(int m, const MultiSeries& alpha, const MultiSeries& xarg,
                 const MultiSeries& yarg);

/// Convenience overload for a scalar alpha.
MultiSeries hahn(int m, const RatFunQ& alpha, const MultiSeries& xarg, const MultiSeries& yarg);

/// Rogers-Szego polynomial r_m(b, x) = sum_k [m,k]_q b^k x^(m-k); the
/// alpha = 0 degeneration of the Hahn family.
MultiSeries rogers_szego(int m, const MultiSeries& b, const MultiSeries& x);

} // namespace qaudit
