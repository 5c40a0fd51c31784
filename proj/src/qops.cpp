#include "qaudit/qops.hpp"

namespace qaudit {

HeineOrder HeineOrder::finite(int n) {
    if (n < 0) throw std::invalid_argument("HeineOrder: negative order");
    return HeineOrder(std::optional<int>(n));
}

std::vector<MultiSeries> operator_term_ledger(const MonomialArg& b, const std::string& var,
                                              const MultiSeries& f) {
    const unsigned db = b.degree();
    int kmax;
    if (b.coeff.is_zero()) {
        kmax = 0;
    } else if (db >= 1) {
        kmax = f.order() / static_cast<int>(db);
    } else {
        // Scalar b: only D_q^k annihilation can stop the sum, so f must be a
        // polynomial in var. A term at the truncation boundary with maximal
        // var-exponent is indistinguishable from a cut-off series; reject it.
        unsigned emax = 0;
        for (const auto& [idx, c] : f.terms())
            emax = std::max(emax, idx.exp(f.vars().index_of(var)));
        if (static_cast<int>(emax) == f.order() && f.order() > 0)
            throw std::invalid_argument("sum does not truncate");
        kmax = static_cast<int>(emax);
    }

    std::vector<MultiSeries> ledger;
    MultiSeries g = f; // D_q^k f
    MonomialArg bpow{RatFunQ(1), MultiIndex::zero(f.vars().size())};
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            g = dq(g, var);
            bpow = MonomialArg{bpow.coeff * b.coeff, bpow.index.plus(b.index)};
            if (g.is_zero()) break;
        }
        ledger.push_back(g.mul_monomial(bpow));
    }
    return ledger;
}

namespace {

MultiSeries weighted_ledger_sum(const std::vector<MultiSeries>& ledger, const HeineOrder& order) {
    MultiSeries acc;
    bool started = false;
    RatFunQ poch_n(1);  // (q^n;q)_k, running
    RatFunQ poch_qk(1); // (q;q)_k, running
    for (std::size_t k = 0; k < ledger.size(); ++k) {
        if (k > 0) {
            if (!order.is_infinite())
                poch_n *= RatFunQ(1) -
                          RatFunQ::q_power(order.value() + static_cast<long long>(k) - 1);
            poch_qk *= RatFunQ(1) - RatFunQ::q_power(static_cast<long long>(k));
        }
        if (!order.is_infinite() && poch_n.is_zero()) break; // H_0 and friends
        MultiSeries term = ledger[k].scaled(poch_n / poch_qk);
        if (!started) {
            acc = term;
            started = true;
        } else {
            acc += term;
        }
    }
    return acc;
}

} // namespace

MultiSeries binomial_operator(const HeineOrder& order, const MonomialArg& b,
                              const std::string& var, const MultiSeries& f) {
    auto ledger = operator_term_ledger(b, var, f);
    return weighted_ledger_sum(ledger, order);
}

MultiSeries heine_apply(int n, const MonomialArg& b, const std::string& var,
                        const MultiSeries& f) {
    return binomial_operator(HeineOrder::finite(n), b, var, f);
}

MultiSeries t_apply(const MonomialArg& b, const std::string& var, const MultiSeries& f) {
    return binomial_operator(HeineOrder::infinity(), b, var, f);
}

MultiSeries hahn(int m, const MultiSeries& alpha, const MultiSeries& xarg,
                 const MultiSeries& yarg) {
    if (m < 0) throw std::invalid_argument("hahn: negative degree");
    const VarTable& vars = alpha.vars();
    const int order = std::min({alpha.order(), xarg.order(), yarg.order()});

    std::vector<MultiSeries> ypow(static_cast<std::size_t>(m) + 1);
    ypow[0] = MultiSeries::one(vars, order);
    for (int i = 1; i <= m; ++i) ypow[static_cast<std::size_t>(i)] =
        ypow[static_cast<std::size_t>(i - 1)] * yarg;

    MultiSeries acc(vars, order);
    MultiSeries poch = MultiSeries::one(vars, order); // (alpha;q)_k, running
    MultiSeries xpow = MultiSeries::one(vars, order);
    for (int k = 0; k <= m; ++k) {
        if (k > 0) {
            poch = poch * (MultiSeries::one(vars, order) -
                           alpha.scaled(RatFunQ::q_power(k - 1)));
            xpow = xpow * xarg;
            if (poch.is_zero()) break;
        }
        acc += (poch * xpow * ypow[static_cast<std::size_t>(m - k)]).scaled(qbinom(m, k));
    }
    return acc;
}

MultiSeries hahn(int m, const RatFunQ& alpha, const MultiSeries& xarg, const MultiSeries& yarg) {
    return hahn(m, MultiSeries::constant(xarg.vars(), xarg.order(), alpha), xarg, yarg);
}

MultiSeries rogers_szego(int m, const MultiSeries& b, const MultiSeries& x) {
    if (m < 0) throw std::invalid_argument("rogers_szego: negative degree");
    const VarTable& vars = b.vars();
    const int order = std::min(b.order(), x.order());
    std::vector<MultiSeries> xpow(static_cast<std::size_t>(m) + 1);
    xpow[0] = MultiSeries::one(vars, order);
    for (int i = 1; i <= m; ++i) xpow[static_cast<std::size_t>(i)] =
        xpow[static_cast<std::size_t>(i - 1)] * x;
    MultiSeries acc(vars, order);
    MultiSeries bpow = MultiSeries::one(vars, order);
    for (int k = 0; k <= m; ++k) {
        if (k > 0) bpow = bpow * b;
        acc += (bpow * xpow[static_cast<std::size_t>(m - k)]).scaled(qbinom(m, k));
    }
    return acc;
}

} // namespace qaudit
