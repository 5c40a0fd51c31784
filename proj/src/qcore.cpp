#include "qaudit/qcore.hpp"

#include <sstream>

namespace qaudit {

// ---------------------------------------------------------------------------
// Scalar q-combinatorics
// ---------------------------------------------------------------------------

RatFunQ poch_scalar(const RatFunQ& c, int n) {
    if (n < 0) throw std::invalid_argument("negative Pochhammer length");
    RatFunQ acc(1);
    for (int j = 0; j < n; ++j) acc *= RatFunQ(1) - RatFunQ::q_power(j) * c;
    return acc;
}

RatFunQ poch_q(int n) {
    return poch_scalar(RatFunQ::q_power(1), n);
}

RatFunQ qbinom(int n, int k) {
    if (n < 0) throw std::invalid_argument("qbinom: negative n");
    if (k < 0 || k > n) return RatFunQ();
    return poch_q(n) / (poch_q(k) * poch_q(n - k));
}

RatFunQ q_binom2_power(int k) {
    return RatFunQ::q_power(static_cast<long long>(k) * (k - 1) / 2);
}

// ---------------------------------------------------------------------------
// Pochhammer series
// ---------------------------------------------------------------------------

MultiSeries qpoch_n(const MonomialArg& u, int n, const VarTable& vars, int order) {
    if (n < 0) throw std::invalid_argument("negative Pochhammer length");
    MultiSeries acc = MultiSeries::one(vars, order);
    for (int j = 0; j < n; ++j) {
        MultiSeries factor = MultiSeries::one(vars, order) -
                             MultiSeries::monomial(vars, order, u.scaled(RatFunQ::q_power(j)));
        acc = acc * factor;
    }
    return acc;
}

MultiSeries qpoch_inf(const MonomialArg& u, const VarTable& vars, int order) {
    if (u.coeff.is_zero()) return MultiSeries::one(vars, order);
    if (u.degree() == 0) throw std::invalid_argument("non-truncating infinite product");
    MultiSeries acc = MultiSeries::one(vars, order);
    const int kmax = order / static_cast<int>(u.degree());
    for (int k = 1; k <= kmax; ++k) {
        const RatFunQ c = q_binom2_power(k) / poch_q(k);
        MonomialArg term = u.negated().pow(static_cast<unsigned>(k)).scaled(c);
        acc += MultiSeries::monomial(vars, order, term);
    }
    return acc;
}

MultiSeries qpoch_multi(const std::vector<MonomialArg>& args, const VarTable& vars, int order) {
    MultiSeries acc = MultiSeries::one(vars, order);
    for (const auto& u : args) acc = acc * qpoch_inf(u, vars, order);
    return acc;
}

// ---------------------------------------------------------------------------
// q-exponentials
// ---------------------------------------------------------------------------

MultiSeries eq_exp(const MonomialArg& u, const VarTable& vars, int order) {
    if (u.coeff.is_zero()) return MultiSeries::one(vars, order);
    if (u.degree() == 0) throw std::invalid_argument("non-truncating q-exponential");
    MultiSeries acc = MultiSeries::one(vars, order);
    const int kmax = order / static_cast<int>(u.degree());
    for (int k = 1; k <= kmax; ++k)
        acc += MultiSeries::monomial(vars, order,
                                     u.pow(static_cast<unsigned>(k)).scaled(poch_q(k).inverse()));
    return acc;
}

MultiSeries Eq_exp(const MonomialArg& u, const VarTable& vars, int order) {
    if (u.coeff.is_zero()) return MultiSeries::one(vars, order);
    if (u.degree() == 0) throw std::invalid_argument("non-truncating q-exponential");
    MultiSeries acc = MultiSeries::one(vars, order);
    const int kmax = order / static_cast<int>(u.degree());
    for (int k = 1; k <= kmax; ++k) {
        const RatFunQ c = q_binom2_power(k) / poch_q(k);
        acc += MultiSeries::monomial(vars, order, u.pow(static_cast<unsigned>(k)).scaled(c));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Basic hypergeometric series
// ---------------------------------------------------------------------------

MultiSeries phi_series(const PhiSpec& spec, const VarTable& vars, int order) {
    const int r = static_cast<int>(spec.num_params.size());
    const int s = static_cast<int>(spec.den_params.size());
    const int extra = 1 + s - r; // power of the (-1)^k q^C(k,2) factor

    int kmax;
    if (spec.argument.degree() >= 1) {
        kmax = order / static_cast<int>(spec.argument.degree());
    } else {
        // Scalar argument: only terminating series are representable. Walk
        // until a numerator Pochhammer vanishes; bail out if none does.
        kmax = -1;
        for (int k = 0; k <= order + 64; ++k) {
            bool zero = false;
            for (const auto& a : spec.num_params)
                if (a.degree() == 0 && poch_scalar(a.coeff, k).is_zero()) zero = true;
            if (zero) {
                kmax = k - 1;
                break;
            }
        }
        if (kmax < 0) throw std::invalid_argument("phi_series: sum does not truncate");
    }

    MultiSeries acc(vars, order);
    // Running products, updated incrementally in k.
    MultiSeries num_prod = MultiSeries::one(vars, order);   // prod_i (a_i;q)_k
    MultiSeries den_inv = MultiSeries::one(vars, order);    // 1 / prod_j (b_j;q)_k
    RatFunQ den_scalar(1);                                  // (q;q)_k and scalar b_j parts
    MonomialArg argpow{RatFunQ(1), MultiIndex::zero(vars.size())};

    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            // (a;q)_k = (a;q)_{k-1} (1 - q^{k-1} a), analogously below.
            for (const auto& a : spec.num_params)
                num_prod = num_prod * (MultiSeries::one(vars, order) -
                                       MultiSeries::monomial(vars, order,
                                                             a.scaled(RatFunQ::q_power(k - 1))));
            for (const auto& b : spec.den_params) {
                if (b.degree() == 0) {
                    RatFunQ factor = RatFunQ(1) - RatFunQ::q_power(k - 1) * b.coeff;
                    if (factor.is_zero()) {
                        std::ostringstream os;
                        os << "undefined series (zero denominator at k=" << k << ")";
                        throw undefined_series(os.str());
                    }
                    den_scalar *= factor;
                } else {
                    // 1/(1 - q^{k-1} b) as the geometric series of a monomial.
                    MultiSeries geo = MultiSeries::one(vars, order);
                    MonomialArg v = b.scaled(RatFunQ::q_power(k - 1));
                    MonomialArg vp = v;
                    for (int d = static_cast<int>(v.degree()); d <= order;
                         d += static_cast<int>(v.degree())) {
                        geo += MultiSeries::monomial(vars, order, vp);
                        vp = MonomialArg{vp.coeff * v.coeff, vp.index.plus(v.index)};
                    }
                    den_inv = den_inv * geo;
                }
            }
            den_scalar *= RatFunQ(1) - RatFunQ::q_power(k);  // (q;q)_k update
            argpow = MonomialArg{argpow.coeff * spec.argument.coeff,
                                 argpow.index.plus(spec.argument.index)};
        }
        if (num_prod.is_zero()) break; // a terminating numerator parameter
        RatFunQ scalar = den_scalar.inverse();
        if (extra != 0) {
            RatFunQ sign = (k % 2 == 0) ? RatFunQ(1) : RatFunQ(-1);
            scalar *= (sign * q_binom2_power(k)).pow(extra);
        }
        MultiSeries term = (num_prod * den_inv).mul_monomial(argpow.scaled(scalar));
        acc += term.truncated(std::min(term.order(), order));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// q-differential operator
// ---------------------------------------------------------------------------

MultiSeries dq(const MultiSeries& f, const std::string& var) {
    const std::size_t pos = f.vars().index_of(var);
    const int order = std::max(f.order() - 1, 0);
    MultiSeries::TermMap terms;
    for (const auto& [idx, c] : f.terms()) {
        const unsigned e = idx.exp(pos);
        if (e == 0) continue; // constant in var: annihilated
        std::vector<unsigned> exps = idx.exponents();
        exps[pos] = e - 1;
        terms.emplace(MultiIndex(std::move(exps)), c * RatFunQ::one_minus_q_power(e));
    }
    return MultiSeries::from_terms(f.vars(), order, std::move(terms));
}

MultiSeries dq_k(const MultiSeries& f, const std::string& var, int k) {
    if (k < 0) throw std::invalid_argument("dq_k: negative iteration count");
    MultiSeries r = f;
    for (int i = 0; i < k; ++i) r = dq(r, var);
    return r;
}

} // namespace qaudit
