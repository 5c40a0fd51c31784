/// @file pseries.hpp
/// @brief Truncated multivariate formal power series over RatFunQ.
///
/// A MultiSeries stores every coefficient of total degree <= order exactly
/// (absent index = zero coefficient); nothing is known beyond the order.
/// q is never an analytic variable: all q-dependence lives in the RatFunQ
/// coefficients, so only the analytic degree is ever truncated.
#pragma once

#include "qaudit/qfield.hpp"

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qaudit {

class VarTable {
public:
    VarTable() = default;
    /// Throws std::invalid_argument on duplicates or a variable named "q".
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws std::invalid_argument for an unknown variable.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);
    static MultiIndex zero(std::size_t nvars) { return MultiIndex(std::vector<unsigned>(nvars, 0u)); }
    static MultiIndex unit(std::size_t nvars, std::size_t pos, unsigned e = 1);

    std::size_t size() const { return exps_.size(); }
    unsigned exp(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned total() const { return total_; }

    MultiIndex plus(const MultiIndex& other) const;
    MultiIndex times(unsigned k) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

    /// Canonical term order: total degree, then lexicographic exponents.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.total_ != b.total_) return a.total_ < b.total_;
        return a.exps_ < b.exps_;
    }

    /// "1" for the empty index, otherwise e.g. "a^2*x".
    std::string to_string(const VarTable& vars) const;

private:
    std::vector<unsigned> exps_;
    unsigned total_ = 0;
};

/// A scalar multiple of a single analytic monomial; the only admissible
/// argument of infinite Pochhammer symbols and operator parameters.
struct MonomialArg {
    RatFunQ coeff;
    MultiIndex index;

    unsigned degree() const { return index.total(); }
    MonomialArg pow(unsigned k) const { return {coeff.pow(k), index.times(k)}; }
    MonomialArg negated() const { return {-coeff, index}; }
    MonomialArg scaled(const RatFunQ& c) const { return {coeff * c, index}; }
};

/// Builds coeff * prod(var^exp) against a variable table.
MonomialArg make_monomial(const VarTable& vars, RatFunQ coeff,
                          std::initializer_list<std::pair<const char*, unsigned>> powers);

class MultiSeries {
public:
    using TermMap = std::map<MultiIndex, RatFunQ>;

    MultiSeries() = default; // empty table, order 0, zero series
    MultiSeries(VarTable vars, int order);

    static MultiSeries constant(const VarTable& vars, int order, RatFunQ value);
    static MultiSeries one(const VarTable& vars, int order) { return constant(vars, order, RatFunQ(1)); }
    static MultiSeries monomial(const VarTable& vars, int order, const MonomialArg& m);
    static MultiSeries variable(const VarTable& vars, int order, const std::string& name);
    /// Adopts a term map, dropping zero coefficients and terms beyond order.
    static MultiSeries from_terms(VarTable vars, int order, TermMap terms);

    const VarTable& vars() const { return vars_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient or zero; throws std::out_of_range("beyond
    /// truncation") when idx.total() exceeds the order.
    const RatFunQ& coeff(const MultiIndex& idx) const;
    RatFunQ constant_term() const;

    /// Sum/difference; operands must share the variable table, result order
    /// is the minimum of the two orders.
    friend MultiSeries operator+(const MultiSeries& f, const MultiSeries& g);
    friend MultiSeries operator-(const MultiSeries& f, const MultiSeries& g);
    friend MultiSeries operator-(const MultiSeries& f);

    /// Cauchy product truncated at min(order(f), order(g)).
    friend MultiSeries operator*(const MultiSeries& f, const MultiSeries& g);

    MultiSeries& operator+=(const MultiSeries& g) { return *this = *this + g; }
    MultiSeries& operator-=(const MultiSeries& g) { return *this = *this - g; }
    MultiSeries& operator*=(const MultiSeries& g) { return *this = *this * g; }

    MultiSeries scaled(const RatFunQ& c) const;

    /// Multiplication by an exact monomial. Every product term of degree
    /// <= order + deg(m) is exact, so the result order rises by deg(m).
    MultiSeries mul_monomial(const MonomialArg& m) const;

    /// Reciprocal up to the truncation order via the geometric expansion of
    /// f = c(1 + u), ord(u) >= 1. Throws std::domain_error("non-unit series")
    /// when the constant term vanishes.
    MultiSeries inverse() const;

    MultiSeries pow(unsigned k) const;

    /// Substitution var -> q^j var (j may be negative): a term with
    /// var-exponent e picks up the factor q^(j*e).
    MultiSeries subst_qscale(const std::string& var, long long j) const;

    /// Discards terms beyond order m (m <= order required).
    MultiSeries truncated(int m) const;

    /// Exact equality: same table, same order, identical term maps.
    friend bool operator==(const MultiSeries& f, const MultiSeries& g) {
        return f.vars_ == g.vars_ && f.order_ == g.order_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const MultiSeries& f, const MultiSeries& g) { return !(f == g); }

    /// Canonical text form: one line per term, sorted by (total degree,
    /// lexicographic exponents), coefficients as num/den polynomial strings.
    std::string to_string() const;

private:
    VarTable vars_;
    int order_ = 0;
    TermMap terms_;

    void insert_term(const MultiIndex& idx, RatFunQ c);
    static void require_same_vars(const MultiSeries& f, const MultiSeries& g);
};

/// First index (in canonical order) at which f and g disagree up to
/// min(order(f), order(g)), or nothing when they agree everywhere there.
std::pair<bool, MultiIndex> first_mismatch(const MultiSeries& f, const MultiSeries& g);

/// Coefficient-wise agreement up to min(order(f), order(g)).
bool agree_to_order(const MultiSeries& f, const MultiSeries& g);

} // namespace qaudit
