#include "qaudit/pseries.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaudit {

// ---------------------------------------------------------------------------
// VarTable
// ---------------------------------------------------------------------------

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == "q")
            throw std::invalid_argument("VarTable: q is not an analytic variable");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("VarTable: duplicate variable '" + names_[i] + "'");
    }
}

std::size_t VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("VarTable: unknown variable '" + name + "'");
}

// ---------------------------------------------------------------------------
// MultiIndex
// ---------------------------------------------------------------------------

MultiIndex::MultiIndex(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
    total_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t pos, unsigned e) {
    std::vector<unsigned> exps(nvars, 0u);
    exps.at(pos) = e;
    return MultiIndex(std::move(exps));
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    std::vector<unsigned> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + other.exps_[i];
    return MultiIndex(std::move(exps));
}

MultiIndex MultiIndex::times(unsigned k) const {
    std::vector<unsigned> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] * k;
    return MultiIndex(std::move(exps));
}

std::string MultiIndex::to_string(const VarTable& vars) const {
    if (total_ == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << vars.name(i);
        if (exps_[i] > 1) os << "^" << exps_[i];
        first = false;
    }
    return os.str();
}

MonomialArg make_monomial(const VarTable& vars, RatFunQ coeff,
                          std::initializer_list<std::pair<const char*, unsigned>> powers) {
    std::vector<unsigned> exps(vars.size(), 0u);
    for (const auto& [name, e] : powers) exps[vars.index_of(name)] += e;
    return {std::move(coeff), MultiIndex(std::move(exps))};
}

// ---------------------------------------------------------------------------
// MultiSeries
// ---------------------------------------------------------------------------

namespace {
const RatFunQ kZeroRatFun;
}

MultiSeries::MultiSeries(VarTable vars, int order) : vars_(std::move(vars)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("MultiSeries: negative order");
}

MultiSeries MultiSeries::constant(const VarTable& vars, int order, RatFunQ value) {
    MultiSeries s(vars, order);
    if (!value.is_zero()) s.terms_.emplace(MultiIndex::zero(vars.size()), std::move(value));
    return s;
}

MultiSeries MultiSeries::monomial(const VarTable& vars, int order, const MonomialArg& m) {
    MultiSeries s(vars, order);
    if (m.index.size() != vars.size())
        throw std::invalid_argument("MultiSeries: monomial index does not match variable table");
    if (!m.coeff.is_zero() && static_cast<int>(m.degree()) <= order)
        s.terms_.emplace(m.index, m.coeff);
    return s;
}

MultiSeries MultiSeries::variable(const VarTable& vars, int order, const std::string& name) {
    return monomial(vars, order, {RatFunQ(1), MultiIndex::unit(vars.size(), vars.index_of(name))});
}

MultiSeries MultiSeries::from_terms(VarTable vars, int order, TermMap terms) {
    MultiSeries s(std::move(vars), order);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero() || static_cast<int>(it->first.total()) > order)
            it = terms.erase(it);
        else
            ++it;
    }
    s.terms_ = std::move(terms);
    return s;
}

const RatFunQ& MultiSeries::coeff(const MultiIndex& idx) const {
    if (static_cast<int>(idx.total()) > order_) throw std::out_of_range("beyond truncation");
    auto it = terms_.find(idx);
    return it == terms_.end() ? kZeroRatFun : it->second;
}

RatFunQ MultiSeries::constant_term() const {
    auto it = terms_.find(MultiIndex::zero(vars_.size()));
    return it == terms_.end() ? RatFunQ() : it->second;
}

void MultiSeries::insert_term(const MultiIndex& idx, RatFunQ c) {
    if (c.is_zero()) return;
    terms_.emplace(idx, std::move(c));
}

void MultiSeries::require_same_vars(const MultiSeries& f, const MultiSeries& g) {
    if (f.vars_ != g.vars_)
        throw std::invalid_argument("MultiSeries: mismatched variable tables");
}

MultiSeries operator+(const MultiSeries& f, const MultiSeries& g) {
    MultiSeries::require_same_vars(f, g);
    MultiSeries r(f.vars_, std::min(f.order_, g.order_));
    for (const auto& [idx, c] : f.terms_)
        if (static_cast<int>(idx.total()) <= r.order_) r.terms_.emplace(idx, c);
    for (const auto& [idx, c] : g.terms_) {
        if (static_cast<int>(idx.total()) > r.order_) continue;
        auto [it, inserted] = r.terms_.emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MultiSeries operator-(const MultiSeries& f) {
    MultiSeries r = f;
    for (auto& [idx, c] : r.terms_) c = -c;
    return r;
}

MultiSeries operator-(const MultiSeries& f, const MultiSeries& g) {
    return f + (-g);
}

MultiSeries operator*(const MultiSeries& f, const MultiSeries& g) {
    MultiSeries::require_same_vars(f, g);
    MultiSeries r(f.vars_, std::min(f.order_, g.order_));
    for (const auto& [fi, fc] : f.terms_) {
        if (static_cast<int>(fi.total()) > r.order_) continue;
        for (const auto& [gi, gc] : g.terms_) {
            if (static_cast<int>(fi.total() + gi.total()) > r.order_) continue;
            MultiIndex idx = fi.plus(gi);
            RatFunQ prod = fc * gc;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(idx);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(idx), std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiSeries MultiSeries::scaled(const RatFunQ& c) const {
    MultiSeries r(vars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, v * c);
    return r;
}

MultiSeries MultiSeries::mul_monomial(const MonomialArg& m) const {
    if (m.index.size() != vars_.size())
        throw std::invalid_argument("MultiSeries: monomial index does not match variable table");
    MultiSeries r(vars_, order_ + static_cast<int>(m.degree()));
    if (m.coeff.is_zero()) return r;
    for (const auto& [idx, v] : terms_) r.terms_.emplace(idx.plus(m.index), v * m.coeff);
    return r;
}

MultiSeries MultiSeries::inverse() const {
    RatFunQ c = constant_term();
    if (c.is_zero()) throw std::domain_error("non-unit series");
    const RatFunQ cinv = c.inverse();
    // f = c(1+u)  =>  1/f = (1/c) * sum_k (-u)^k
    MultiSeries minus_u = (*this).scaled(-cinv);
    minus_u.terms_.erase(MultiIndex::zero(vars_.size()));
    MultiSeries acc = MultiSeries::one(vars_, order_);
    MultiSeries pw = acc;
    for (int k = 1; k <= order_; ++k) {
        pw = pw * minus_u;
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc.scaled(cinv);
}

MultiSeries MultiSeries::pow(unsigned k) const {
    MultiSeries r = MultiSeries::one(vars_, order_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiSeries MultiSeries::subst_qscale(const std::string& var, long long j) const {
    const std::size_t pos = vars_.index_of(var);
    MultiSeries r(vars_, order_);
    for (const auto& [idx, c] : terms_) {
        const unsigned e = idx.exp(pos);
        if (e == 0 || j == 0) {
            r.terms_.emplace(idx, c);
        } else {
            r.insert_term(idx, c * RatFunQ::q_power(j * static_cast<long long>(e)));
        }
    }
    return r;
}

MultiSeries MultiSeries::truncated(int m) const {
    if (m > order_) throw std::invalid_argument("MultiSeries: cannot raise truncation order");
    MultiSeries r(vars_, m);
    for (const auto& [idx, c] : terms_)
        if (static_cast<int>(idx.total()) <= m) r.terms_.emplace(idx, c);
    return r;
}

std::string MultiSeries::to_string() const {
    std::ostringstream os;
    os << "order=" << order_ << " vars=";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_.name(i);
    os << "\n";
    if (terms_.empty()) {
        os << "  0\n";
        return os.str();
    }
    for (const auto& [idx, c] : terms_)
        os << "  " << idx.to_string(vars_) << " : " << c << "\n";
    return os.str();
}

std::pair<bool, MultiIndex> first_mismatch(const MultiSeries& f, const MultiSeries& g) {
    MultiSeries::TermMap::key_compare less;
    const int order = std::min(f.order(), g.order());
    std::set<MultiIndex, decltype(less)> indices(less);
    for (const auto& [idx, c] : f.terms())
        if (static_cast<int>(idx.total()) <= order) indices.insert(idx);
    for (const auto& [idx, c] : g.terms())
        if (static_cast<int>(idx.total()) <= order) indices.insert(idx);
    for (const auto& idx : indices)
        if (f.coeff(idx) != g.coeff(idx)) return {true, idx};
    return {false, MultiIndex()};
}

bool agree_to_order(const MultiSeries& f, const MultiSeries& g) {
    return !first_mismatch(f, g).first;
}

} // namespace qaudit
