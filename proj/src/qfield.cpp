#include "qaudit/qfield.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qaudit {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(const std::string& text) {
    auto pos = text.find('/');
    try {
        if (pos == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, pos)), BigInt(text.substr(pos + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(den_, num_);
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << "/" << r.den_;
    return os;
}

// ---------------------------------------------------------------------------
// PolyQ
// ---------------------------------------------------------------------------

namespace {
const Rational kZeroRational;
}

PolyQ::PolyQ(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

PolyQ PolyQ::from_coeffs(std::vector<Rational> coeffs) {
    PolyQ p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

PolyQ PolyQ::q_power(unsigned e) {
    PolyQ p;
    p.coeffs_.assign(e + 1, Rational());
    p.coeffs_[e] = Rational(1);
    return p;
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& PolyQ::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZeroRational;
}

const Rational& PolyQ::leading() const {
    if (coeffs_.empty()) return kZeroRational;
    return coeffs_.back();
}

PolyQ operator-(const PolyQ& a) {
    PolyQ r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    PolyQ r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

PolyQ PolyQ::scaled(const Rational& c) const {
    if (c.is_zero()) return PolyQ();
    PolyQ r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("PolyQ: division by zero polynomial");
    PolyQ rem = a;
    PolyQ quot;
    if (a.degree() >= b.degree())
        quot.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational());
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational factor = rem.leading() * lead_inv;
        quot.coeffs_[shift] = factor;
        // rem -= factor * q^shift * b
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[shift + i] -= factor * b.coeffs_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

namespace {

// Integer polynomial helpers for the primitive-PRS gcd.

using ZPoly = std::vector<BigInt>; // dense, ascending powers, trailing nonzero

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt zcontent(const ZPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = gcd(g, abs(c));
    return g;
}

void zprimitive(ZPoly& p) {
    if (p.empty()) return;
    BigInt g = zcontent(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) c /= g;
}

// Clears rational denominators and strips integer content.
ZPoly to_primitive_z(const PolyQ& p) {
    ZPoly z;
    if (p.is_zero()) return z;
    BigInt l = 1;
    for (int i = 0; i <= p.degree(); ++i) l = l / gcd(l, p.coeff(i).den()) * p.coeff(i).den();
    z.resize(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i)
        z[static_cast<std::size_t>(i)] = p.coeff(i).num() * (l / p.coeff(i).den());
    zprimitive(z);
    return z;
}

// Pseudo-remainder: scales by lc(b) per step so everything stays in Z[q].
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const BigInt lead = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        ztrim(a);
    }
    return a;
}

} // namespace

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zeros");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = to_primitive_z(a);
    ZPoly y = to_primitive_z(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = zpseudo_rem(x, y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) coeffs[i] = Rational(x[i]);
    return from_coeffs(std::move(coeffs)).monic();
}

Rational PolyQ::eval(const Rational& q0) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
    return acc;
}

std::string PolyQ::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyQ& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) mag = -c;
        }
        if (i == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) os << mag << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

// ---------------------------------------------------------------------------
// RatFunQ
// ---------------------------------------------------------------------------

RatFunQ::RatFunQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = PolyQ(Rational(1));
        return;
    }
    PolyQ g = PolyQ::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = PolyQ::divrem(num_, g).first;
        den_ = PolyQ::divrem(den_, g).first;
    }
    const Rational lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RatFunQ RatFunQ::q_power(long long e) {
    if (e >= 0) return RatFunQ(PolyQ::q_power(static_cast<unsigned>(e)));
    return RatFunQ(PolyQ(Rational(1)), PolyQ::q_power(static_cast<unsigned>(-e)));
}

RatFunQ RatFunQ::one_minus_q_power(long long e) {
    return RatFunQ(1) - q_power(e);
}

RatFunQ operator-(const RatFunQ& a) {
    RatFunQ r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunQ operator+(const RatFunQ& a, const RatFunQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Precancel the denominator gcd; keeps Euclid off the full product.
    PolyQ g = PolyQ::gcd(a.den_, b.den_);
    if (g.degree() <= 0) {
        RatFunQ r;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        if (r.num_.is_zero()) return RatFunQ();
        r.den_ = a.den_ * b.den_;
        return RatFunQ(std::move(r.num_), std::move(r.den_));
    }
    const PolyQ bd = PolyQ::divrem(b.den_, g).first;
    const PolyQ ad = PolyQ::divrem(a.den_, g).first;
    PolyQ t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return RatFunQ();
    // gcd(t, ad*bd*g) = gcd(t, g) since ad, bd stay coprime to the numerators.
    PolyQ h = PolyQ::gcd(t, g);
    PolyQ num = h.degree() > 0 ? PolyQ::divrem(t, h).first : std::move(t);
    PolyQ den = ad * PolyQ::divrem(b.den_, h).first;
    RatFunQ r;
    const Rational lead_inv = den.leading().inverse();
    r.num_ = num.scaled(lead_inv);
    r.den_ = den.scaled(lead_inv);
    return r;
}

RatFunQ operator-(const RatFunQ& a, const RatFunQ& b) {
    return a + (-b);
}

RatFunQ operator*(const RatFunQ& a, const RatFunQ& b) {
    if (a.is_zero() || b.is_zero()) return RatFunQ();
    // Cross-cancel: inputs are reduced, so the result needs no further gcd.
    PolyQ g1 = PolyQ::gcd(a.num_, b.den_);
    PolyQ g2 = PolyQ::gcd(b.num_, a.den_);
    PolyQ n1 = g1.degree() > 0 ? PolyQ::divrem(a.num_, g1).first : a.num_;
    PolyQ d2 = g1.degree() > 0 ? PolyQ::divrem(b.den_, g1).first : b.den_;
    PolyQ n2 = g2.degree() > 0 ? PolyQ::divrem(b.num_, g2).first : b.num_;
    PolyQ d1 = g2.degree() > 0 ? PolyQ::divrem(a.den_, g2).first : a.den_;
    PolyQ num = n1 * n2;
    PolyQ den = d1 * d2;
    RatFunQ r;
    const Rational lead_inv = den.leading().inverse();
    r.num_ = num.scaled(lead_inv);
    r.den_ = den.scaled(lead_inv);
    return r;
}

RatFunQ operator/(const RatFunQ& a, const RatFunQ& b) {
    return a * b.inverse();
}

RatFunQ RatFunQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunQ: division by zero");
    RatFunQ r;
    const Rational lead_inv = num_.leading().inverse();
    r.num_ = den_.scaled(lead_inv);
    r.den_ = num_.scaled(lead_inv);
    return r;
}

RatFunQ RatFunQ::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunQ r(1);
    RatFunQ base = *this;
    auto u = static_cast<unsigned long long>(e);
    while (u > 0) {
        if (u & 1ull) r *= base;
        base *= base;
        u >>= 1ull;
    }
    return r;
}

Rational RatFunQ::eval_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw std::domain_error("pole at evaluation point");
    return num_.eval(q0) / d;
}

std::string RatFunQ::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunQ& f) {
    if (f.den_.is_one()) {
        if (f.num_.degree() <= 0) return os << f.num_;
        return os << "(" << f.num_ << ")";
    }
    return os << "(" << f.num_ << ")/(" << f.den_ << ")";
}

} // namespace qaudit
