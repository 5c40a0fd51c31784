#include "qaudit/audit.hpp"

#include <random>

namespace qaudit {

namespace {

// Shared builder scaffolding: a fixed variable table plus shorthands for the
// series pieces the closed forms are assembled from.
struct Ctx {
    VarTable vars;

    explicit Ctx(std::vector<std::string> names) : vars(std::move(names)) {}

    MonomialArg mono(RatFunQ c,
                     std::initializer_list<std::pair<const char*, unsigned>> powers) const {
        return make_monomial(vars, std::move(c), powers);
    }
    MonomialArg mono(std::initializer_list<std::pair<const char*, unsigned>> powers) const {
        return make_monomial(vars, RatFunQ(1), powers);
    }
    MonomialArg scalar(RatFunQ c) const { return {std::move(c), MultiIndex::zero(vars.size())}; }

    MultiSeries one(int order) const { return MultiSeries::one(vars, order); }
    MultiSeries var(const char* name, int order) const {
        return MultiSeries::variable(vars, order, name);
    }
    MultiSeries ms(const MonomialArg& m, int order) const {
        return MultiSeries::monomial(vars, order, m);
    }
    MultiSeries poch_inf(const MonomialArg& u, int order) const {
        return qpoch_inf(u, vars, order);
    }
    MultiSeries poch_inf_multi(const std::vector<MonomialArg>& us, int order) const {
        return qpoch_multi(us, vars, order);
    }
    MultiSeries poch_fin(const MonomialArg& u, int n, int order) const {
        return qpoch_n(u, n, vars, order);
    }
    MultiSeries phi(const PhiSpec& spec, int order) const { return phi_series(spec, vars, order); }
};

RatFunQ qpow(long long e) {
    return RatFunQ::q_power(e);
}

// Deterministic small polynomial in the table's single variable; used by the
// Leibniz entry. mt19937 output is pinned by the standard, so runs agree
// byte-for-byte across platforms.
MultiSeries random_poly(const Ctx& c, int order, unsigned seed) {
    std::mt19937 rng(seed);
    const int deg = static_cast<int>(rng() % 5u); // 0..4
    MultiSeries::TermMap terms;
    for (int e = 0; e <= deg; ++e) {
        const long long num = static_cast<long long>(rng() % 9u) - 4; // -4..4
        const long long den = 1 + static_cast<long long>(rng() % 3u); // 1..3
        if (num == 0) continue;
        terms.emplace(MultiIndex::unit(1, 0, static_cast<unsigned>(e)),
                      RatFunQ(Rational(num, den)));
    }
    return MultiSeries::from_terms(c.vars, order, std::move(terms));
}

std::vector<Params> grid_n(const std::vector<int>& ns, const std::vector<int>&) {
    std::vector<Params> g;
    for (int n : ns) g.push_back({n, std::nullopt});
    return g;
}

std::vector<Params> grid_k(const std::vector<int>&, const std::vector<int>& ks) {
    std::vector<Params> g;
    for (int k : ks) g.push_back({std::nullopt, k});
    return g;
}

std::vector<Params> grid_nk(const std::vector<int>& ns, const std::vector<int>& ks) {
    std::vector<Params> g;
    for (int n : ns)
        for (int k : ks) g.push_back({n, k});
    return g;
}

std::vector<Params> grid_nk_triangular(const std::vector<int>& ns, const std::vector<int>& ks) {
    std::vector<Params> g;
    for (int n : ns)
        for (int k : ks)
            if (k <= n) g.push_back({n, k});
    return g;
}

std::vector<Params> grid_single(const std::vector<int>&, const std::vector<int>&) {
    return {Params{}};
}

// ---------------------------------------------------------------------------
// Catalog construction
// ---------------------------------------------------------------------------

std::vector<IdentitySpec> build_catalog() {
    std::vector<IdentitySpec> entries;

    // ---- I1: (a;q)_n = (a;q)_inf / (a q^n;q)_inf, cleared of the quotient.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a"});
        IdentitySpec e;
        e.id = "I1";
        e.description = "(a;q)_n (a q^n;q)_inf = (a;q)_inf";
        e.anchor = "(a;q)_{n}&=\\frac{(a;q)_{\\infty}}{(aq^n;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            const int n = *p.n;
            return c->poch_fin(c->mono({{"a", 1}}), n, N) *
                   c->poch_inf(c->mono(qpow(n), {{"a", 1}}), N);
        };
        e.rhs = [c](const Params&, int N) { return c->poch_inf(c->mono({{"a", 1}}), N); };
        entries.push_back(std::move(e));
    }

    // ---- I2: (a;q)_{n+k} = (a;q)_n (a q^n;q)_k.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a"});
        IdentitySpec e;
        e.id = "I2";
        e.description = "(a;q)_{n+k} = (a;q)_n (a q^n;q)_k";
        e.anchor = "(a;q)_{n+k}&=(a;q)_{n}(aq^n;q)_{k}";
        e.var_names = c->vars.names();
        e.grid = grid_nk;
        e.lhs = [c](const Params& p, int N) {
            return c->poch_fin(c->mono({{"a", 1}}), *p.n + *p.k, N);
        };
        e.rhs = [c](const Params& p, int N) {
            return c->poch_fin(c->mono({{"a", 1}}), *p.n, N) *
                   c->poch_fin(c->mono(qpow(*p.n), {{"a", 1}}), *p.k, N);
        };
        entries.push_back(std::move(e));
    }

    // ---- I3: (a;q)_{n-k} = (a;q)_n / (a^{-1} q^{1-n};q)_k * (-q/a)^k q^(C(k,2)-nk),
    // verified with denominators cleared:
    //   (a;q)_{n-k} * prod_{j<k} (a - q^{1-n+j}) = (a;q)_n (-1)^k q^(k + C(k,2) - nk).
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a"});
        IdentitySpec e;
        e.id = "I3";
        e.description = "(a;q)_{n-k} expansion, a^{-1} reading, cleared form";
        e.anchor = "(-qa^{-1})^{k}q^{\\binom{k}{2}-nk}";
        e.var_names = c->vars.names();
        e.grid = grid_nk_triangular;
        e.note = "printed parameter (a^q q^{1-n};q)_k audited as (a^{-1} q^{1-n};q)_k; "
                 "checked with denominators cleared (no Laurent terms in a)";
        e.lhs = [c](const Params& p, int N) {
            const int n = *p.n, k = *p.k;
            MultiSeries acc = c->poch_fin(c->mono({{"a", 1}}), n - k, N);
            for (int j = 0; j < k; ++j)
                acc = acc * (c->var("a", N) -
                             MultiSeries::constant(c->vars, N, qpow(1 - n + j)));
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            const int n = *p.n, k = *p.k;
            RatFunQ scale = qpow(k + static_cast<long long>(k) * (k - 1) / 2 -
                                 static_cast<long long>(n) * k);
            if (k % 2 != 0) scale = -scale;
            return c->poch_fin(c->mono({{"a", 1}}), n, N).scaled(scale);
        };
        entries.push_back(std::move(e));
    }

    // ---- I4: Leibniz rule for D_q. The n-th derivative of a product equals
    // sum_k [n,k]_q D_q^k f(x) * (D_q^{n-k} g)(q^k x); equivalently
    // sum_k q^{k(k-n)} [n,k]_q D_q^k f(x) D_q^{n-k}{g(q^k x)} when the
    // substitution happens before differentiating. k slot = RNG seed.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"x"});
        IdentitySpec e;
        e.id = "I4";
        e.description = "q-Leibniz rule on random polynomial pairs (k = seed)";
        e.anchor = "D_{q}^{n}\\{f(x)g(x)\\}";
        e.var_names = c->vars.names();
        e.grid = grid_nk;
        e.note = "printed weight q^{k(n-k)} is a sign slip for q^{k(k-n)}; audited in the "
                 "equivalent differentiate-then-substitute form, which carries no q-power";
        e.lhs = [c](const Params& p, int N) {
            const unsigned seed = 7000u + 97u * static_cast<unsigned>(*p.k);
            MultiSeries f = random_poly(*c, N + *p.n, seed);
            MultiSeries g = random_poly(*c, N + *p.n, seed + 1);
            return dq_k(f * g, "x", *p.n);
        };
        e.rhs = [c](const Params& p, int N) {
            const int n = *p.n;
            const unsigned seed = 7000u + 97u * static_cast<unsigned>(*p.k);
            MultiSeries f = random_poly(*c, N + n, seed);
            MultiSeries g = random_poly(*c, N + n, seed + 1);
            MultiSeries acc(c->vars, std::max(N - n, 0));
            for (int k = 0; k <= n; ++k)
                acc += (dq_k(f, "x", k) * dq_k(g, "x", n - k).subst_qscale("x", k))
                           .scaled(qbinom(n, k))
                           .truncated(acc.order());
            return acc;
        };
        entries.push_back(std::move(e));
    }

    // ---- I5: q-binomial theorem, 1phi0(q^n; -; q, z) = (q^n z;q)_inf / (z;q)_inf.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"z"});
        IdentitySpec e;
        e.id = "I5";
        e.description = "q-binomial theorem with a = q^n";
        e.anchor = "frequently use the $q$-binomial theorem";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n))}, {}, c->mono({{"z", 1}})};
            return c->phi(spec, N);
        };
        e.rhs = [c](const Params& p, int N) {
            return c->poch_inf(c->mono(qpow(*p.n), {{"z", 1}}), N) *
                   c->poch_inf(c->mono({{"z", 1}}), N).inverse();
        };
        entries.push_back(std::move(e));
    }

    // ---- I6: Heine binomial formula 1/(x;q)_n = sum_k [n+k-1,k]_q x^k.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"x"});
        IdentitySpec e;
        e.id = "I6";
        e.description = "Heine binomial formula";
        e.anchor = "The Heine binomial formula is";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            return c->poch_fin(c->mono({{"x", 1}}), *p.n, N).inverse();
        };
        e.rhs = [c](const Params& p, int N) {
            const int n = *p.n;
            MultiSeries acc = c->one(N);
            for (int k = 1; k <= N; ++k)
                acc += c->ms(c->mono(qbinom(n + k - 1, k), {{"x", static_cast<unsigned>(k)}}), N);
            return acc;
        };
        entries.push_back(std::move(e));
    }

    // ---- T1: monomial action H_n(bD_q) x^m = Phi_m^{(q^n)}(b, x).
    // Phi_m is homogeneous of degree m, so summing both sides over m <= N
    // compares every m at once without cross-talk between degrees.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x"});
        IdentitySpec e;
        e.id = "T1";
        e.description = "H_n(bD_q) x^m = Phi_m^{(q^n)}(b,x), all m <= order";
        e.anchor = "\\Phi_{m}^{(q^n)}(b,x|q)=\\sum";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; m <= N; ++m)
                acc += heine_apply(*p.n, c->mono({{"b", 1}}), "x",
                                   c->ms(c->mono({{"x", static_cast<unsigned>(m)}}), N));
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; m <= N; ++m)
                acc += hahn(m, qpow(*p.n), c->var("b", N), c->var("x", N));
            return acc;
        };
        entries.push_back(std::move(e));
    }

    // ---- T2: H_n(bD_q) 1/(ax;q)_inf = (q^n ab;q)_inf / (ax, ab;q)_inf.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x"});
        IdentitySpec e;
        e.id = "T2";
        e.description = "operator image of 1/(ax;q)_inf";
        e.anchor = "\\frac{(q^nab;q)_{\\infty}}{(ax,ab;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            return heine_apply(*p.n, c->mono({{"b", 1}}), "x",
                               c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N).inverse());
        };
        e.rhs = [c](const Params& p, int N) {
            return c->poch_inf(c->mono(qpow(*p.n), {{"a", 1}, {"b", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"a", 1}, {"x", 1}}),
                                      c->mono({{"a", 1}, {"b", 1}})},
                                     N)
                       .inverse();
        };
        entries.push_back(std::move(e));
    }

    // ---- T3: H_n(bD_q) (ax;q)_inf. Statement: (ax;q)_inf 2phi1(q^n, 0; -ax; q, ab).
    // D_q^k (ax;q)_inf = (-a)^k q^(C(k,2)) (ax;q)_inf/(ax;q)_k, so the proof's
    // a^k reading drops an alternating factor; candidate correction is the
    // 1phi1(q^n; ax; q, ab) form, which carries (-1)^k q^(C(k,2)) built in.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x"});
        IdentitySpec e;
        e.id = "T3";
        e.description = "operator image of (ax;q)_inf";
        e.anchor = "(ax;q)_{\\infty}{}_{2}\\varphi_{1}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            return heine_apply(*p.n, c->mono({{"b", 1}}), "x",
                               c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N));
        };
        e.rhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n)), c->scalar(RatFunQ())},
                         {c->mono(RatFunQ(-1), {{"a", 1}, {"x", 1}})},
                         c->mono({{"a", 1}, {"b", 1}})};
            return c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N) * c->phi(spec, N);
        };
        e.corrected_rhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n))},
                         {c->mono({{"a", 1}, {"x", 1}})},
                         c->mono({{"a", 1}, {"b", 1}})};
            return c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N) * c->phi(spec, N);
        };
        e.note = "corrected form: (ax;q)_inf 1phi1(q^n; ax; q, ab)";
        entries.push_back(std::move(e));
    }

    // ---- T4: H_n(aD_q) 1/(bx,cx;q)_inf
    //        = (q^n ac;q)_inf/(bx,cx,ac;q)_inf 2phi1(q^n, cx; q^n ac; q, ab).
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "c", "x"});
        IdentitySpec e;
        e.id = "T4";
        e.description = "operator image of 1/(bx,cx;q)_inf";
        e.anchor = "\\frac{(q^{n}ac;q)_{\\infty}}{(bx,cx,ac;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            return heine_apply(*p.n, c->mono({{"a", 1}}), "x",
                               c->poch_inf_multi({c->mono({{"b", 1}, {"x", 1}}),
                                                  c->mono({{"c", 1}, {"x", 1}})},
                                                 N)
                                   .inverse());
        };
        e.rhs = [c](const Params& p, int N) {
            const int n = *p.n;
            PhiSpec spec{{c->scalar(qpow(n)), c->mono({{"c", 1}, {"x", 1}})},
                         {c->mono(qpow(n), {{"a", 1}, {"c", 1}})},
                         c->mono({{"a", 1}, {"b", 1}})};
            return c->poch_inf(c->mono(qpow(n), {{"a", 1}, {"c", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"b", 1}, {"x", 1}}),
                                      c->mono({{"c", 1}, {"x", 1}}),
                                      c->mono({{"a", 1}, {"c", 1}})},
                                     N)
                       .inverse() *
                   c->phi(spec, N);
        };
        entries.push_back(std::move(e));
    }

    // ---- T5: H_n(dD_q) of (cx;q)_inf/(ax,bx;q)_inf. The printed expansion
    // carries b^l where the operator variable is d; the proof display carries
    // d^l and is registered as the corrected form.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "c", "d", "x"});
        IdentitySpec e;
        e.id = "T5";
        e.description = "operator image of (cx;q)_inf/(ax,bx;q)_inf";
        e.anchor = "\\Phi_{m}^{(bx)}(a,b)c^{l-m}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        auto prefactor = [c](int N) {
            return c->poch_inf(c->mono({{"c", 1}, {"x", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"a", 1}, {"x", 1}}),
                                      c->mono({{"b", 1}, {"x", 1}})},
                                     N)
                       .inverse();
        };
        auto series_sum = [c](int n, int N, const char* opvar) {
            MultiSeries alpha = c->ms(c->mono({{"b", 1}, {"x", 1}}), N);
            MultiSeries acc = c->one(N);
            RatFunQ outer(1); // (q^n;q)_l / (q;q)_l, running
            for (int l = 1; 2 * l <= N; ++l) {
                outer *= (RatFunQ(1) - qpow(n + l - 1)) / (RatFunQ(1) - qpow(l));
                MultiSeries inner(c->vars, N);
                for (int m = 0; m <= l; ++m)
                    inner += hahn(m, alpha, c->var("a", N), c->var("b", N))
                                 .mul_monomial(c->mono(qbinom(l, m),
                                                       {{"c", static_cast<unsigned>(l - m)}}))
                                 .truncated(N);
                MultiSeries term =
                    (c->poch_fin(c->mono({{"c", 1}, {"x", 1}}), l, N).inverse() * inner)
                        .mul_monomial(c->mono(outer, {{opvar, static_cast<unsigned>(l)}}));
                acc += term.truncated(N);
            }
            return acc;
        };
        e.lhs = [c, prefactor](const Params& p, int N) {
            return heine_apply(*p.n, c->mono({{"d", 1}}), "x", prefactor(N));
        };
        e.rhs = [prefactor, series_sum](const Params& p, int N) {
            return prefactor(N) * series_sum(*p.n, N, "b");
        };
        e.corrected_rhs = [prefactor, series_sum](const Params& p, int N) {
            return prefactor(N) * series_sum(*p.n, N, "d");
        };
        e.note = "corrected form: proof display with d^l in place of b^l";
        entries.push_back(std::move(e));
    }

    // ---- T6: statement relies on notation defined only in companion work.
    {
        Ctx c({"b", "x", "y"});
        IdentitySpec e;
        e.id = "T6";
        e.description = "theta-weighted generating function (not auditable)";
        e.anchor = "(1\\ominus_{1,1}qxy)_{q}^{(-k-1)}";
        e.var_names = c.vars.names();
        e.grid = grid_single;
        e.skip = true;
        e.note = "skipped: the right-hand side uses Theta_0(xy,q^{-1}) and "
                 "(1 (-)_{1,1} qxy)_q^{(-k-1)}, notation defined only in the author's "
                 "companion work, and the subsequent limit display is left unfinished";
        entries.push_back(std::move(e));
    }

    // ---- T7: ordinary generating function,
    // sum_m Phi_m^{(q^n)}(b,x) y^m = 1/(1-xy) 2phi1(q^n, q; qxy; q, by).
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x", "y"});
        IdentitySpec e;
        e.id = "T7";
        e.description = "ordinary generating function of Phi_m";
        e.anchor = "\\frac{1}{1-xy}{}_{2}\\varphi_{1}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; 2 * m <= N; ++m)
                acc += hahn(m, qpow(*p.n), c->var("b", N), c->var("x", N))
                           .mul_monomial(c->mono({{"y", static_cast<unsigned>(m)}}))
                           .truncated(N);
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n)), c->scalar(qpow(1))},
                         {c->mono(qpow(1), {{"x", 1}, {"y", 1}})},
                         c->mono({{"b", 1}, {"y", 1}})};
            MultiSeries geom = (c->one(N) - c->ms(c->mono({{"x", 1}, {"y", 1}}), N)).inverse();
            return geom * c->phi(spec, N);
        };
        entries.push_back(std::move(e));
    }

    // ---- T8: q-exponential generating function,
    // sum_m Phi_m^{(q^n)}(b,x) y^m/(q;q)_m = (q^n by;q)_inf/(xy,by;q)_inf.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x", "y"});
        IdentitySpec e;
        e.id = "T8";
        e.description = "q-exponential generating function of Phi_m";
        e.anchor = "\\frac{(q^{n}by;q)_{\\infty}}{(xy,by;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; 2 * m <= N; ++m)
                acc += hahn(m, qpow(*p.n), c->var("b", N), c->var("x", N))
                           .mul_monomial(c->mono(poch_q(m).inverse(),
                                                 {{"y", static_cast<unsigned>(m)}}))
                           .truncated(N);
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            return c->poch_inf(c->mono(qpow(*p.n), {{"b", 1}, {"y", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"x", 1}, {"y", 1}}),
                                      c->mono({{"b", 1}, {"y", 1}})},
                                     N)
                       .inverse();
        };
        entries.push_back(std::move(e));
    }

    // ---- T9: E_q-weighted generating function. Statement:
    // (xy;q)_inf 2phi1(q^n, 0; -xy; q, by); proof display uses xy. The true
    // image is H_n(bD_q)(-xy;q)_inf, the a -> -y case of T3.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x", "y"});
        IdentitySpec e;
        e.id = "T9";
        e.description = "E_q-weighted generating function of Phi_m";
        e.anchor = "q^{\\binom{m}{2}}\\Phi_{m}^{(q^n)}(b,x|q)";
        e.var_names = c->vars.names();
        e.grid = grid_n;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; 2 * m <= N; ++m)
                acc += hahn(m, qpow(*p.n), c->var("b", N), c->var("x", N))
                           .mul_monomial(c->mono(q_binom2_power(m) / poch_q(m),
                                                 {{"y", static_cast<unsigned>(m)}}))
                           .truncated(N);
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n)), c->scalar(RatFunQ())},
                         {c->mono(RatFunQ(-1), {{"x", 1}, {"y", 1}})},
                         c->mono({{"b", 1}, {"y", 1}})};
            return c->poch_inf(c->mono({{"x", 1}, {"y", 1}}), N) * c->phi(spec, N);
        };
        e.corrected_rhs = [c](const Params& p, int N) {
            PhiSpec spec{{c->scalar(qpow(*p.n)), c->scalar(RatFunQ())},
                         {c->mono({{"x", 1}, {"y", 1}})},
                         c->mono({{"b", 1}, {"y", 1}})};
            return c->poch_inf(c->mono({{"x", 1}, {"y", 1}}), N) * c->phi(spec, N);
        };
        e.note = "corrected form: proof display with denominator parameter xy";
        entries.push_back(std::move(e));
    }

    // ---- T10: Mehler-type formula, ordinary weights. The printed right-hand
    // side contains (q^i;q)_l with i starting at 0 in a denominator and the
    // operator parameter a does not appear at all.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x", "y", "z"});
        IdentitySpec e;
        e.id = "T10";
        e.description = "Mehler-type formula, ordinary weights";
        e.anchor = "(q^k;q)_{m}(q;q)_{m}(bz)^m";
        e.var_names = c->vars.names();
        e.grid = grid_nk;
        e.note = "printed right-hand side lost the operator parameter a entirely, and its "
                 "(q^i;q)_l denominator vanishes at i=0";
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; 3 * m <= N; ++m)
                acc += (hahn(m, qpow(*p.n), c->var("a", N), c->var("x", N)) *
                        hahn(m, qpow(*p.k), c->var("b", N), c->var("y", N)))
                           .mul_monomial(c->mono({{"z", static_cast<unsigned>(m)}}))
                           .truncated(N);
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            const int n = *p.n, k = *p.k;
            MultiSeries acc(c->vars, N);
            for (int m = 0; 2 * m <= N; ++m) {
                const RatFunQ wm = poch_scalar(qpow(k), m) * poch_q(m);
                for (int i = 0; 2 * m + 2 * i <= N; ++i) {
                    const RatFunQ wi =
                        poch_scalar(qpow(n), i) / (poch_q(i) * poch_q(i));
                    MultiSeries inv_xyz =
                        c->poch_fin(c->mono({{"x", 1}, {"y", 1}, {"z", 1}}), m + i + 1, N)
                            .inverse();
                    for (int l = 0; l <= m; ++l) {
                        const RatFunQ den = poch_scalar(qpow(i), l);
                        if (den.is_zero()) {
                            std::ostringstream os;
                            os << "(q^" << i << ";q)_l vanishes at l=" << l;
                            throw undefined_series(os.str());
                        }
                        const RatFunQ wl = poch_scalar(qpow(n + i), l) /
                                           (den * poch_q(l) * poch_q(m - l));
                        MonomialArg monom =
                            c->mono(wm * wi * wl,
                                    {{"b", static_cast<unsigned>(m)},
                                     {"z", static_cast<unsigned>(m + i)},
                                     {"y", static_cast<unsigned>(i)},
                                     {"x", static_cast<unsigned>(m - l)}});
                        acc += inv_xyz.mul_monomial(monom).truncated(N);
                    }
                }
            }
            return acc;
        };
        entries.push_back(std::move(e));
    }

    // ---- T11: Mehler-type formula, q-exponential weights. Statement carries
    // (bz)^m where the operator H_n(aD_q) contributes a^m; the a^m variant is
    // the registered correction.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x", "y", "z"});
        IdentitySpec e;
        e.id = "T11";
        e.description = "Mehler-type formula, q-exponential weights";
        e.anchor = "\\Phi_{l}^{(bxz)}(yz,bz)(q^kbz)^{m-l}";
        e.var_names = c->vars.names();
        e.grid = grid_nk;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int m = 0; 3 * m <= N; ++m)
                acc += (hahn(m, qpow(*p.n), c->var("a", N), c->var("x", N)) *
                        hahn(m, qpow(*p.k), c->var("b", N), c->var("y", N)))
                           .mul_monomial(c->mono(poch_q(m).inverse(),
                                                 {{"z", static_cast<unsigned>(m)}}))
                           .truncated(N);
            return acc;
        };
        auto rhs_variant = [c](int n, int k, int N, bool use_a) {
            const MonomialArg qkbxz = c->mono(qpow(k), {{"b", 1}, {"x", 1}, {"z", 1}});
            MultiSeries pre =
                c->poch_inf(qkbxz, N) *
                c->poch_inf_multi({c->mono({{"x", 1}, {"y", 1}, {"z", 1}}),
                                   c->mono({{"b", 1}, {"x", 1}, {"z", 1}})},
                                  N)
                    .inverse();
            MultiSeries alpha = c->ms(c->mono({{"b", 1}, {"x", 1}, {"z", 1}}), N);
            MultiSeries yz = c->ms(c->mono({{"y", 1}, {"z", 1}}), N);
            MultiSeries bz = c->ms(c->mono({{"b", 1}, {"z", 1}}), N);
            MultiSeries acc(c->vars, N);
            const int wdeg = use_a ? 1 : 2; // degree of a^m vs (bz)^m
            for (int m = 0; (wdeg + 2) * m <= N; ++m) {
                const RatFunQ wm = poch_scalar(qpow(n), m) / poch_q(m);
                MultiSeries inner(c->vars, N);
                for (int l = 0; l <= m; ++l) {
                    MonomialArg tail = c->mono(qbinom(m, l) * qpow(static_cast<long long>(k) *
                                                                   (m - l)),
                                               {{"b", static_cast<unsigned>(m - l)},
                                                {"z", static_cast<unsigned>(m - l)}});
                    inner += hahn(l, alpha, yz, bz).mul_monomial(tail).truncated(N);
                }
                MonomialArg wmono =
                    use_a ? c->mono(wm, {{"a", static_cast<unsigned>(m)}})
                          : c->mono(wm, {{"b", static_cast<unsigned>(m)},
                                         {"z", static_cast<unsigned>(m)}});
                MultiSeries term =
                    (c->poch_fin(qkbxz, m, N).inverse() * inner).mul_monomial(wmono);
                acc += term.truncated(N);
            }
            return pre * acc;
        };
        e.rhs = [rhs_variant](const Params& p, int N) {
            return rhs_variant(*p.n, *p.k, N, false);
        };
        e.corrected_rhs = [rhs_variant](const Params& p, int N) {
            return rhs_variant(*p.n, *p.k, N, true);
        };
        e.note = "corrected form: outer factor a^m in place of the printed (bz)^m";
        entries.push_back(std::move(e));
    }

    // ---- T12: Rogers-type formula, ordinary weights. The printed final line
    // hoists 1/(1-xy) out of the i-sum; the proof's per-term factor is
    // 1/(1 - q^i xy), registered as the corrected form.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x", "y", "z"});
        IdentitySpec e;
        e.id = "T12";
        e.description = "Rogers-type formula, ordinary weights";
        e.anchor = "\\frac{(q^k;q)_{i}(bz)^i}{(xz;q)_{i+1}}";
        e.var_names = c->vars.names();
        e.grid = grid_k;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int s = 0; 2 * s <= N; ++s) {
                MultiSeries tags(c->vars, N);
                for (int i = 0; i <= s; ++i)
                    tags += c->ms(c->mono({{"z", static_cast<unsigned>(i)},
                                           {"y", static_cast<unsigned>(s - i)}}),
                                  N);
                acc += hahn(s, qpow(*p.k), c->var("b", N), c->var("x", N)) * tags;
            }
            return acc;
        };
        auto isum = [c](int k, int N, bool per_term_prefactor) {
            MultiSeries acc(c->vars, N);
            for (int i = 0; 2 * i <= N; ++i) {
                PhiSpec spec{{c->scalar(qpow(k + i)), c->scalar(qpow(1))},
                             {c->mono(qpow(i + 1), {{"x", 1}, {"y", 1}})},
                             c->mono({{"b", 1}, {"y", 1}})};
                MultiSeries term = c->poch_fin(c->mono({{"x", 1}, {"z", 1}}), i + 1, N)
                                       .inverse() *
                                   c->phi(spec, N);
                if (per_term_prefactor)
                    term = term * (c->one(N) -
                                   c->ms(c->mono(qpow(i), {{"x", 1}, {"y", 1}}), N))
                                      .inverse();
                acc += term.mul_monomial(c->mono(poch_scalar(qpow(k), i),
                                                 {{"b", static_cast<unsigned>(i)},
                                                  {"z", static_cast<unsigned>(i)}}))
                           .truncated(N);
            }
            return acc;
        };
        e.rhs = [c, isum](const Params& p, int N) {
            MultiSeries pre = ((c->one(N) - c->ms(c->mono({{"x", 1}, {"z", 1}}), N)) *
                               (c->one(N) - c->ms(c->mono({{"x", 1}, {"y", 1}}), N)))
                                  .inverse();
            return pre * isum(*p.k, N, false);
        };
        e.corrected_rhs = [isum](const Params& p, int N) { return isum(*p.k, N, true); };
        e.note = "corrected form: per-term factor 1/(1-q^i xy) from the proof in place of "
                 "the hoisted 1/((1-xz)(1-xy))";
        entries.push_back(std::move(e));
    }

    // ---- T13: Rogers-type formula, q-exponential weights.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"b", "x", "y", "z"});
        IdentitySpec e;
        e.id = "T13";
        e.description = "Rogers-type formula, q-exponential weights";
        e.anchor = "\\frac{(q^{k}bz;q)_{\\infty}}{(yx,xz,bz;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_k;
        e.lhs = [c](const Params& p, int N) {
            MultiSeries acc(c->vars, N);
            for (int s = 0; 2 * s <= N; ++s) {
                MultiSeries tags(c->vars, N);
                for (int i = 0; i <= s; ++i)
                    tags += c->ms(c->mono((poch_q(i) * poch_q(s - i)).inverse(),
                                          {{"y", static_cast<unsigned>(i)},
                                           {"z", static_cast<unsigned>(s - i)}}),
                                  N);
                acc += hahn(s, qpow(*p.k), c->var("b", N), c->var("x", N)) * tags;
            }
            return acc;
        };
        e.rhs = [c](const Params& p, int N) {
            const int k = *p.k;
            PhiSpec spec{{c->scalar(qpow(k)), c->mono({{"x", 1}, {"z", 1}})},
                         {c->mono(qpow(k), {{"b", 1}, {"z", 1}})},
                         c->mono({{"b", 1}, {"y", 1}})};
            return c->poch_inf(c->mono(qpow(k), {{"b", 1}, {"z", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"y", 1}, {"x", 1}}),
                                      c->mono({{"x", 1}, {"z", 1}}),
                                      c->mono({{"b", 1}, {"z", 1}})},
                                     N)
                       .inverse() *
                   c->phi(spec, N);
        };
        entries.push_back(std::move(e));
    }

    // ---- C1: T(bD_q) 1/(ax;q)_inf = 1/(ax,ab;q)_inf.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x"});
        IdentitySpec e;
        e.id = "C1";
        e.description = "limit-operator image of 1/(ax;q)_inf";
        e.anchor = "\\frac{1}{(ax,ab;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_single;
        e.lhs = [c](const Params&, int N) {
            return t_apply(c->mono({{"b", 1}}), "x",
                           c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N).inverse());
        };
        e.rhs = [c](const Params&, int N) {
            return c->poch_inf_multi({c->mono({{"a", 1}, {"x", 1}}),
                                      c->mono({{"a", 1}, {"b", 1}})},
                                     N)
                .inverse();
        };
        entries.push_back(std::move(e));
    }

    // ---- C2: T(bD_q) (ax;q)_inf. The printed corollary reads
    // 2phi1(0,0; ax; q, ab), which inherits the dropped alternating factor
    // from the finite-order statement; the audited closed form is the
    // n -> infinity limit of the corrected one, (ax;q)_inf 1phi1(0; ax; q, ab).
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "x"});
        IdentitySpec e;
        e.id = "C2";
        e.description = "limit-operator image of (ax;q)_inf";
        e.anchor = "{}_{2}\\varphi_{1}\\left(\\begin{array}{c} 0,0";
        e.var_names = c->vars.names();
        e.grid = grid_single;
        e.note = "audited closed form is (ax;q)_inf 1phi1(0; ax; q, ab); the printed "
                 "2phi1(0,0; ax; q, ab) drops the factor (-1)^k q^(C(k,2)) contributed by "
                 "D_q^k (ax;q)_inf";
        e.lhs = [c](const Params&, int N) {
            return t_apply(c->mono({{"b", 1}}), "x",
                           c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N));
        };
        e.rhs = [c](const Params&, int N) {
            PhiSpec spec{{c->scalar(RatFunQ())},
                         {c->mono({{"a", 1}, {"x", 1}})},
                         c->mono({{"a", 1}, {"b", 1}})};
            return c->poch_inf(c->mono({{"a", 1}, {"x", 1}}), N) * c->phi(spec, N);
        };
        entries.push_back(std::move(e));
    }

    // ---- C3: T(aD_q) 1/(bx,cx;q)_inf = (abcx;q)_inf/(bx,cx,ac,ab;q)_inf.
    {
        auto c = std::make_shared<Ctx>(std::vector<std::string>{"a", "b", "c", "x"});
        IdentitySpec e;
        e.id = "C3";
        e.description = "limit-operator image of 1/(bx,cx;q)_inf";
        e.anchor = "\\frac{(a b cx;q)_{\\infty}}{(bx,cx,ac,ab;q)_{\\infty}}";
        e.var_names = c->vars.names();
        e.grid = grid_single;
        e.lhs = [c](const Params&, int N) {
            return t_apply(c->mono({{"a", 1}}), "x",
                           c->poch_inf_multi({c->mono({{"b", 1}, {"x", 1}}),
                                              c->mono({{"c", 1}, {"x", 1}})},
                                             N)
                               .inverse());
        };
        e.rhs = [c](const Params&, int N) {
            return c->poch_inf(c->mono({{"a", 1}, {"b", 1}, {"c", 1}, {"x", 1}}), N) *
                   c->poch_inf_multi({c->mono({{"b", 1}, {"x", 1}}),
                                      c->mono({{"c", 1}, {"x", 1}}),
                                      c->mono({{"a", 1}, {"c", 1}}),
                                      c->mono({{"a", 1}, {"b", 1}})},
                                     N)
                       .inverse();
        };
        entries.push_back(std::move(e));
    }

    return entries;
}

} // namespace

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> entries = build_catalog();
    return entries;
}

const IdentitySpec& catalog_entry(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

} // namespace qaudit
