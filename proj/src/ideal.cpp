#include "borel/ideal.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <numeric>

namespace borel {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<VarId> vars)
    : kind_(kind), vars_(std::move(vars)) {
    if (vars_.empty()) throw DimensionError("MonomialOrder: empty variable list");
    for (std::size_t k = 1; k < vars_.size(); ++k)
        if (!(vars_[k - 1] < vars_[k]))
            throw Error("MonomialOrder: variables must strictly increase in the global order");
}

int MonomialOrder::index_of(VarId v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vars_.begin());
}

namespace {

using Exp = std::vector<uint32_t>;

int exp_deg(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// -1 / 0 / +1 for a < b / a = b / a > b.
int cmp_exp(OrderKind kind, const Exp& a, int dega, const Exp& b, int degb) {
    if (kind == OrderKind::Grevlex) {
        if (dega != degb) return dega < degb ? -1 : 1;
        for (std::size_t k = a.size(); k-- > 0;)
            if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
        return 0;
    }
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

Exp monomial_exp(const Monomial& m, const MonomialOrder& ord) {
    Exp e(ord.vars().size(), 0);
    for (const auto& [v, k] : m.factors()) {
        int idx = ord.index_of(v);
        if (idx < 0) throw Error("monomial order: variable " + v.name() + " not in the ambient list");
        e[static_cast<std::size_t>(idx)] = k;
    }
    return e;
}

Monomial exp_monomial(const Exp& e, const MonomialOrder& ord) {
    std::vector<Monomial::Factor> fs;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k]) fs.emplace_back(ord.vars()[k], e[k]);
    return Monomial::of(std::move(fs));
}

bool exp_divides(const Exp& d, const Exp& m) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] > m[k]) return false;
    return true;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::max(a[k], b[k]);
    return e;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] - b[k];
    return e;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] + b[k];
    return e;
}

bool exp_coprime(const Exp& a, const Exp& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) return false;
    return true;
}

struct GTerm {
    Exp e;
    int deg;
    mpz_class c;
};

/// Terms sorted strictly descending in the active order, integer coefficients.
struct GPoly {
    std::vector<GTerm> t;
    int sugar = 0;

    bool zero() const { return t.empty(); }
    const GTerm& lt() const { return t.front(); }
};

/// Divide by integer content and make the leading coefficient positive.
void normalize_content(GPoly& p) {
    if (p.zero()) return;
    mpz_class g = 0;
    for (const GTerm& t : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(p.t.front().c) < 0) g = -g;
    if (g != 1)
        for (GTerm& t : p.t) t.c /= g;
}

/// p as primitive integer polynomial plus the rational scale with p = scale * gp.
std::pair<GPoly, Rational> from_multipoly(const MultiPoly& p, const MonomialOrder& ord) {
    GPoly gp;
    if (p.is_zero()) return {gp, Rational(1)};
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        Exp e = monomial_exp(m, ord);
        int deg = exp_deg(e);
        gp.t.push_back(GTerm{std::move(e), deg, c.numerator() * (den_lcm / c.denominator())});
    }
    OrderKind kind = ord.kind();
    std::sort(gp.t.begin(), gp.t.end(), [kind](const GTerm& x, const GTerm& y) {
        return cmp_exp(kind, x.e, x.deg, y.e, y.deg) > 0;
    });
    mpz_class content = 0;
    for (const GTerm& t : gp.t) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
    if (sgn(gp.t.front().c) < 0) content = -content;
    for (GTerm& t : gp.t) t.c /= content;
    gp.sugar = gp.t.front().deg;
    for (const GTerm& t : gp.t) gp.sugar = std::max(gp.sugar, t.deg);
    return {gp, Rational(mpq_class(content, den_lcm))};
}

MultiPoly to_multipoly(const GPoly& p, const MonomialOrder& ord) {
    MultiPoly out;
    for (const GTerm& t : p.t)
        out += MultiPoly::term(Rational(mpq_class(t.c)), exp_monomial(t.e, ord));
    return out;
}

/// a*(sf*f) - b*(sg*g), merged in descending order. Null shifts mean no shift.
GPoly combine(const GPoly& f, const mpz_class& a, const Exp* sf, const GPoly& g,
              const mpz_class& b, const Exp* sg, OrderKind kind) {
    auto shifted = [](const GPoly& p, const Exp* s) {
        std::vector<std::pair<Exp, int>> out;
        out.reserve(p.t.size());
        int sdeg = s ? exp_deg(*s) : 0;
        for (const GTerm& t : p.t)
            out.emplace_back(s ? exp_add(t.e, *s) : t.e, t.deg + sdeg);
        return out;
    };
    std::vector<std::pair<Exp, int>> fe = shifted(f, sf), ge = shifted(g, sg);
    GPoly out;
    out.t.reserve(fe.size() + ge.size());
    std::size_t x = 0, y = 0;
    while (x < fe.size() || y < ge.size()) {
        int take; // +1 from f, -1 from g, 0 both
        if (x == fe.size()) take = -1;
        else if (y == ge.size()) take = 1;
        else take = cmp_exp(kind, fe[x].first, fe[x].second, ge[y].first, ge[y].second);
        if (take > 0) {
            out.t.push_back(GTerm{std::move(fe[x].first), fe[x].second, a * f.t[x].c});
            ++x;
        } else if (take < 0) {
            out.t.push_back(GTerm{std::move(ge[y].first), ge[y].second, -b * g.t[y].c});
            ++y;
        } else {
            mpz_class c = a * f.t[x].c - b * g.t[y].c;
            if (c != 0) out.t.push_back(GTerm{std::move(fe[x].first), fe[x].second, std::move(c)});
            ++x;
            ++y;
        }
    }
    return out;
}

/// S-polynomial with content-bounded integer scaling.
GPoly spoly(const GPoly& fi, const GPoly& fj, const Exp& lcm, OrderKind kind) {
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), fi.lt().c.get_mpz_t(), fj.lt().c.get_mpz_t());
    Exp u = exp_sub(lcm, fi.lt().e), v = exp_sub(lcm, fj.lt().e);
    return combine(fi, fj.lt().c / d, &u, fj, fi.lt().c / d, &v, kind);
}

/// Full normal form of f against basis. Tracks the rational multiplier applied
/// to f so callers can recover the exact Q-remainder: on return
/// f = (sum of basis multiples) + remainder / mult ... precisely,
/// remainder == mult * (f mod basis). Sugar is threaded through.
GPoly reduce_full(GPoly f, const std::vector<GPoly>& basis, const MonomialOrder& ord,
                  mpq_class* mult_out) {
    OrderKind kind = ord.kind();
    mpq_class mult = 1;
    std::vector<GTerm> rem;
    while (!f.zero()) {
        const GTerm& lt = f.lt();
        const GPoly* red = nullptr;
        for (const GPoly& g : basis)
            if (!g.zero() && g.lt().deg <= lt.deg && exp_divides(g.lt().e, lt.e)) {
                red = &g;
                break;
            }
        if (red == nullptr) {
            rem.push_back(lt);
            f.t.erase(f.t.begin());
            continue;
        }
        Exp shift = exp_sub(lt.e, red->lt().e);
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), lt.c.get_mpz_t(), red->lt().c.get_mpz_t());
        mpz_class a = red->lt().c / d; // scale f (and rem, and mult)
        mpz_class b = lt.c / d;        // scale the subtracted multiple of g
        if (sgn(a) < 0) {
            a = -a;
            b = -b;
        }
        int new_sugar = std::max(f.sugar, exp_deg(shift) + red->sugar);
        f = combine(f, a, nullptr, *red, b, &shift, kind);
        f.sugar = new_sugar;
        if (a != 1) {
            for (GTerm& t : rem) t.c *= a;
            mult *= a;
        }
        // joint content strip keeps remainder/mult exact and coefficients small
        if (!rem.empty() || !f.zero()) {
            mpz_class g = 0;
            for (const GTerm& t : f.t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            for (const GTerm& t : rem) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g > 1) {
                for (GTerm& t : f.t) t.c /= g;
                for (GTerm& t : rem) t.c /= g;
                mult /= mpq_class(g);
            }
        }
    }
    GPoly out;
    out.t = std::move(rem);
    out.sugar = f.sugar;
    if (mult_out) *mult_out = mult;
    return out;
}

struct Pair {
    std::size_t i, j;
    Exp lcm;
    int lcm_deg;
    int sugar;
};

Pair make_pair(std::size_t i, std::size_t j, const std::vector<GPoly>& g) {
    Pair p;
    p.i = i;
    p.j = j;
    p.lcm = exp_lcm(g[i].lt().e, g[j].lt().e);
    p.lcm_deg = exp_deg(p.lcm);
    p.sugar = p.lcm_deg + std::max(g[i].sugar - g[i].lt().deg, g[j].sugar - g[j].lt().deg);
    return p;
}

/// Gebauer-Moeller pair update on adding basis element h (index hi).
void update_pairs(std::vector<GPoly>& g, std::vector<Pair>& pairs, GPoly h) {
    std::size_t hi = g.size();
    g.push_back(std::move(h));
    const Exp& hlm = g[hi].lt().e;

    // Gebauer-Moeller: filter the new pairs (k, hi) against one another...
    std::vector<Pair> cand;
    for (std::size_t k = 0; k < hi; ++k) cand.push_back(make_pair(k, hi, g));
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
        bool coprime = exp_coprime(g[cand[k].i].lt().e, hlm);
        bool dominated = false;
        if (!coprime) {
            for (std::size_t m = k + 1; m < cand.size() && !dominated; ++m)
                if (exp_divides(cand[m].lcm, cand[k].lcm)) dominated = true;
            for (const Pair& q : kept)
                if (exp_divides(q.lcm, cand[k].lcm)) {
                    dominated = true;
                    break;
                }
        }
        if (coprime || !dominated) kept.push_back(cand[k]);
    }
    // ... prune old pairs whose lcm strictly absorbs through LM(h) ...
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
        if (!exp_divides(hlm, p.lcm) || exp_lcm(g[p.i].lt().e, hlm) == p.lcm ||
            exp_lcm(g[p.j].lt().e, hlm) == p.lcm)
            next.push_back(p);
    }
    // ... and drop the coprime survivors (Buchberger's first criterion).
    for (const Pair& p : kept)
        if (!exp_coprime(g[p.i].lt().e, hlm)) next.push_back(p);
    pairs = std::move(next);
}

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::vector<GPoly> buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord,
                              const GroebnerCaps& caps) {
    Clock clock;
    std::vector<GPoly> g;
    std::vector<Pair> pairs;
    for (const MultiPoly& p : gens) {
        if (p.is_zero()) throw Error("groebner: zero generator");
        GPoly gp = from_multipoly(p, ord).first;
        update_pairs(g, pairs, std::move(gp));
    }
    OrderKind kind = ord.kind();
    while (!pairs.empty()) {
        if (clock.seconds() > caps.timeout_sec)
            throw CapExceededError("groebner: timeout after " +
                                   std::to_string(static_cast<long>(caps.timeout_sec)) + "s with " +
                                   std::to_string(pairs.size()) + " pairs left");
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            int c = a.sugar != b.sugar ? (a.sugar < b.sugar ? -1 : 1)
                                       : cmp_exp(kind, a.lcm, a.lcm_deg, b.lcm, b.lcm_deg);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        if (p.sugar > caps.max_degree)
            throw CapExceededError("groebner: pair degree " + std::to_string(p.sugar) +
                                   " exceeds cap " + std::to_string(caps.max_degree));
        GPoly s = spoly(g[p.i], g[p.j], p.lcm, kind);
        s.sugar = p.sugar;
        GPoly rem = reduce_full(std::move(s), g, ord, nullptr);
        if (rem.zero()) continue;
        normalize_content(rem);
        if (g.size() >= caps.max_basis)
            throw CapExceededError("groebner: basis size cap " + std::to_string(caps.max_basis) +
                                   " reached");
        update_pairs(g, pairs, std::move(rem));
    }
    return g;
}

std::vector<MultiPoly> reduced_basis(std::vector<GPoly> g, const MonomialOrder& ord) {
    OrderKind kind = ord.kind();
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        int c = cmp_exp(kind, g[x].lt().e, g[x].lt().deg, g[y].lt().e, g[y].lt().deg);
        return c != 0 ? c < 0 : x < y;
    });
    std::vector<GPoly> minimal;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (const GPoly& kept : minimal)
            if (exp_divides(kept.lt().e, g[k].lt().e)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g[k]));
    }
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<GPoly> others;
        for (std::size_t m = 0; m < minimal.size(); ++m)
            if (m != k) others.push_back(minimal[m]);
        GPoly r = others.empty() ? minimal[k] : reduce_full(minimal[k], others, ord, nullptr);
        normalize_content(r);
        MultiPoly q = to_multipoly(r, ord);
        out.push_back(q * Rational(mpq_class(r.lt().c)).inverse()); // monic
    }
    return out;
}

} // namespace

Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw Error("leading_monomial: zero polynomial");
    const Monomial* best = nullptr;
    Exp be;
    int bd = 0;
    for (const auto& [m, c] : p.terms()) {
        Exp e = monomial_exp(m, ord); // also validates the support
        int d = exp_deg(e);
        if (best == nullptr || cmp_exp(ord.kind(), be, bd, e, d) < 0) {
            best = &m;
            be = std::move(e);
            bd = d;
        }
    }
    return *best;
}

bool MonomialOrder::less(const Monomial& x, const Monomial& y) const {
    Exp a = monomial_exp(x, *this), b = monomial_exp(y, *this);
    return cmp_exp(kind_, a, exp_deg(a), b, exp_deg(b)) < 0;
}

Ideal::Ideal(std::vector<MultiPoly> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(std::move(order)) {
    if (gens_.empty()) throw Error("Ideal: no generators");
    for (const MultiPoly& p : gens_) {
        if (p.is_zero()) throw Error("Ideal: zero generator");
        for (VarId v : p.support())
            if (order_.index_of(v) < 0)
                throw Error("Ideal: generator variable " + v.name() + " not in the ambient list");
    }
}

const std::vector<MultiPoly>& Ideal::groebner(const GroebnerCaps& caps) {
    if (!basis_ready_) {
        basis_ = reduced_basis(buchberger(gens_, order_, caps), order_);
        basis_ready_ = true;
    }
    return basis_;
}

void Ideal::install_basis(const std::vector<MultiPoly>& basis) {
    if (!verify_groebner(basis, gens_, order_))
        throw Error("install_basis: candidate basis failed verification");
    basis_ = basis;
    basis_ready_ = true;
}

std::vector<Monomial> Ideal::leading_monomials(const GroebnerCaps& caps) {
    std::vector<Monomial> out;
    for (const MultiPoly& p : groebner(caps)) out.push_back(leading_monomial(p, order_));
    return out;
}

MultiPoly Ideal::normal_form(const MultiPoly& p, const GroebnerCaps& caps) {
    const std::vector<MultiPoly>& basis = groebner(caps);
    if (p.is_zero()) return p;
    std::vector<GPoly> gb;
    for (const MultiPoly& b : basis) gb.push_back(from_multipoly(b, order_).first);
    auto [gp, scale] = from_multipoly(p, order_);
    mpq_class mult = 1;
    GPoly rem = reduce_full(std::move(gp), gb, order_, &mult);
    return to_multipoly(rem, order_) * (scale * Rational(mpq_class(1) / mult));
}

bool Ideal::contains(const MultiPoly& p, const GroebnerCaps& caps) {
    return normal_form(p, caps).is_zero();
}

namespace {

/// Minimum hitting set size over the supports, branch and bound.
int min_hitting_set(std::vector<uint64_t> supports, int nvars) {
    // keep only inclusion-minimal supports
    std::sort(supports.begin(), supports.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<uint64_t> minimal;
    for (uint64_t s : supports) {
        bool dominated = false;
        for (uint64_t m : minimal)
            if ((m & s) == m) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(s);
    }
    int best = nvars + 1;
    auto bound = [](const std::vector<uint64_t>& sets) {
        int b = 0;
        uint64_t used = 0;
        for (uint64_t s : sets)
            if ((s & used) == 0) {
                ++b;
                used |= s;
            }
        return b;
    };
    std::function<void(const std::vector<uint64_t>&, int)> dfs =
        [&](const std::vector<uint64_t>& sets, int count) {
            if (sets.empty()) {
                best = std::min(best, count);
                return;
            }
            if (count + bound(sets) >= best) return;
            uint64_t pick = sets.front(); // minimal popcount thanks to the original sort order
            for (const uint64_t& s : sets)
                if (__builtin_popcountll(s) < __builtin_popcountll(pick)) pick = s;
            for (int v = 0; v < nvars; ++v)
                if (pick & (1ull << v)) {
                    std::vector<uint64_t> rest;
                    for (uint64_t s : sets)
                        if (!(s & (1ull << v))) rest.push_back(s);
                    dfs(rest, count + 1);
                }
        };
    dfs(minimal, 0);
    return best;
}

} // namespace

int Ideal::dimension(const GroebnerCaps& caps) {
    const std::vector<MultiPoly>& basis = groebner(caps);
    int nvars = static_cast<int>(order_.vars().size());
    if (nvars > 60) throw CapExceededError("dimension: more than 60 variables");
    std::vector<uint64_t> supports;
    for (const MultiPoly& p : basis) {
        Monomial lm = leading_monomial(p, order_);
        if (lm.trivial()) return -1; // 1 lies in the ideal
        uint64_t mask = 0;
        for (const auto& [v, e] : lm.factors())
            mask |= 1ull << static_cast<unsigned>(order_.index_of(v));
        supports.push_back(mask);
    }
    return nvars - min_hitting_set(std::move(supports), nvars);
}

CompleteIntersectionReport Ideal::complete_intersection(const GroebnerCaps& caps) {
    CompleteIntersectionReport rep;
    rep.ambient_dim = static_cast<int>(order_.vars().size());
    rep.dimension = dimension(caps);
    rep.codimension = rep.ambient_dim - rep.dimension;
    rep.generators = gens_.size();
    rep.complete_intersection = rep.codimension == static_cast<int>(rep.generators);
    return rep;
}

bool verify_groebner(const std::vector<MultiPoly>& basis, const std::vector<MultiPoly>& gens,
                     const MonomialOrder& order) {
    std::vector<GPoly> g;
    for (const MultiPoly& b : basis) {
        if (b.is_zero()) return false;
        g.push_back(from_multipoly(b, order).first);
    }
    OrderKind kind = order.kind();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            GPoly s = spoly(g[i], g[j], exp_lcm(g[i].lt().e, g[j].lt().e), kind);
            if (!reduce_full(std::move(s), g, order, nullptr).zero()) return false;
        }
    for (const MultiPoly& p : gens) {
        GPoly gp = from_multipoly(p, order).first;
        if (!reduce_full(std::move(gp), g, order, nullptr).zero()) return false;
    }
    return true;
}

} // namespace borel
