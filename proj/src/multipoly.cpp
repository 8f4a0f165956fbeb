#include "borel/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "borel/errors.hpp"

namespace borel {

namespace {
int g_degree_cap = 64;
} // namespace

int degree_cap() { return g_degree_cap; }
void set_degree_cap(int cap) { g_degree_cap = cap; }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, uint32_t e) {
    Monomial m;
    if (e > 0) m.f_.emplace_back(v, e);
    return m;
}

Monomial Monomial::of(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.first < y.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == v)
            m.f_.back().second += e;
        else
            m.f_.emplace_back(v, e);
    }
    return m;
}

int Monomial::total_degree() const {
    long d = 0;
    for (const auto& [v, e] : f_) d += e;
    return static_cast<int>(d);
}

uint32_t Monomial::degree_in(VarId v) const {
    for (const auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first == b->first) {
            m.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            m.f_.push_back(*a++);
        } else {
            m.f_.push_back(*b++);
        }
    }
    m.f_.insert(m.f_.end(), a, f_.end());
    m.f_.insert(m.f_.end(), b, o.f_.end());
    return m;
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const auto& fac : f_)
        if (!(fac.first == v)) m.f_.push_back(fac);
    return m;
}

bool operator<(const Monomial& x, const Monomial& y) {
    return std::lexicographical_compare(
        x.f_.begin(), x.f_.end(), y.f_.begin(), y.f_.end(),
        [](const Monomial::Factor& a, const Monomial::Factor& b) {
            if (!(a.first == b.first)) return a.first < b.first;
            return a.second < b.second;
        });
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << v.name();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MultiPoly MultiPoly::var(VarId v, uint32_t e) {
    return term(Rational(1), Monomial::var(v, e));
}

MultiPoly MultiPoly::term(Rational c, Monomial m) {
    MultiPoly p;
    if (!c.is_zero()) {
        check_cap(m);
        p.terms_.emplace(std::move(m), std::move(c));
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.trivial());
}

Rational MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int MultiPoly::degree_in(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(v)));
    return d;
}

int MultiPoly::min_degree_in(VarId v) const {
    if (terms_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.degree_in(v)));
    return d;
}

bool MultiPoly::depends_on(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.depends_on(v)) return true;
    return false;
}

std::set<VarId> MultiPoly::support() const {
    std::set<VarId> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) s.insert(v);
    return s;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_cap(const Monomial& m) {
    if (m.total_degree() > g_degree_cap)
        throw DegreeCapError("monomial degree " + std::to_string(m.total_degree()) +
                             " exceeds cap " + std::to_string(g_degree_cap));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            MultiPoly::check_cap(m);
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
    MultiPoly acc{Rational(1)};
    MultiPoly base = *this;
    while (true) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (!e) break;
        base = base * base;
    }
    return acc;
}

Rational MultiPoly::eval(const std::map<VarId, Rational>& point) const {
    PointEval pe(point);
    return pe(*this);
}

MultiPoly MultiPoly::diff(VarId v) const {
    MultiPoly p;
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(v);
        if (e == 0) continue;
        Monomial dm = m.without(v);
        if (e > 1) dm = dm * Monomial::var(v, e - 1);
        p.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return p;
}

MultiPoly MultiPoly::coefficient_of(VarId v, uint32_t k) const {
    MultiPoly p;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(v) == k) p.add_term(m.without(v), c);
    return p;
}

MultiPoly MultiPoly::subst_vars(const std::map<VarId, MultiPoly>& repl) const {
    // Leaves outside the map stay fixed.
    std::map<VarId, MultiPoly> cache;
    std::function<const MultiPoly*(VarId)> leaf = [&](VarId v) -> const MultiPoly* {
        auto it = repl.find(v);
        if (it != repl.end()) return &it->second;
        auto [cit, ins] = cache.try_emplace(v, MultiPoly::var(v));
        return &cit->second;
    };
    return subst<MultiPoly>(leaf);
}

MultiPoly MultiPoly::cancel_unit_pairs(const std::vector<std::pair<VarId, VarId>>& pairs) const {
    MultiPoly p;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> fs(m.factors().begin(), m.factors().end());
        for (const auto& [u, v] : pairs) {
            uint32_t du = 0, dv = 0;
            for (const auto& [w, e] : fs) {
                if (w == u) du = e;
                if (w == v) dv = e;
            }
            uint32_t k = std::min(du, dv);
            if (k == 0) continue;
            for (auto& fac : fs) {
                if (fac.first == u) fac.second = du - k;
                if (fac.first == v) fac.second = dv - k;
            }
        }
        p.add_term(Monomial::of(fs), c);
    }
    return p;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c.abs();
        if (m.trivial()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << m.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- PointEval

PointEval::PointEval(const std::map<VarId, Rational>& point) {
    for (const auto& [v, c] : point) vals_.emplace(v.code(), c);
}

const Rational& PointEval::power(uint32_t code, uint32_t e) const {
    auto& pw = powers_[code];
    if (pw.empty()) {
        auto it = vals_.find(code);
        if (it == vals_.end())
            throw MissingAssignmentError("eval: no value for " + VarId::from_code(code).name());
        pw.push_back(Rational(1));
        pw.push_back(it->second);
    }
    while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
    return pw[e];
}

Rational PointEval::operator()(const MultiPoly& p) const {
    Rational acc(0);
    for (const auto& [m, c] : p.terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) t *= power(v.code(), e);
        acc += t;
    }
    return acc;
}

} // namespace borel
