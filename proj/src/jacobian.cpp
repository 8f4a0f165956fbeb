#include "borel/jacobian.hpp"

#include <algorithm>
#include <set>

namespace borel {

JacobianMatrix moment_jacobian(const MomentSystem& sys) {
    if (sys.flavor() != MomentFlavor::Borel)
        throw Error("moment_jacobian: borel flavor required");
    JacobianMatrix jm;
    jm.n = sys.n();
    jm.cols = sys.ambient_vars();
    int rows = static_cast<int>(sys.polys().size());
    int cols = static_cast<int>(jm.cols.size());
    jm.m = Mat<MultiPoly>(rows, cols);
    for (int p = 1; p <= rows; ++p)
        for (int v = 1; v <= cols; ++v)
            jm.m.at(p, v) = sys.polys()[p - 1].diff(jm.cols[v - 1]);
    return jm;
}

Mat<Rational> eval_jacobian(const JacobianMatrix& jm, const NumQuadruple& x) {
    if (x.n != jm.n) throw DimensionError("eval_jacobian: size mismatch");
    return eval_matrix(jm.m, assignment(x));
}

int rank_at(const JacobianMatrix& jm, const NumQuadruple& x) {
    return rank(eval_jacobian(jm, x));
}

std::vector<MultiPoly> maximal_minors(const JacobianMatrix& jm, std::size_t max_minors) {
    int k = jm.m.rows();
    int cols = jm.m.cols();
    // C(cols, k) with overflow-safe early exit
    std::size_t count = 1;
    for (int t = 1; t <= k; ++t) {
        count = count * static_cast<std::size_t>(cols - k + t) / static_cast<std::size_t>(t);
        if (count > max_minors)
            throw CapExceededError("maximal_minors: minor count exceeds cap " +
                                   std::to_string(max_minors));
    }
    std::set<MultiPoly::TermMap> seen;
    std::vector<MultiPoly> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pick[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        Mat<MultiPoly> sub(k, k);
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b) sub.at(a, b) = jm.m.at(a, pick[static_cast<std::size_t>(b - 1)]);
        MultiPoly d = sub.det();
        if (!d.is_zero()) {
            // sign-normalize so a minor and its negation dedupe together
            if (d.terms().begin()->second.sign() < 0) d = -d;
            if (seen.insert(d.terms()).second) out.push_back(std::move(d));
        }
        int t = k - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == cols - (k - 1 - t)) --t;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

Ideal singular_ideal(const MomentSystem& sys, OrderKind kind) {
    JacobianMatrix jm = moment_jacobian(sys);
    std::vector<MultiPoly> gens = sys.polys();
    for (MultiPoly& m : maximal_minors(jm)) gens.push_back(std::move(m));
    return Ideal(std::move(gens), MonomialOrder(kind, sys.ambient_vars()));
}

namespace {

/// ell = all ones witness (i = 1, j = 0, diagonal s) with prescribed r diagonal;
/// mu vanishes for any diagonal pair, colliding eigenvalues included.
NumQuadruple ones_witness(int n, const std::vector<Rational>& r_diag, Rng& rng) {
    NumQuadruple q;
    q.n = n;
    q.r = Mat<Rational>(n, n, Shape::Upper);
    q.s = Mat<Rational>(n, n, Shape::LowerRep);
    q.i = Mat<Rational>(n, 1);
    q.j = Mat<Rational>(1, n);
    for (int a = 1; a <= n; ++a) {
        q.r.at(a, a) = r_diag[static_cast<std::size_t>(a - 1)];
        q.s.at(a, a) = rng.next_rational(7);
        q.i.at(a, 1) = Rational(1);
    }
    return q;
}

} // namespace

CollisionProbe collision_probe(int n, uint64_t seed, int steps) {
    if (n < 2) throw DimensionError("collision_probe: n >= 2 required");
    MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
    JacobianMatrix jm = moment_jacobian(sys);
    CollisionProbe probe;
    probe.n = n;
    probe.full_rank = n * (n + 1) / 2;
    Rng rng(seed);
    std::vector<Rational> r_diag(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) r_diag[static_cast<std::size_t>(a)] = Rational(a + 1);
    Rational base = r_diag[static_cast<std::size_t>(n - 2)];
    Rational u(1);
    for (int k = 0; k < steps; ++k) {
        if (k == steps - 1) u = Rational(0);
        r_diag[static_cast<std::size_t>(n - 1)] = base + u;
        NumQuadruple x = ones_witness(n, r_diag, rng);
        if (!sys.vanishes_at(x)) throw CertificationError("collision_probe: witness off the fiber");
        probe.path.push_back(PathSample{u, rank_at(jm, x)});
        u = u * Rational(1, 2);
    }
    int last = probe.path.back().rank;
    probe.drop_detected = true;
    for (std::size_t k = 0; k + 1 < probe.path.size(); ++k)
        if (probe.path[k].rank <= last) probe.drop_detected = false;
    return probe;
}

TransversalityRecord transversality_probe(int n, unsigned ell1, unsigned ell2, uint64_t seed) {
    if (n < 1 || n > 30) throw DimensionError("transversality_probe: bad n");
    MomentSystem sys = MomentSystem::build(n, MomentFlavor::Borel);
    JacobianMatrix jm = moment_jacobian(sys);
    Rng rng(seed);
    // common-closure point: i on ell1 AND ell2, j off ell1 OR ell2
    unsigned ell_i = ell1 & ell2;
    unsigned ell_j = ell1 | ell2;
    NumQuadruple q;
    q.n = n;
    q.r = Mat<Rational>(n, n, Shape::Upper);
    q.s = Mat<Rational>(n, n, Shape::LowerRep);
    q.i = Mat<Rational>(n, 1);
    q.j = Mat<Rational>(1, n);
    for (int a = 1; a <= n; ++a) {
        q.r.at(a, a) = Rational(a); // distinct
        q.s.at(a, a) = rng.next_rational(7);
        q.i.at(a, 1) = Rational((ell_i >> (a - 1)) & 1u);
        q.j.at(1, a) = Rational(1 - ((ell_j >> (a - 1)) & 1u));
    }
    for (int a = 2; a <= n; ++a)
        for (int b = 1; b < a; ++b)
            q.s.at(a, b) = -(q.i.at(a, 1) * q.j.at(1, b)) / (q.r.at(a, a) - q.r.at(b, b));
    TransversalityRecord rec;
    rec.n = n;
    rec.ell1 = ell1;
    rec.ell2 = ell2;
    rec.moment_vanishes = sys.vanishes_at(q);
    rec.rank = rank_at(jm, q);
    rec.full_rank = n * (n + 1) / 2;
    return rec;
}

} // namespace borel
