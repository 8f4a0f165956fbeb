#pragma once

#include <string>
#include <utility>
#include <vector>

#include "borel/invariants.hpp"
#include "borel/rng.hpp"

namespace borel {

enum class GenKind { Ell, LR, GuardN, Guard1 };

/// One generator of the word algebra:
///   ELL{J}    = ell^J
///   LR{iota}  = ell^{[n]-{iota}} r, with tracked denominator tr^{[n]-{iota}}
///   GUARDN{J} = ell^{[n]-{n}} s ell^J
///   GUARD1{J} = ell^J s ell^{[n]-{1}}.
/// For LR the stored subset is the complement [n]-{iota}.
struct Generator {
    GenKind kind;
    SubsetIndex J;
    int iota = 0; // LR only

    static Generator ell(SubsetIndex J);
    static Generator lr(int n, int iota);
    static Generator guard_n(SubsetIndex J);
    static Generator guard_1(SubsetIndex J);

    int n() const { return J.n(); }
    /// "ELL{1,3}", "LR{2}", "GUARDN{}", "GUARD1{1}".
    std::string str() const;

    friend bool operator==(const Generator& x, const Generator& y) {
        return x.kind == y.kind && x.J == y.J && x.iota == y.iota;
    }
};

/// Ordered product of generators. The empty word realizes to the identity.
struct Word {
    int n = 0;
    std::vector<Generator> gens;

    explicit Word(int n) : n(n) {}
    Word(int n, std::vector<Generator> gens);

    /// "1" for the empty word, else atoms joined with '*'.
    std::string str() const;
    /// Inverse of str(). Accepts "1" or "I" for the empty word.
    static Word parse(int n, const std::string& spec);

    friend bool operator==(const Word& x, const Word& y) { return x.n == y.n && x.gens == y.gens; }
};

/// Q-linear combination of words; ordinary words convert implicitly.
struct WordSum {
    int n = 0;
    std::vector<std::pair<Rational, Word>> terms;

    WordSum(const Word& w) : n(w.n), terms{{Rational(1), w}} {} // NOLINT(google-explicit-constructor)
    WordSum(Rational c, const Word& w) : n(w.n), terms{{std::move(c), w}} {}
    WordSum& operator+=(const WordSum& o);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }

    std::string str() const;
};

/// Matrix numerator plus tracked scalar denominator (the product of the
/// tr^{[n]-{iota}} factors contributed by LR generators; 1 otherwise).
struct RealizedWord {
    Mat<MultiPoly> num;
    MultiPoly den;
};

/// Ordered matrix product of the realized generators, built from the full lift
/// of s and certified independent of the strict-upper lift variables.
RealizedWord realize(const Word& w);
RealizedWord realize(const WordSum& ws);

enum class Twist { Det, DetInv };
std::string twist_name(Twist t);

/// Determinant semi-invariant: numerator polynomial with a tracked invariant
/// denominator, twisting by det (psi) or det^{-1} (phi) under the group action.
struct SemiInvariant {
    int n = 0;
    Twist twist = Twist::Det;
    std::vector<WordSum> words;
    MultiPoly poly; // numerator
    MultiPoly den;  // invariant denominator
    std::string name;
};

/// psi_f = det of the n x n matrix whose column k is realize(f_k) i.
SemiInvariant psi(const std::vector<WordSum>& words);
/// phi_g = det of the n x n matrix whose row k is j realize(g_k).
SemiInvariant phi(const std::vector<WordSum>& words);

/// Randomized-exact semi-invariance check at `trials` random (b, x): with
/// chi = det(b)^{+-1}, cross-multiplied num(b.x) den(x) = chi num(x) den(b.x).
/// Failures are recorded as data with the witnessing (b, x).
InvarianceCheck is_semi_invariant(const SemiInvariant& p, int trials, uint64_t seed);
/// Same check for a bare polynomial claimed to carry the given twist.
InvarianceCheck is_semi_invariant(const MultiPoly& p, Twist twist, const std::string& name, int n,
                                  int trials, uint64_t seed);

/// Random word of length 0..max_len over the four generator kinds.
Word random_word(Rng& rng, int n, int max_len);

/// Imbedding choice: r -> diag(a_1..a_n), s -> diag(b_1..b_n), and
/// (i, j) -> ((1..1), 0) for I0 or (0, (1..1)) for J0.
enum class EpsMap { I0, J0 };

/// Substitution homomorphism onto the torus variables a_m, b_m. Every variable
/// of p must be a phase-space coordinate with indices <= n.
MultiPoly restrict_poly(const MultiPoly& p, EpsMap which, int n);

struct RestrictedValue {
    MultiPoly num;
    MultiPoly den;
};

/// Tracked restriction; throws RestrictionError when the denominator dies
/// under the substitution.
RestrictedValue restrict_semi(const SemiInvariant& p, EpsMap which);

/// True iff q flips sign under every adjacent swap (a_m,b_m) <-> (a_{m+1},b_{m+1}).
/// q must live in the 2n torus variables.
bool is_alternating(const MultiPoly& q, int n);

/// Cross-multiplied alternation for tracked values: every adjacent swap tau
/// must satisfy tau(num) den = -num tau(den).
bool is_alternating(const RestrictedValue& q, int n);

/// Sign of a permutation of [n] given by its images perm[m-1], m = 1..n.
int perm_sign(const std::vector<int>& perm);

/// Substitute a_m -> a_{perm[m-1]}, b_m -> b_{perm[m-1]} in a torus polynomial.
MultiPoly permute_torus(const MultiPoly& q, const std::vector<int>& perm, int n);

/// Image of a generator under the relabeling m -> perm[m-1] of [n]: subset
/// labels map elementwise, ELL{J} -> ELL{perm J}, LR{iota} -> LR{perm iota}.
/// Guard atoms pin row n (resp. 1); relabelings that move the pinned row leave
/// the algebra and throw. Restriction is equivariant, not invariant, under
/// relabeling: permuting torus variables by sigma carries restrict(psi_f) to
/// sign(sigma) restrict(psi_{sigma f}).
Generator relabel(const Generator& g, const std::vector<int>& perm);
Word relabel(const Word& w, const std::vector<int>& perm);
WordSum relabel(const WordSum& ws, const std::vector<int>& perm);
std::vector<WordSum> relabel(const std::vector<WordSum>& words, const std::vector<int>& perm);

/// Sum of restrict(psi/phi of the relabeled tuple) over all n! relabelings.
/// By the equivariance law the orbit sum is S_n-alternating even when the
/// summand for the identity relabeling alone is not. Rejects tuples with guard
/// atoms (their pinned rows admit no relabeling).
RestrictedValue restrict_orbit_sum(const std::vector<WordSum>& words, Twist twist, EpsMap which);

/// Tuple f_k = sum_iota LR{iota}^{k-1}, k = 1..n: each entry restricts to
/// diag(a_m^{k-1}), so psi restricts to the Vandermonde determinant times its
/// tracked denominator.
std::vector<WordSum> vandermonde_tuple(int n);

/// Numerator of the torus value of word k at index m, by closed formulas (each
/// generator is diagonal on the torus). Restriction of psi/phi factors through
/// the determinant of this matrix: restrict(psi(f).poly, I0) = det(torus_matrix(f)).
Mat<MultiPoly> torus_matrix(const std::vector<WordSum>& words);

/// Top-level comma-separated word tuple, commas inside braces belonging to the
/// subset arguments: "1,ELL{1,3}*GUARDN{2}" parses as two words.
std::vector<WordSum> parse_word_tuple(int n, const std::string& spec);

} // namespace borel
