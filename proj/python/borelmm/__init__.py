"""Exact symbolic toolkit for the Borel moment map [r, s] + ij.

Thin wrapper over the compiled `_core` extension: the core speaks JSON
strings, this package converts to and from plain dicts/lists. All arithmetic
is exact; rationals travel as "p/q" strings.
"""

import json as _json

from borelmm import _core

__version__ = "0.1.0"

__all__ = [
    "moment_system",
    "families",
    "verify_invariants",
    "unique_lift",
    "sample_component",
    "semi_invariant",
    "check_semi_invariant",
    "restrict",
    "groebner",
    "singular_dimension",
    "one_param_limit",
]


def moment_system(n, flavor="borel"):
    """Moment-map entries (gamma, nu) and ambient coordinates.

    `flavor` is "borel" (lower-triangle entries, n(n+1)/2 equations) or
    "general" (all n^2 entries). Returns a dict with keys `n`, `flavor`,
    `ambient_vars` and `entries`; each entry carries its polynomial.
    """
    return _json.loads(_core.moment_system(n, flavor))


def families(n):
    """All invariant family members f_J, g_J, h_iota, k_{n,J}, l_{J,1}.

    Returns a list of dicts with `name`, `kind`, `poly`, `den` and
    `certified` (False exactly for the g_J that depend on the lift).
    """
    return _json.loads(_core.families(n))


def verify_invariants(n, trials=24, seed=2026):
    """Randomized-exact invariance check for every family member.

    Uncertified g_J are reported with status "skipped"; failures carry the
    witnessing counterexample. Returns a list of per-member records.
    """
    return _json.loads(_core.verify_invariants(n, trials, seed))


def unique_lift(r_diag, s_diag, i, j):
    """The unique s with the given diagonal solving [diag(r), s] + ij = 0.

    Arguments are lists of rationals ("p/q" strings or ints). Raises
    ValueError on repeated r-eigenvalues or when some i_a * j_a != 0.
    Returns the full matrix as rows of "p/q" strings.
    """

    def enc(v):
        return _json.dumps([str(x) for x in v])

    return _json.loads(_core.unique_lift(enc(r_diag), enc(s_diag), enc(i), enc(j)))


def sample_component(n, ell, seed=2026):
    """Random point of the ell-th component of the zero fiber.

    Returns the quadruple, the moment values at it, and `on_fiber`.
    """
    return _json.loads(_core.sample_component(n, ell, seed))


def semi_invariant(n, words, twist="det"):
    """psi_f (twist "det") or phi_g (twist "det-inv") for a word tuple.

    `words` is the comma-separated tuple syntax, e.g. "1,ELL{1}" or
    "1,ELL{1,3}*GUARDN{2}". Returns `name`, `num`, `den`.
    """
    return _json.loads(_core.semi_invariant(n, words, twist))


def check_semi_invariant(n, words, twist="det", trials=24, seed=2026):
    """Randomized-exact check of the det^{+-1} twist law for psi/phi."""
    return _json.loads(_core.check_semi_invariant(n, words, twist, trials, seed))


def restrict(n, words, twist="det"):
    """Torus restriction of psi/phi under the standard imbedding.

    Returns the tracked value (`num`, `den`), whether the raw numerator is
    S_n-alternating, whether it equals the torus determinant factorization,
    and the relabeling orbit sum with its alternation flag (`orbit` is None
    when the tuple contains guard atoms, whose pinned rows admit no
    relabeling).
    """
    return _json.loads(_core.restrict(n, words, twist))


def groebner(n, order="grevlex", max_degree=0, timeout_sec=0.0, max_basis=0):
    """Groebner basis of the moment ideal with the dimension report.

    Zero caps keep the built-in defaults. Raises RuntimeError when a cap is
    exceeded. Returns dimension, codimension, ambient dimension, the
    complete-intersection flag, and the basis size.
    """
    return _json.loads(_core.groebner(n, order, max_degree, timeout_sec, max_basis))


def singular_dimension(n, order="grevlex"):
    """Dimension of the locus where the moment Jacobian drops rank."""
    return _core.singular_dimension(n, order)


def one_param_limit(n, label, target):
    """Limit at t -> 0 of the subgroup `label` acting on symbolic r or s.

    `label` is "lambda", "lambda1" or "lambda2"; `target` is "r" or "s".
    """
    return _json.loads(_core.one_param_limit(n, label, target))
