#pragma once

#include <string>
#include <vector>

#include "borel/multipoly.hpp"

namespace borel {

enum class OrderKind { Grevlex, Lex };

/// Monomial order over a fixed ambient variable list. The list must be
/// strictly increasing in the global variable order; earlier entries weigh
/// more. Both orders are total, multiplicative and have 1 minimal.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::vector<VarId> vars);
    static MonomialOrder grevlex(std::vector<VarId> vars) {
        return MonomialOrder(OrderKind::Grevlex, std::move(vars));
    }
    static MonomialOrder lex(std::vector<VarId> vars) {
        return MonomialOrder(OrderKind::Lex, std::move(vars));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<VarId>& vars() const { return vars_; }
    std::string name() const { return kind_ == OrderKind::Grevlex ? "grevlex" : "lex"; }
    /// Position in vars(), -1 when absent.
    int index_of(VarId v) const;

    bool less(const Monomial& x, const Monomial& y) const;

private:
    OrderKind kind_;
    std::vector<VarId> vars_;
};

/// Largest monomial of p under ord; p must be nonzero and supported on ord's
/// variables.
Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& ord);

/// Caps for Buchberger runs. Exhaustion raises CapExceededError ("incomplete"),
/// never a wrong basis. max_degree bounds the sugar degree of selected pairs.
struct GroebnerCaps {
    int max_degree = 48;
    double timeout_sec = 600.0;
    std::size_t max_basis = 4096;
};

struct CompleteIntersectionReport {
    bool complete_intersection = false;
    int ambient_dim = 0;
    int dimension = 0;
    int codimension = 0;
    std::size_t generators = 0;
};

/// Ideal of Q[vars] with a cached reduced Groebner basis.
class Ideal {
public:
    Ideal(std::vector<MultiPoly> gens, MonomialOrder order);

    const std::vector<MultiPoly>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    /// Reduced monic Groebner basis (cached after the first call), sorted by
    /// ascending leading monomial. Deterministic given the order.
    const std::vector<MultiPoly>& groebner(const GroebnerCaps& caps = {});
    bool basis_ready() const { return basis_ready_; }
    /// Adopt a precomputed basis (e.g. from a cache) after verifying that all
    /// S-polynomials reduce to zero and the generators are members; throws
    /// Error if the candidate fails verification.
    void install_basis(const std::vector<MultiPoly>& basis);

    std::vector<Monomial> leading_monomials(const GroebnerCaps& caps = {});
    /// Unique remainder of p modulo the reduced basis.
    MultiPoly normal_form(const MultiPoly& p, const GroebnerCaps& caps = {});
    bool contains(const MultiPoly& p, const GroebnerCaps& caps = {});

    /// Krull dimension of the quotient ring: the maximum size of a variable
    /// set not containing the support of any leading monomial (computed as
    /// vars minus a minimum hitting set, branch and bound). -1 when 1 lies in
    /// the ideal.
    int dimension(const GroebnerCaps& caps = {});
    /// codim = ambient - dimension; complete intersection iff codim equals the
    /// generator count.
    CompleteIntersectionReport complete_intersection(const GroebnerCaps& caps = {});

private:
    std::vector<MultiPoly> gens_;
    MonomialOrder order_;
    std::vector<MultiPoly> basis_;
    bool basis_ready_ = false;
};

/// Checks that `basis` is a Groebner basis whose ideal contains `gens`: every
/// S-polynomial of basis pairs reduces to zero and every generator has normal
/// form zero. (The reverse containment is not re-proved; caches produced by
/// this library satisfy it by construction.)
bool verify_groebner(const std::vector<MultiPoly>& basis, const std::vector<MultiPoly>& gens,
                     const MonomialOrder& order);

} // namespace borel
