#pragma once

#include "cocontra/comod.hpp"

namespace cocontra {

/// Left contramodule: P with contraaction Hom_k(C, P) -> P, contraassociative
/// for the currying convention Hom(V, Hom(U, W)) = Hom(U (x) V, W) fixed in
/// exactlin (the other convention would give right contramodules).
struct Contramodule {
    CoalgebraPtr coalgebra;
    VecSpace space;       // P
    LinMap contraaction;  // Hom(C, P) -> P

    Contramodule(CoalgebraPtr c, VecSpace sp, LinMap pi);
};

AxiomWitness check_contramodule(const Contramodule& p);

/// Hom_k(C, V) with the contraaction induced by the comultiplication.
Contramodule free_contra(const CoalgebraPtr& c, const VecSpace& v);

/// Hom_k(N, V) for a right comodule N: contraaction through the right
/// coaction, as in the paper.
Contramodule contra_from_dual(const Comodule& n_right, const VecSpace& v);

/// Trivial contramodule on V through the coaugmentation.
Contramodule trivial_contra(const CoalgebraPtr& c, const VecSpace& v);

Contramodule sub_contramodule(const Contramodule& p, const SubSpace& s);
Contramodule direct_sum(const Contramodule& a, const Contramodule& b);

/// The induced C^dual-module structure; the action matrix is the contraaction
/// matrix under the canonical identification C^dual (x) P = Hom_k(C, P).
struct ContraAsModule {
    Algebra algebra;
    LinMap action;  // A (x) P -> P
};
ContraAsModule contramodule_as_module(const Contramodule& p);

/// Contratensor product N (.)_C P as a quotient of N (x) P.
QuotSpace contratensor(const Comodule& n_right, const Contramodule& p);

struct AdjunctionReport {
    bool ok = false;
    int lhs_dim = 0;  // dim Hom_k(N (.) P, V)
    int rhs_dim = 0;  // dim Hom^C(P, Hom_k(N, V))
    bool natural_map_bijective = false;
    bool module_tensor_surjects = false;  // N (x)_{C^dual} P ->> N (.)_C P
    int module_tensor_dim = 0;
};

/// Verifies Hom_k(N (.)_C P, V) = Hom^C(P, Hom_k(N, V)) by an explicit
/// bijection, and the natural surjection N (x)_{C^dual} P -> N (.)_C P.
AdjunctionReport adjunction_check(const Comodule& n_right, const Contramodule& p, const VecSpace& v);

struct ContraHoms {
    VecSpace space;
    std::vector<LinMap> basis;
};
ContraHoms contra_hom(const Contramodule& p, const Contramodule& q);

/// Module tensor product N (x)_{C^dual} P as a quotient of N (x) P.
QuotSpace module_tensor(const Comodule& n_right, const Contramodule& p);

/// Right action of the dual algebra on a right comodule: n.f = (id (x) f) nu(n).
LinMap dual_right_action(const Comodule& n_right, int dual_basis_index);

/// TermStructure implementation for decorated complexes of contramodules.
class ContraTag : public TermStructure {
  public:
    explicit ContraTag(Contramodule p) : p_(std::move(p)) {}
    std::string kind() const override { return "contramodule-left"; }
    bool morphism_to(const TermStructure& next, const LinMap& f) const override;
    const Contramodule& contramodule() const { return p_; }

  private:
    Contramodule p_;
};

/// g: P -> Q is a contramodule morphism.
bool is_contra_morphism(const Contramodule& p, const Contramodule& q, const LinMap& g);

}  // namespace cocontra
