#pragma once

#include <memory>

#include "cocontra/coalg.hpp"
#include "cocontra/homcx.hpp"

namespace cocontra {

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

enum class Side { left, right };

/// Finite-dimensional comodule. Shapes are validated at construction;
/// check_comodule decides the axioms.
struct Comodule {
    CoalgebraPtr coalgebra;
    VecSpace space;
    LinMap coaction;  // left: M -> C (x) M,  right: N -> N (x) C
    Side side;

    Comodule(CoalgebraPtr c, VecSpace sp, LinMap co, Side s);
};

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b);

AxiomWitness check_comodule(const Comodule& m);

Comodule cofree(const CoalgebraPtr& c, const VecSpace& v);        // left: C (x) V
Comodule cofree_right(const CoalgebraPtr& c, const VecSpace& v);  // right: V (x) C
Comodule regular_left(const CoalgebraPtr& c);
Comodule regular_right(const CoalgebraPtr& c);
/// Trivial comodule on V through the coaugmentation (throws if absent).
Comodule trivial_left(const CoalgebraPtr& c, const VecSpace& v);
Comodule trivial_right(const CoalgebraPtr& c, const VecSpace& v);

Comodule sub_comodule(const Comodule& m, const SubSpace& s);
Comodule quotient_comodule(const Comodule& m, const QuotSpace& q);
Comodule direct_sum(const Comodule& a, const Comodule& b);

struct ComoduleHoms {
    VecSpace space;
    std::vector<LinMap> basis;
};

ComoduleHoms comodule_hom(const Comodule& m, const Comodule& n);

/// Cotensor product N \square_C M as a subspace of N (x) M.
SubSpace cotensor(const Comodule& n_right, const Comodule& m_left);

/// Split of the coaction embedding when the comodule is injective.
std::optional<LinMap> injectivity_split(const Comodule& m);

struct CapExceeded : std::runtime_error {
    int last_dim;
    explicit CapExceeded(const std::string& what, int d) : std::runtime_error(what), last_dim(d) {}
};

/// 0 -> M -> J^0 -> J^1 -> ... exact with cofree terms, built from the
/// coaction embedding into the cofree hull. The final term may instead be an
/// injective cokernel (split certificate recorded); in particular cofree and
/// injective comodules coresolve in length zero.
struct Coresolution {
    Complex complex;      // the J-terms in degrees 0..len
    LinMap augmentation;  // M -> J^0
    std::vector<Comodule> terms;
    bool final_term_split = false;
    int length() const { return complex.empty() ? -1 : complex.hi(); }
};

Coresolution injective_coresolution(const Comodule& m, int cap);

/// TermStructure implementation for decorated complexes of comodules.
class ComodTag : public TermStructure {
  public:
    explicit ComodTag(Comodule m) : m_(std::move(m)) {}
    std::string kind() const override { return m_.side == Side::left ? "comodule-left" : "comodule-right"; }
    bool morphism_to(const TermStructure& next, const LinMap& f) const override;
    const Comodule& comodule() const { return m_; }

  private:
    Comodule m_;
};

}  // namespace cocontra
