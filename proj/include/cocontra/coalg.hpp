#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cocontra/exactlin.hpp"
#include "cocontra/groups.hpp"

namespace cocontra {

/// Coassociative counital coalgebra with optional coaugmentation. The
/// constructor validates shapes only; check_coalgebra decides the axioms, so
/// deliberately broken instances can be built for mutation testing.
struct Coalgebra {
    VecSpace space;                      // C
    LinMap comult;                       // C -> C (x) C
    LinMap counit;                       // C -> k
    std::optional<LinMap> coaugmentation;  // k -> C

    Coalgebra(VecSpace sp, LinMap cm, LinMap cu, std::optional<LinMap> ca = std::nullopt);

    Field field() const { return space.field; }
    int dim() const { return space.dim(); }
    const VecSpace& unit_line() const { return counit.codomain; }
};

enum class AlgebraRole { dual_of_coalgebra, iwasawa_truncation, endomorphism_ring };

struct Algebra {
    VecSpace space;
    LinMap mult;  // A (x) A -> A
    LinMap unit;  // k -> A
    AlgebraRole role = AlgebraRole::dual_of_coalgebra;

    Field field() const { return space.field; }
    int dim() const { return space.dim(); }
};

struct AxiomWitness {
    bool ok = true;
    std::string axiom;    // failing axiom name when !ok
    int basis_index = 0;  // basis element where the matrices differ
};

AxiomWitness check_coalgebra(const Coalgebra& c);
AxiomWitness check_algebra(const Algebra& a);

/// Unit-line plumbing: k (x) V -> V and V (x) k -> V as relabeling maps.
LinMap left_unitor(const VecSpace& line, const VecSpace& v);
LinMap right_unitor(const VecSpace& v, const VecSpace& line);

/// Dual algebra of a checked coalgebra. The product is oriented so that left
/// comodules and left contramodules become left modules:
/// (f.g)(c) = sum g(c_(1)) f(c_(2)).
Algebra dual_algebra(const Coalgebra& c);

/// k(Gamma) with delta-function basis; coaugmentation attached iff conilpotent.
Coalgebra group_function_coalgebra(const FiniteGroup& g, Field k);

struct ConilpotencyResult {
    bool conilpotent = false;
    bool has_coaugmentation = false;
    LinMap coaugmentation;           // valid when has_coaugmentation
    std::vector<SubSpace> filtration;  // kernels of iterated comultiplication inside C_+
    std::vector<Mat> grouplikes;     // all x with Delta x = x (x) x, eps x = 1
};

/// Decide conilpotency by filtration stabilization. When no coaugmentation is
/// supplied, searches for grouplike elements exhaustively (prime fields only).
ConilpotencyResult is_conilpotent(const Coalgebra& c);

/// H^1(C) = ker(C_+ -> C_+ (x) C_+) for conilpotent C; throws otherwise.
VecSpace cogenerator_space(const Coalgebra& c);
SubSpace cogenerator_subspace(const Coalgebra& c);  // with inclusion into C

/// Irreducible comodule descriptor (kept free of the comodule module to avoid
/// a dependency cycle; comod wraps these into Comodule values).
struct IrreducibleDescriptor {
    VecSpace space;
    LinMap coaction;  // left coaction V -> C (x) V
    int multiplicity = 0;
};

struct NonSplitWitness {
    VecSpace ambient;
    LinMap ambient_coaction;
    Mat sub_basis;  // columns span a subcomodule with no complement
};

struct CosemisimpleResult {
    bool ok = false;
    std::vector<IrreducibleDescriptor> irreducibles;
    std::optional<NonSplitWitness> witness;
};

CosemisimpleResult cosemisimple_decomposition(const Coalgebra& c);

// --- shared structure-system helpers -------------------------------------

/// Materialize a linear operator on hom spaces by evaluating it on the
/// elementary basis maps.
LinMap materialize_operator(const VecSpace& src_dom, const VecSpace& src_cod,
                            const VecSpace& dst_dom, const VecSpace& dst_cod,
                            const std::function<LinMap(const LinMap&)>& op);

/// Basis of {phi: V -> W | (id_C (x) phi) . nu_V = nu_W . phi}, i.e. morphisms
/// of left comodules given raw coactions.
std::vector<LinMap> left_comodule_morphisms(const Coalgebra& c, const VecSpace& v,
                                            const LinMap& nu_v, const VecSpace& w,
                                            const LinMap& nu_w);

/// Smallest subcomodule of (v, nu) containing the given vectors.
SubSpace generated_subcomodule(const Coalgebra& c, const VecSpace& v, const LinMap& nu,
                               const Mat& vectors);

/// Coaction induced on a subcomodule / quotient comodule.
LinMap restrict_coaction(const Coalgebra& c, const LinMap& nu, const SubSpace& sub);
LinMap quotient_coaction(const Coalgebra& c, const LinMap& nu, const QuotSpace& quot);

}  // namespace cocontra
