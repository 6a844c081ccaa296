#pragma once

#include <map>
#include <memory>
#include <string>

#include "cocontra/exactlin.hpp"

namespace cocontra {

/// Structure tag carried by a decorated complex term. Implementations live in
/// the comodule/contramodule modules; the complex only needs to ask whether a
/// differential is structure-preserving.
class TermStructure {
  public:
    virtual ~TermStructure() = default;
    virtual std::string kind() const = 0;
    virtual bool morphism_to(const TermStructure& next, const LinMap& f) const = 0;
};

using TermStructurePtr = std::shared_ptr<const TermStructure>;

/// Bounded cochain complex (differential raises degree by one). d.d = 0 and
/// decoration compatibility are validated at construction.
class Complex {
  public:
    explicit Complex(Field f) : field_(f) {}
    Complex(Field f, std::map<int, VecSpace> terms, std::map<int, LinMap> diffs,
            std::map<int, TermStructurePtr> decorations = {});

    Field field() const { return field_; }
    bool empty() const { return terms_.empty(); }
    int lo() const;
    int hi() const;
    const std::map<int, VecSpace>& terms() const { return terms_; }

    VecSpace term(int i) const;  // zero space when absent
    LinMap diff(int i) const;    // zero map when absent
    bool has_term(int i) const { return terms_.count(i) > 0; }
    TermStructurePtr decoration(int i) const;

    long long euler_char() const;

  private:
    Field field_;
    std::map<int, VecSpace> terms_;
    std::map<int, LinMap> diffs_;
    std::map<int, TermStructurePtr> decor_;
};

struct ChainMap {
    Complex source, target;
    std::map<int, LinMap> components;  // missing component = zero map

    ChainMap(Complex src, Complex tgt, std::map<int, LinMap> comps);
    LinMap component(int i) const;
};

/// Homology with representative bookkeeping: `reps` columns are cycle
/// representatives of the basis of `space`, and project() maps any cycle
/// (column in term coordinates) to homology coordinates.
struct HomologyData {
    VecSpace space;
    Mat cycle_basis;  // term-dim x z
    LinMap quot;      // z-dim span -> homology space
    Mat reps;         // term-dim x dim H

    Mat project(const Mat& cycles) const;
};

HomologyData homology_data(const Complex& x, int degree);
VecSpace homology(const Complex& x, int degree);

Complex cone(const ChainMap& f);
Complex shift(const Complex& x, int n);
Complex direct_sum(const Complex& x, const Complex& y);

struct QuasiIsoWitness {
    bool ok = true;
    int degree = 0;        // first failing degree when !ok
    int ker_defect = 0;    // dim kernel of induced map there
    int coker_defect = 0;  // dim cokernel of induced map there
};

QuasiIsoWitness is_quasi_iso(const ChainMap& f);

/// Canonical truncation; requires homology of x to vanish outside [lo, hi].
Complex truncate_support(const Complex& x, int lo, int hi);

bool is_exact(const Complex& x);

}  // namespace cocontra
