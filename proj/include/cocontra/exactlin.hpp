#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocontra/field.hpp"

namespace cocontra {

/// Dense matrix with exact entries: canonical residues for F_p, gmp rationals
/// for characteristic 0.
class Mat {
  public:
    Mat() : fld_{0}, rows_(0), cols_(0) {}
    Mat(Field f, int rows, int cols);

    static Mat identity(Field f, int n);
    static Mat from_rows(Field f, const std::vector<std::vector<long long>>& rows);

    Field field() const { return fld_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, long long v);
    void set_rat(int i, int j, const Rat& v);
    long long get_int(int i, int j) const;
    Rat get_rat(int i, int j) const;
    bool entry_zero(int i, int j) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(long long c) const;
    Mat negated() const;
    Mat transpose() const;

    /// Kronecker product; row/column order is lexicographic with the left
    /// factor major, matching tensor_space.
    Mat kron(const Mat& o) const;

    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    Mat cols_selected(const std::vector<int>& idx) const;
    Mat rows_selected(const std::vector<int>& idx) const;

    struct Ech;  // defined after the class
    Ech echelon() const;
    int rank() const;

    /// Basis of the null space as matrix columns. Deterministic: one column
    /// per free variable in increasing column order, free entry set to 1.
    Mat kernel_basis() const;

    /// Particular solution of A X = B with free variables set to zero, or
    /// nullopt when some column of B is outside the column space.
    std::optional<Mat> solve(const Mat& B) const;

  private:
    Field fld_;
    int rows_, cols_;
    std::vector<long long> vi_;  // ch > 0
    std::vector<Rat> vq_;        // ch == 0
    size_t at(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
    void check_range(int i, int j) const;
};

struct Mat::Ech {
    Mat rref;
    std::vector<int> pivots;  // pivot column per nonzero row
    int rank = 0;
};

/// Finite-dimensional vector space with named basis.
struct VecSpace {
    Field field;
    std::vector<std::string> basis_labels;

    VecSpace() : field{0} {}
    VecSpace(Field f, std::vector<std::string> labels);

    int dim() const { return static_cast<int>(basis_labels.size()); }
    bool operator==(const VecSpace& o) const;
};

VecSpace make_space(Field f, int dim, const std::string& prefix);
VecSpace tensor_space(const VecSpace& v, const VecSpace& w);
VecSpace dual_space(const VecSpace& v);

/// Space of linear maps M -> N with elementary-matrix basis. Coordinates are
/// domain-major: flat index j*dim(N)+i is the map sending basis j of M to
/// basis i of N.
VecSpace hom_space(const VecSpace& m, const VecSpace& n);

struct LinMap {
    VecSpace domain, codomain;
    Mat matrix;  // codomain.dim() x domain.dim()

    LinMap() = default;
    LinMap(VecSpace dom, VecSpace cod, Mat m);
};

LinMap identity_map(const VecSpace& v);
LinMap zero_map(const VecSpace& dom, const VecSpace& cod);
LinMap compose(const LinMap& g, const LinMap& f);  // g after f
LinMap add(const LinMap& f, const LinMap& g);
LinMap sub(const LinMap& f, const LinMap& g);
bool same_arrow(const LinMap& f, const LinMap& g);

int rank(const LinMap& f);

struct SubSpace {
    VecSpace space;
    LinMap incl;  // space -> ambient
};
struct QuotSpace {
    VecSpace space;
    LinMap proj;  // ambient -> space
};

SubSpace kernel(const LinMap& f);
SubSpace image(const LinMap& f);
QuotSpace cokernel(const LinMap& f);

/// Column-span subspace of `ambient` spanned by the columns of gens.
SubSpace span_subspace(const VecSpace& ambient, const Mat& gens, const std::string& prefix);
/// Quotient of `ambient` by the column span of rels.
QuotSpace quotient_by(const VecSpace& ambient, const Mat& rels, const std::string& prefix);

LinMap tensor(const LinMap& f, const LinMap& g);
LinMap dual_map(const LinMap& f);

std::optional<Mat> solve(const LinMap& f, const Mat& target);

// Hom-space plumbing. All identifications below are fixed once and reused by
// every module; in particular the currying convention
//   Hom(V, Hom(U, W)) = Hom(U (x) V, W),   phi |-> Phi,  Phi(u (x) v) = phi(v)(u),
// which is the left-contramodule convention.
Mat hom_vec(const LinMap& f);
LinMap hom_from_vec(const VecSpace& m, const VecSpace& n, const Mat& col);
LinMap hom_map(const LinMap& f, const LinMap& g);  // Hom(B,C) -> Hom(A,D), phi -> g.phi.f  (f: A->B, g: C->D)
LinMap uncurry_map(const VecSpace& u, const VecSpace& v, const VecSpace& w);  // Hom(V,Hom(U,W)) -> Hom(U(x)V, W)
LinMap curry_map(const VecSpace& u, const VecSpace& v, const VecSpace& w);    // inverse of uncurry_map
LinMap eval_map(const VecSpace& u, const VecSpace& w);  // U (x) Hom(U,W) -> W

/// V -> Hom(k-ish 1-dim U, ...) helpers used by counit-style maps: the map
/// W -> Hom(U, W) induced by a functional e: U -> k (w |-> (u |-> e(u) w)).
LinMap functional_insert(const LinMap& e, const VecSpace& w);

/// Tensor-factor swap A (x) B -> B (x) A.
LinMap flip_map(const VecSpace& a, const VecSpace& b);

}  // namespace cocontra
