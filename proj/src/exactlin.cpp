#include "cocontra/exactlin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cocontra {

// ---------------------------------------------------------------------------
// field-generic elimination kernels

namespace {

struct OpsP {
    long long p;
    using E = long long;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return mod_add(a, b, p); }
    E sub(E a, E b) const { return mod_sub(a, b, p); }
    E mul(E a, E b) const { return mod_mul(a, b, p); }
    E inv(E a) const { return mod_inv(a, p); }
    E neg(E a) const { return mod_reduce(-a, p); }
    bool is_zero(E a) const { return a == 0; }
};

struct OpsQ {
    using E = Rat;
    E zero() const { return Rat(0); }
    E one() const { return Rat(1); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E inv(const E& a) const { return Rat(1) / a; }
    E neg(const E& a) const { return -a; }
    bool is_zero(const E& a) const { return a == 0; }
};

template <class Ops>
void t_mul(const Ops& ops, const std::vector<typename Ops::E>& a, int ar, int ac,
           const std::vector<typename Ops::E>& b, int bc, std::vector<typename Ops::E>& out) {
    out.assign(static_cast<size_t>(ar) * bc, ops.zero());
    for (int i = 0; i < ar; ++i)
        for (int k = 0; k < ac; ++k) {
            const auto& aik = a[static_cast<size_t>(i) * ac + k];
            if (ops.is_zero(aik)) continue;
            for (int j = 0; j < bc; ++j) {
                const auto& bkj = b[static_cast<size_t>(k) * bc + j];
                if (ops.is_zero(bkj)) continue;
                auto& o = out[static_cast<size_t>(i) * bc + j];
                o = ops.add(o, ops.mul(aik, bkj));
            }
        }
}

// In-place reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<int> t_rref(const Ops& ops, std::vector<typename Ops::E>& m, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!ops.is_zero(m[static_cast<size_t>(i) * cols + c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m[static_cast<size_t>(sel) * cols + j], m[static_cast<size_t>(r) * cols + j]);
        auto piv_inv = ops.inv(m[static_cast<size_t>(r) * cols + c]);
        for (int j = c; j < cols; ++j)
            m[static_cast<size_t>(r) * cols + j] = ops.mul(m[static_cast<size_t>(r) * cols + j], piv_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto f = m[static_cast<size_t>(i) * cols + c];
            if (ops.is_zero(f)) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<size_t>(i) * cols + j] = ops.sub(
                    m[static_cast<size_t>(i) * cols + j], ops.mul(f, m[static_cast<size_t>(r) * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(Field f, int rows, int cols) : fld_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    if (fld_.ch > 0)
        vi_.assign(static_cast<size_t>(rows) * cols, 0);
    else
        vq_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Mat Mat::identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Mat::check_range(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat: index out of range");
}

void Mat::set(int i, int j, long long v) {
    check_range(i, j);
    if (fld_.ch > 0)
        vi_[at(i, j)] = mod_reduce(v, fld_.ch);
    else
        vq_[at(i, j)] = Rat(static_cast<long>(v));
}

void Mat::set_rat(int i, int j, const Rat& v) {
    check_range(i, j);
    if (fld_.ch > 0) throw std::logic_error("set_rat on a prime-field matrix");
    vq_[at(i, j)] = v;
    vq_[at(i, j)].canonicalize();
}

long long Mat::get_int(int i, int j) const {
    check_range(i, j);
    if (fld_.ch == 0) throw std::logic_error("get_int on a rational matrix");
    return vi_[at(i, j)];
}

Rat Mat::get_rat(int i, int j) const {
    check_range(i, j);
    return fld_.ch > 0 ? Rat(static_cast<long>(vi_[at(i, j)])) : vq_[at(i, j)];
}

bool Mat::entry_zero(int i, int j) const {
    check_range(i, j);
    return fld_.ch > 0 ? vi_[at(i, j)] == 0 : vq_[at(i, j)] == 0;
}

bool Mat::is_zero() const {
    if (fld_.ch > 0) return std::all_of(vi_.begin(), vi_.end(), [](long long v) { return v == 0; });
    return std::all_of(vq_.begin(), vq_.end(), [](const Rat& v) { return v == 0; });
}

bool Mat::operator==(const Mat& o) const {
    if (!(fld_ == o.fld_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return fld_.ch > 0 ? vi_ == o.vi_ : vq_ == o.vq_;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_field(fld_, o.fld_, "Mat+");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r(fld_, rows_, cols_);
    if (fld_.ch > 0)
        for (size_t k = 0; k < vi_.size(); ++k) r.vi_[k] = mod_add(vi_[k], o.vi_[k], fld_.ch);
    else
        for (size_t k = 0; k < vq_.size(); ++k) r.vq_[k] = vq_[k] + o.vq_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_field(fld_, o.fld_, "Mat-");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
    Mat r(fld_, rows_, cols_);
    if (fld_.ch > 0)
        for (size_t k = 0; k < vi_.size(); ++k) r.vi_[k] = mod_sub(vi_[k], o.vi_[k], fld_.ch);
    else
        for (size_t k = 0; k < vq_.size(); ++k) r.vq_[k] = vq_[k] - o.vq_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    require_same_field(fld_, o.fld_, "Mat*");
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(fld_, rows_, o.cols_);
    if (fld_.ch > 0)
        t_mul(OpsP{fld_.ch}, vi_, rows_, cols_, o.vi_, o.cols_, r.vi_);
    else
        t_mul(OpsQ{}, vq_, rows_, cols_, o.vq_, o.cols_, r.vq_);
    return r;
}

Mat Mat::scaled(long long c) const {
    Mat r(fld_, rows_, cols_);
    if (fld_.ch > 0) {
        long long cc = mod_reduce(c, fld_.ch);
        for (size_t k = 0; k < vi_.size(); ++k) r.vi_[k] = mod_mul(vi_[k], cc, fld_.ch);
    } else {
        Rat rc(static_cast<long>(c));
        for (size_t k = 0; k < vq_.size(); ++k) r.vq_[k] = vq_[k] * rc;
    }
    return r;
}

Mat Mat::negated() const { return scaled(-1); }

Mat Mat::transpose() const {
    Mat r(fld_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(j) * rows_ + i] = vi_[at(i, j)];
            else
                r.vq_[static_cast<size_t>(j) * rows_ + i] = vq_[at(i, j)];
        }
    return r;
}

Mat Mat::kron(const Mat& o) const {
    require_same_field(fld_, o.fld_, "kron");
    Mat r(fld_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (entry_zero(i, j)) continue;
            for (int i2 = 0; i2 < o.rows_; ++i2)
                for (int j2 = 0; j2 < o.cols_; ++j2) {
                    int ri = i * o.rows_ + i2, rj = j * o.cols_ + j2;
                    if (fld_.ch > 0)
                        r.vi_[static_cast<size_t>(ri) * r.cols_ + rj] =
                            mod_mul(vi_[at(i, j)], o.vi_[o.at(i2, j2)], fld_.ch);
                    else
                        r.vq_[static_cast<size_t>(ri) * r.cols_ + rj] = vq_[at(i, j)] * o.vq_[o.at(i2, j2)];
                }
        }
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    require_same_field(fld_, o.fld_, "hstack");
    if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
    Mat r(fld_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(i) * r.cols_ + j] = vi_[at(i, j)];
            else
                r.vq_[static_cast<size_t>(i) * r.cols_ + j] = vq_[at(i, j)];
        for (int j = 0; j < o.cols_; ++j)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(i) * r.cols_ + cols_ + j] = o.vi_[o.at(i, j)];
            else
                r.vq_[static_cast<size_t>(i) * r.cols_ + cols_ + j] = o.vq_[o.at(i, j)];
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    require_same_field(fld_, o.fld_, "vstack");
    if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
    Mat r(fld_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(i) * cols_ + j] = vi_[at(i, j)];
            else
                r.vq_[static_cast<size_t>(i) * cols_ + j] = vq_[at(i, j)];
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(rows_ + i) * cols_ + j] = o.vi_[o.at(i, j)];
            else
                r.vq_[static_cast<size_t>(rows_ + i) * cols_ + j] = o.vq_[o.at(i, j)];
    return r;
}

Mat Mat::cols_selected(const std::vector<int>& idx) const {
    Mat r(fld_, rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(i) * r.cols_ + j] = vi_[at(i, idx[j])];
            else
                r.vq_[static_cast<size_t>(i) * r.cols_ + j] = vq_[at(i, idx[j])];
    return r;
}

Mat Mat::rows_selected(const std::vector<int>& idx) const {
    Mat r(fld_, static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
        for (int j = 0; j < cols_; ++j)
            if (fld_.ch > 0)
                r.vi_[static_cast<size_t>(i) * cols_ + j] = vi_[at(idx[i], j)];
            else
                r.vq_[static_cast<size_t>(i) * cols_ + j] = vq_[at(idx[i], j)];
    return r;
}

Mat::Ech Mat::echelon() const {
    Ech e;
    e.rref = *this;
    if (fld_.ch > 0)
        e.pivots = t_rref(OpsP{fld_.ch}, e.rref.vi_, rows_, cols_);
    else
        e.pivots = t_rref(OpsQ{}, e.rref.vq_, rows_, cols_);
    e.rank = static_cast<int>(e.pivots.size());
    return e;
}

int Mat::rank() const { return echelon().rank; }

Mat Mat::kernel_basis() const {
    Ech e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(fld_, cols_, static_cast<int>(free_cols.size()));
    for (int jj = 0; jj < static_cast<int>(free_cols.size()); ++jj) {
        int fc = free_cols[jj];
        k.set(fc, jj, 1);
        for (int r = 0; r < e.rank; ++r) {
            int pc = e.pivots[r];
            if (fld_.ch > 0)
                k.vi_[static_cast<size_t>(pc) * k.cols_ + jj] =
                    mod_reduce(-e.rref.vi_[e.rref.at(r, fc)], fld_.ch);
            else
                k.vq_[static_cast<size_t>(pc) * k.cols_ + jj] = -e.rref.vq_[e.rref.at(r, fc)];
        }
    }
    return k;
}

std::optional<Mat> Mat::solve(const Mat& B) const {
    require_same_field(fld_, B.fld_, "solve");
    if (B.rows_ != rows_) throw std::invalid_argument("solve: dimension mismatch");
    Mat aug = hstack(B);
    Ech e = aug.echelon();
    // any pivot in the B block means inconsistency
    for (int c : e.pivots)
        if (c >= cols_) return std::nullopt;
    Mat x(fld_, cols_, B.cols_);
    for (int r = 0; r < e.rank; ++r) {
        int pc = e.pivots[r];
        for (int j = 0; j < B.cols_; ++j) {
            if (fld_.ch > 0)
                x.vi_[static_cast<size_t>(pc) * x.cols_ + j] = e.rref.vi_[e.rref.at(r, cols_ + j)];
            else
                x.vq_[static_cast<size_t>(pc) * x.cols_ + j] = e.rref.vq_[e.rref.at(r, cols_ + j)];
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// VecSpace / LinMap

VecSpace::VecSpace(Field f, std::vector<std::string> labels) : field(f), basis_labels(std::move(labels)) {
    std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
    if (seen.size() != basis_labels.size()) throw std::invalid_argument("VecSpace: duplicate basis labels");
}

bool VecSpace::operator==(const VecSpace& o) const {
    return field == o.field && basis_labels == o.basis_labels;
}

VecSpace make_space(Field f, int dim, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
    return VecSpace(f, std::move(labels));
}

VecSpace tensor_space(const VecSpace& v, const VecSpace& w) {
    require_same_field(v.field, w.field, "tensor_space");
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(v.dim()) * w.dim());
    for (const auto& a : v.basis_labels)
        for (const auto& b : w.basis_labels) labels.push_back(a + "*" + b);
    return VecSpace(v.field, std::move(labels));
}

VecSpace dual_space(const VecSpace& v) {
    std::vector<std::string> labels;
    labels.reserve(v.basis_labels.size());
    for (const auto& a : v.basis_labels) labels.push_back(a + "^");
    return VecSpace(v.field, std::move(labels));
}

VecSpace hom_space(const VecSpace& m, const VecSpace& n) {
    require_same_field(m.field, n.field, "hom_space");
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m.dim()) * n.dim());
    for (const auto& a : m.basis_labels)
        for (const auto& b : n.basis_labels) labels.push_back(a + ">" + b);
    return VecSpace(m.field, std::move(labels));
}

LinMap::LinMap(VecSpace dom, VecSpace cod, Mat m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    require_same_field(domain.field, codomain.field, "LinMap");
    require_same_field(domain.field, matrix.field(), "LinMap");
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
        throw std::invalid_argument("LinMap: matrix shape does not match spaces");
}

LinMap identity_map(const VecSpace& v) { return LinMap(v, v, Mat::identity(v.field, v.dim())); }

LinMap zero_map(const VecSpace& dom, const VecSpace& cod) {
    return LinMap(dom, cod, Mat(dom.field, cod.dim(), dom.dim()));
}

LinMap compose(const LinMap& g, const LinMap& f) {
    if (!(f.codomain == g.domain)) throw std::invalid_argument("compose: middle space mismatch");
    return LinMap(f.domain, g.codomain, g.matrix * f.matrix);
}

LinMap add(const LinMap& f, const LinMap& g) {
    if (!(f.domain == g.domain) || !(f.codomain == g.codomain))
        throw std::invalid_argument("add: arrow mismatch");
    return LinMap(f.domain, f.codomain, f.matrix + g.matrix);
}

LinMap sub(const LinMap& f, const LinMap& g) {
    if (!(f.domain == g.domain) || !(f.codomain == g.codomain))
        throw std::invalid_argument("sub: arrow mismatch");
    return LinMap(f.domain, f.codomain, f.matrix - g.matrix);
}

bool same_arrow(const LinMap& f, const LinMap& g) {
    return f.domain == g.domain && f.codomain == g.codomain;
}

int rank(const LinMap& f) { return f.matrix.rank(); }

SubSpace kernel(const LinMap& f) {
    Mat k = f.matrix.kernel_basis();
    VecSpace ks = make_space(f.domain.field, k.cols(), "ker");
    return SubSpace{ks, LinMap(ks, f.domain, k)};
}

SubSpace image(const LinMap& f) {
    Mat::Ech e = f.matrix.echelon();
    Mat basis = f.matrix.cols_selected(e.pivots);
    VecSpace is = make_space(f.domain.field, basis.cols(), "im");
    return SubSpace{is, LinMap(is, f.codomain, basis)};
}

SubSpace span_subspace(const VecSpace& ambient, const Mat& gens, const std::string& prefix) {
    if (gens.rows() != ambient.dim()) throw std::invalid_argument("span_subspace: ambient mismatch");
    Mat::Ech e = gens.echelon();
    Mat basis = gens.cols_selected(e.pivots);
    VecSpace s = make_space(ambient.field, basis.cols(), prefix);
    return SubSpace{s, LinMap(s, ambient, basis)};
}

QuotSpace quotient_by(const VecSpace& ambient, const Mat& rels, const std::string& prefix) {
    if (rels.rows() != ambient.dim()) throw std::invalid_argument("quotient_by: ambient mismatch");
    // Choose unit-vector representatives for the complement of the span.
    Mat::Ech re = rels.echelon();
    Mat span_basis = rels.cols_selected(re.pivots);
    std::vector<int> reps;
    Mat cur = span_basis;
    int r = cur.rank();
    for (int i = 0; i < ambient.dim(); ++i) {
        Mat unit(ambient.field, ambient.dim(), 1);
        unit.set(i, 0, 1);
        Mat ext = cur.hstack(unit);
        if (ext.rank() > r) {
            reps.push_back(i);
            cur = ext;
            ++r;
        }
    }
    VecSpace q = make_space(ambient.field, static_cast<int>(reps.size()), prefix);
    // projection: express each ambient basis vector in (span_basis | reps) coordinates,
    // keep the rep coordinates
    Mat reps_mat(ambient.field, ambient.dim(), static_cast<int>(reps.size()));
    for (int j = 0; j < static_cast<int>(reps.size()); ++j) reps_mat.set(reps[j], j, 1);
    Mat full = span_basis.hstack(reps_mat);
    auto coords = full.solve(Mat::identity(ambient.field, ambient.dim()));
    if (!coords) throw std::logic_error("quotient_by: internal basis failure");
    std::vector<int> tail;
    for (int j = 0; j < static_cast<int>(reps.size()); ++j) tail.push_back(span_basis.cols() + j);
    Mat proj = coords->rows_selected(tail);
    return QuotSpace{q, LinMap(ambient, q, proj)};
}

QuotSpace cokernel(const LinMap& f) { return quotient_by(f.codomain, f.matrix, "cok"); }

LinMap tensor(const LinMap& f, const LinMap& g) {
    require_same_field(f.domain.field, g.domain.field, "tensor");
    return LinMap(tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain),
                  f.matrix.kron(g.matrix));
}

LinMap dual_map(const LinMap& f) {
    return LinMap(dual_space(f.codomain), dual_space(f.domain), f.matrix.transpose());
}

std::optional<Mat> solve(const LinMap& f, const Mat& target) {
    if (target.rows() != f.codomain.dim() || target.cols() != 1)
        throw std::invalid_argument("solve: target must be a codomain column vector");
    return f.matrix.solve(target);
}

// ---------------------------------------------------------------------------
// hom-space plumbing

Mat hom_vec(const LinMap& f) {
    int dm = f.domain.dim(), dn = f.codomain.dim();
    Mat col(f.domain.field, dm * dn, 1);
    for (int j = 0; j < dm; ++j)
        for (int i = 0; i < dn; ++i)
            if (f.domain.field.ch > 0)
                col.set(j * dn + i, 0, f.matrix.get_int(i, j));
            else
                col.set_rat(j * dn + i, 0, f.matrix.get_rat(i, j));
    return col;
}

LinMap hom_from_vec(const VecSpace& m, const VecSpace& n, const Mat& col) {
    if (col.rows() != m.dim() * n.dim() || col.cols() != 1)
        throw std::invalid_argument("hom_from_vec: bad coordinate vector");
    Mat mat(m.field, n.dim(), m.dim());
    for (int j = 0; j < m.dim(); ++j)
        for (int i = 0; i < n.dim(); ++i)
            if (m.field.ch > 0)
                mat.set(i, j, col.get_int(j * n.dim() + i, 0));
            else
                mat.set_rat(i, j, col.get_rat(j * n.dim() + i, 0));
    return LinMap(m, n, mat);
}

LinMap hom_map(const LinMap& f, const LinMap& g) {
    // Hom(B,C) -> Hom(A,D): phi |-> g . phi . f
    const VecSpace& a = f.domain;
    const VecSpace& b = f.codomain;
    const VecSpace& c = g.domain;
    const VecSpace& d = g.codomain;
    VecSpace src = hom_space(b, c), dst = hom_space(a, d);
    Mat m(a.field, dst.dim(), src.dim());
    // entry: coefficient of e_{a_j -> d_i} in g.E_{b_q -> c_p}.f = g(,p)*(f(q,))
    for (int q = 0; q < b.dim(); ++q)
        for (int p = 0; p < c.dim(); ++p) {
            int src_idx = q * c.dim() + p;
            for (int j = 0; j < a.dim(); ++j) {
                if (f.matrix.entry_zero(q, j)) continue;
                for (int i = 0; i < d.dim(); ++i) {
                    if (g.matrix.entry_zero(i, p)) continue;
                    int dst_idx = j * d.dim() + i;
                    if (a.field.ch > 0)
                        m.set(dst_idx, src_idx,
                              mod_mul(g.matrix.get_int(i, p), f.matrix.get_int(q, j), a.field.ch));
                    else
                        m.set_rat(dst_idx, src_idx, g.matrix.get_rat(i, p) * f.matrix.get_rat(q, j));
                }
            }
        }
    return LinMap(src, dst, m);
}

LinMap uncurry_map(const VecSpace& u, const VecSpace& v, const VecSpace& w) {
    // Hom(V, Hom(U,W)) -> Hom(U(x)V, W): phi |-> Phi,  Phi(x_u (x) x_v) = phi(x_v)(x_u).
    VecSpace src = hom_space(v, hom_space(u, w));
    VecSpace dst = hom_space(tensor_space(u, v), w);
    Mat m(u.field, dst.dim(), src.dim());
    int du = u.dim(), dv = v.dim(), dw = w.dim();
    for (int jv = 0; jv < dv; ++jv)
        for (int ju = 0; ju < du; ++ju)
            for (int iw = 0; iw < dw; ++iw) {
                int src_idx = jv * (du * dw) + (ju * dw + iw);
                int dst_idx = (ju * dv + jv) * dw + iw;
                m.set(dst_idx, src_idx, 1);
            }
    return LinMap(src, dst, m);
}

LinMap curry_map(const VecSpace& u, const VecSpace& v, const VecSpace& w) {
    LinMap un = uncurry_map(u, v, w);
    return LinMap(un.codomain, un.domain, un.matrix.transpose());  // permutation inverse
}

LinMap eval_map(const VecSpace& u, const VecSpace& w) {
    VecSpace h = hom_space(u, w);
    VecSpace src = tensor_space(u, h);
    Mat m(u.field, w.dim(), src.dim());
    int du = u.dim(), dw = w.dim();
    for (int ju = 0; ju < du; ++ju)
        for (int jh = 0; jh < h.dim(); ++jh) {
            int hu = jh / dw, hw = jh % dw;  // e_{u_hu -> w_hw}
            if (hu == ju) m.set(hw, ju * h.dim() + jh, 1);
        }
    return LinMap(src, w, m);
}

LinMap flip_map(const VecSpace& a, const VecSpace& b) {
    VecSpace src = tensor_space(a, b), dst = tensor_space(b, a);
    Mat m(a.field, dst.dim(), src.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) m.set(j * a.dim() + i, i * b.dim() + j, 1);
    return LinMap(src, dst, m);
}

LinMap functional_insert(const LinMap& e, const VecSpace& w) {
    // e: U -> k (1-dim codomain); returns W -> Hom(U, W), x |-> (u |-> e(u) x)
    if (e.codomain.dim() != 1) throw std::invalid_argument("functional_insert: e must map to a line");
    const VecSpace& u = e.domain;
    VecSpace h = hom_space(u, w);
    Mat m(w.field, h.dim(), w.dim());
    for (int iw = 0; iw < w.dim(); ++iw)
        for (int ju = 0; ju < u.dim(); ++ju) {
            if (e.matrix.entry_zero(0, ju)) continue;
            if (w.field.ch > 0)
                m.set(ju * w.dim() + iw, iw, e.matrix.get_int(0, ju));
            else
                m.set_rat(ju * w.dim() + iw, iw, e.matrix.get_rat(0, ju));
        }
    return LinMap(w, h, m);
}

}  // namespace cocontra
