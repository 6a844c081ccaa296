#include "cocontra/coalg.hpp"

#include <algorithm>
#include <cmath>

namespace cocontra {

Coalgebra::Coalgebra(VecSpace sp, LinMap cm, LinMap cu, std::optional<LinMap> ca)
    : space(std::move(sp)), comult(std::move(cm)), counit(std::move(cu)), coaugmentation(std::move(ca)) {
    if (!(comult.domain == space) || !(comult.codomain == tensor_space(space, space)))
        throw std::invalid_argument("Coalgebra: comultiplication shape mismatch");
    if (!(counit.domain == space) || counit.codomain.dim() != 1)
        throw std::invalid_argument("Coalgebra: counit must map C to a line");
    if (coaugmentation) {
        if (coaugmentation->domain.dim() != 1 || !(coaugmentation->codomain == space))
            throw std::invalid_argument("Coalgebra: coaugmentation must map a line to C");
    }
}

LinMap left_unitor(const VecSpace& line, const VecSpace& v) {
    if (line.dim() != 1) throw std::invalid_argument("left_unitor: not a line");
    return LinMap(tensor_space(line, v), v, Mat::identity(v.field, v.dim()));
}

LinMap right_unitor(const VecSpace& v, const VecSpace& line) {
    if (line.dim() != 1) throw std::invalid_argument("right_unitor: not a line");
    return LinMap(tensor_space(v, line), v, Mat::identity(v.field, v.dim()));
}

namespace {

// first column where two equal-shaped matrices differ, -1 if equal
int first_diff_col(const Mat& a, const Mat& b) {
    if (a == b) return -1;
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (a.get_rat(i, j) != b.get_rat(i, j)) return j;
    return -1;
}

}  // namespace

AxiomWitness check_coalgebra(const Coalgebra& c) {
    AxiomWitness w;
    LinMap idc = identity_map(c.space);
    LinMap lhs = compose(tensor(c.comult, idc), c.comult);
    LinMap rhs = compose(tensor(idc, c.comult), c.comult);
    int col = first_diff_col(lhs.matrix, rhs.matrix);
    if (col >= 0) return {false, "coassociativity", col};

    LinMap lcounit =
        compose(left_unitor(c.unit_line(), c.space), compose(tensor(c.counit, idc), c.comult));
    col = first_diff_col(lcounit.matrix, Mat::identity(c.field(), c.dim()));
    if (col >= 0) return {false, "counit-left", col};

    LinMap rcounit =
        compose(right_unitor(c.space, c.unit_line()), compose(tensor(idc, c.counit), c.comult));
    col = first_diff_col(rcounit.matrix, Mat::identity(c.field(), c.dim()));
    if (col >= 0) return {false, "counit-right", col};

    if (c.coaugmentation) {
        const LinMap& g = *c.coaugmentation;
        Mat gv = g.matrix;
        Mat grouplike = compose(c.comult, g).matrix;
        Mat sq = gv.kron(gv);
        if (!(grouplike == sq)) return {false, "coaugmentation-morphism", 0};
        Mat eps = compose(c.counit, g).matrix;
        if (!(eps == Mat::identity(c.field(), 1))) return {false, "coaugmentation-counit", 0};
    }
    return w;
}

AxiomWitness check_algebra(const Algebra& a) {
    LinMap ida = identity_map(a.space);
    LinMap lhs = compose(a.mult, tensor(a.mult, ida));
    LinMap rhs = compose(a.mult, tensor(ida, a.mult));
    int col = first_diff_col(lhs.matrix, rhs.matrix);
    if (col >= 0) return {false, "associativity", col};

    const VecSpace& line = a.unit.domain;
    LinMap lunit_in(a.space, tensor_space(line, a.space), Mat::identity(a.field(), a.dim()));
    LinMap l = compose(a.mult, compose(tensor(a.unit, ida), lunit_in));
    col = first_diff_col(l.matrix, Mat::identity(a.field(), a.dim()));
    if (col >= 0) return {false, "unit-left", col};

    LinMap runit_in(a.space, tensor_space(a.space, line), Mat::identity(a.field(), a.dim()));
    LinMap r = compose(a.mult, compose(tensor(ida, a.unit), runit_in));
    col = first_diff_col(r.matrix, Mat::identity(a.field(), a.dim()));
    if (col >= 0) return {false, "unit-right", col};
    return {};
}

Algebra dual_algebra(const Coalgebra& c) {
    AxiomWitness w = check_coalgebra(c);
    if (!w.ok)
        throw std::invalid_argument("dual_algebra: coalgebra axioms fail (" + w.axiom + " at basis " +
                                    std::to_string(w.basis_index) + ")");
    int n = c.dim();
    Field f = c.field();
    Algebra a;
    a.space = dual_space(c.space);
    // (f_x . f_y)(c_k) = sum over Delta(c_k) of f_y(c_(1)) f_x(c_(2)): oriented
    // so that left comodules and left contramodules are left modules.
    Mat mult(f, n, n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < n; ++k) {
                if (f.ch > 0)
                    mult.set(k, x * n + y, c.comult.matrix.get_int(y * n + x, k));
                else
                    mult.set_rat(k, x * n + y, c.comult.matrix.get_rat(y * n + x, k));
            }
    a.mult = LinMap(tensor_space(a.space, a.space), a.space, mult);
    a.unit = LinMap(make_space(f, 1, "1"), a.space, c.counit.matrix.transpose());
    a.role = AlgebraRole::dual_of_coalgebra;
    AxiomWitness aw = check_algebra(a);
    if (!aw.ok) throw std::logic_error("dual_algebra: dual failed algebra axioms: " + aw.axiom);
    return a;
}

namespace {

// all x with eps(x) = 1 and Delta(x) = x (x) x, by exhaustive search over the
// affine hyperplane eps = 1
std::vector<Mat> find_grouplikes(const Coalgebra& c) {
    Field f = c.field();
    if (f.ch == 0)
        throw std::invalid_argument("grouplike search requires a prime field; supply a coaugmentation");
    long long p = f.ch;
    int n = c.dim();
    auto part = c.counit.matrix.solve(Mat::identity(f, 1));
    if (!part) return {};
    Mat k = c.counit.matrix.kernel_basis();
    int free = k.cols();
    if (free * std::log2(static_cast<double>(p)) > 24)
        throw std::runtime_error("grouplike search space too large");
    std::vector<Mat> found;
    long long total = 1;
    for (int i = 0; i < free; ++i) total *= p;
    // division-free arithmetic tables and raw sparse comultiplication columns
    std::vector<long long> multab(static_cast<size_t>(p) * p);
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) multab[static_cast<size_t>(a) * p + b] = (a * b) % p;
    auto madd = [p](long long a, long long b) {
        long long t = a + b;
        return t >= p ? t - p : t;
    };
    std::vector<std::vector<std::pair<int, long long>>> cols(n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n * n; ++r) {
            long long v = c.comult.matrix.get_int(r, j);
            if (v != 0) cols[j].push_back({r, v});
        }
    std::vector<long long> x(n), dx(static_cast<size_t>(n) * n);
    std::vector<std::vector<long long>> kcol(free, std::vector<long long>(n));
    for (int i = 0; i < free; ++i)
        for (int r = 0; r < n; ++r) kcol[i][r] = k.get_int(r, i);
    for (int r = 0; r < n; ++r) x[r] = part->get_int(r, 0);
    std::vector<long long> digits(free, 0);
    for (long long t = 0;; ++t) {
        std::fill(dx.begin(), dx.end(), 0);
        for (int j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            for (auto& [r, v] : cols[j]) dx[r] = madd(dx[r], multab[static_cast<size_t>(v) * p + x[j]]);
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = dx[static_cast<size_t>(i) * n + j] == multab[static_cast<size_t>(x[i]) * p + x[j]];
        if (ok) {
            Mat xm(f, n, 1);
            for (int r = 0; r < n; ++r) xm.set(r, 0, x[r]);
            found.push_back(xm);
        }
        if (t + 1 >= total) break;
        // odometer increment: adding K_i to x realizes digit i += 1 (mod p)
        int i = 0;
        while (digits[i] == p - 1) {
            digits[i] = 0;
            for (int r = 0; r < n; ++r) x[r] = madd(x[r], kcol[i][r]);
            ++i;
        }
        ++digits[i];
        for (int r = 0; r < n; ++r) x[r] = madd(x[r], kcol[i][r]);
    }
    return found;
}

}  // namespace

ConilpotencyResult is_conilpotent(const Coalgebra& c) {
    ConilpotencyResult res;
    Field f = c.field();
    LinMap gamma = zero_map(make_space(f, 1, "1"), c.space);
    if (c.coaugmentation) {
        gamma = *c.coaugmentation;
        res.has_coaugmentation = true;
        res.grouplikes = {gamma.matrix};
    } else {
        res.grouplikes = find_grouplikes(c);
        if (res.grouplikes.size() != 1) {
            res.has_coaugmentation = false;
            res.conilpotent = false;
            return res;
        }
        res.has_coaugmentation = true;
        gamma = LinMap(make_space(f, 1, "1"), c.space, res.grouplikes[0]);
    }
    res.coaugmentation = gamma;

    SubSpace cplus = kernel(c.counit);
    int np = cplus.space.dim();
    if (np == 0) {
        res.conilpotent = true;
        return res;
    }
    Mat basis = cplus.incl.matrix.hstack(gamma.matrix);
    auto coords = basis.solve(Mat::identity(f, c.dim()));
    if (!coords) {
        res.conilpotent = false;
        return res;
    }
    std::vector<int> head(np);
    for (int i = 0; i < np; ++i) head[i] = i;
    LinMap proj(c.space, cplus.space, coords->rows_selected(head));
    LinMap delta_plus = compose(tensor(proj, proj), compose(c.comult, cplus.incl));

    SubSpace fprev = kernel(delta_plus);
    res.filtration.push_back(fprev);
    while (true) {
        if (fprev.space.dim() == np) {
            res.conilpotent = true;
            return res;
        }
        // F_m = preimage of C_+ (x) F_{m-1} under Delta_+
        //     = ker((id (x) quot_{F_{m-1}}) . Delta_+)
        QuotSpace q = cokernel(fprev.incl);
        SubSpace fnext = kernel(compose(tensor(identity_map(cplus.space), q.proj), delta_plus));
        if (fnext.space.dim() == fprev.space.dim()) {
            res.conilpotent = false;
            return res;
        }
        res.filtration.push_back(fnext);
        fprev = fnext;
    }
}

SubSpace cogenerator_subspace(const Coalgebra& c) {
    ConilpotencyResult r = is_conilpotent(c);
    if (!r.conilpotent) throw std::invalid_argument("cogenerator_space: coalgebra is not conilpotent");
    if (r.filtration.empty()) {
        VecSpace h = make_space(c.field(), 0, "h1_");
        return SubSpace{h, LinMap(h, c.space, Mat(c.field(), c.dim(), 0))};
    }
    SubSpace cplus = kernel(c.counit);
    LinMap incl = compose(cplus.incl, r.filtration[0].incl);
    VecSpace h = make_space(c.field(), r.filtration[0].space.dim(), "h1_");
    return SubSpace{h, LinMap(h, c.space, incl.matrix)};
}

VecSpace cogenerator_space(const Coalgebra& c) { return cogenerator_subspace(c).space; }

Coalgebra group_function_coalgebra(const FiniteGroup& g, Field k) {
    g.validate();
    int n = g.order();
    VecSpace c = make_space(k, n, "d");
    Mat cm(k, n * n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cm.set(a * n + b, g.mul(a, b), 1);
    Mat cu(k, 1, n);
    cu.set(0, 0, 1);  // identity element of the group table is 0
    Coalgebra coalg(c, LinMap(c, tensor_space(c, c), cm), LinMap(c, make_space(k, 1, "1"), cu));
    if (k.ch > 0) {
        ConilpotencyResult cr = is_conilpotent(coalg);
        if (cr.conilpotent) coalg.coaugmentation = cr.coaugmentation;
    }
    return coalg;
}

LinMap materialize_operator(const VecSpace& src_dom, const VecSpace& src_cod,
                            const VecSpace& dst_dom, const VecSpace& dst_cod,
                            const std::function<LinMap(const LinMap&)>& op) {
    VecSpace src = hom_space(src_dom, src_cod), dst = hom_space(dst_dom, dst_cod);
    Mat m(src_dom.field, dst.dim(), src.dim());
    for (int j = 0; j < src_dom.dim(); ++j)
        for (int i = 0; i < src_cod.dim(); ++i) {
            Mat e(src_dom.field, src_cod.dim(), src_dom.dim());
            e.set(i, j, 1);
            Mat col = hom_vec(op(LinMap(src_dom, src_cod, e)));
            if (col.rows() != dst.dim()) throw std::logic_error("materialize_operator: shape mismatch");
            for (int r = 0; r < col.rows(); ++r)
                if (src_dom.field.ch > 0)
                    m.set(r, j * src_cod.dim() + i, col.get_int(r, 0));
                else
                    m.set_rat(r, j * src_cod.dim() + i, col.get_rat(r, 0));
        }
    return LinMap(src, dst, m);
}

std::vector<LinMap> left_comodule_morphisms(const Coalgebra& c, const VecSpace& v, const LinMap& nu_v,
                                            const VecSpace& w, const LinMap& nu_w) {
    LinMap idc = identity_map(c.space);
    LinMap sys = materialize_operator(
        v, w, v, tensor_space(c.space, w),
        [&](const LinMap& phi) { return sub(compose(tensor(idc, phi), nu_v), compose(nu_w, phi)); });
    Mat k = sys.matrix.kernel_basis();
    std::vector<LinMap> out;
    for (int j = 0; j < k.cols(); ++j) out.push_back(hom_from_vec(v, w, k.cols_selected({j})));
    return out;
}

SubSpace generated_subcomodule(const Coalgebra& c, const VecSpace& v, const LinMap& nu,
                               const Mat& vectors) {
    int nc = c.dim(), nv = v.dim();
    Mat span = vectors;
    int r = span.rank();
    while (true) {
        Mat co = nu.matrix * span;
        Mat next = span;
        for (int j = 0; j < span.cols(); ++j)
            for (int i = 0; i < nc; ++i) {
                Mat slice(v.field, nv, 1);
                bool nonzero = false;
                for (int t = 0; t < nv; ++t) {
                    if (v.field.ch > 0) {
                        long long val = co.get_int(i * nv + t, j);
                        slice.set(t, 0, val);
                        nonzero |= val != 0;
                    } else {
                        Rat val = co.get_rat(i * nv + t, j);
                        slice.set_rat(t, 0, val);
                        nonzero |= val != 0;
                    }
                }
                if (nonzero) next = next.hstack(slice);
            }
        int r2 = next.rank();
        if (r2 == r) break;
        span = next;
        r = r2;
    }
    return span_subspace(v, span, "g");
}

LinMap restrict_coaction(const Coalgebra& c, const LinMap& nu, const SubSpace& sub) {
    LinMap big = compose(nu, sub.incl);
    Mat emb = Mat::identity(c.field(), c.dim()).kron(sub.incl.matrix);
    auto x = emb.solve(big.matrix);
    if (!x) throw std::invalid_argument("restrict_coaction: not a subcomodule");
    return LinMap(sub.space, tensor_space(c.space, sub.space), *x);
}

LinMap quotient_coaction(const Coalgebra& c, const LinMap& nu, const QuotSpace& quot) {
    auto sec = quot.proj.matrix.solve(Mat::identity(c.field(), quot.space.dim()));
    if (!sec) throw std::invalid_argument("quotient_coaction: projection not surjective");
    Mat down = Mat::identity(c.field(), c.dim()).kron(quot.proj.matrix);
    Mat m = down * (nu.matrix * *sec);
    if (!((m * quot.proj.matrix) == (down * nu.matrix)))
        throw std::invalid_argument("quotient_coaction: kernel of projection is not a subcomodule");
    return LinMap(quot.space, tensor_space(c.space, quot.space), m);
}

namespace {

struct SimpleFound {
    SubSpace sub;
    LinMap coaction;
};

// Minimal nonzero subcomodule: descend from a basis-vector-generated
// subcomodule, replacing it by anything strictly smaller generated by one of
// its vectors until it is simple (every nonzero vector generates it).
SimpleFound find_simple(const Coalgebra& c, const VecSpace& v, const LinMap& nu) {
    Field f = v.field;
    if (f.ch == 0) throw std::runtime_error("cosemisimple decomposition requires a prime field");
    long long p = f.ch;
    int n = v.dim();
    std::optional<SubSpace> cur;
    for (int i = 0; i < n; ++i) {
        Mat e(f, n, 1);
        e.set(i, 0, 1);
        SubSpace g = generated_subcomodule(c, v, nu, e);
        if (!cur || g.space.dim() < cur->space.dim()) cur = g;
        if (cur->space.dim() == 1) break;
    }
    if (!cur) throw std::logic_error("find_simple: zero comodule");
    bool shrunk = true;
    while (shrunk && cur->space.dim() > 1) {
        shrunk = false;
        int d = cur->space.dim();
        if (d * std::log2(static_cast<double>(p)) > 20)
            throw std::runtime_error("cosemisimple search space too large");
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long t = 1; t < total; ++t) {
            long long tt = t;
            Mat x(f, d, 1);
            for (int i = 0; i < d; ++i) {
                x.set(i, 0, tt % p);
                tt /= p;
            }
            SubSpace g = generated_subcomodule(c, v, nu, cur->incl.matrix * x);
            if (g.space.dim() < d) {
                cur = g;
                shrunk = true;
                break;
            }
        }
    }
    return SimpleFound{*cur, restrict_coaction(c, nu, *cur)};
}

bool decompose_fully(const Coalgebra& c, VecSpace v, LinMap nu, std::vector<IrreducibleDescriptor>& out,
                     std::optional<NonSplitWitness>& witness) {
    while (v.dim() > 0) {
        SimpleFound s = find_simple(c, v, nu);
        std::vector<LinMap> homs = left_comodule_morphisms(c, v, nu, s.sub.space, s.coaction);
        Field f = v.field;
        int sd = s.sub.space.dim();
        Mat sys(f, sd * sd, static_cast<int>(homs.size()));
        for (size_t b = 0; b < homs.size(); ++b) {
            Mat comp = hom_vec(compose(homs[b], s.sub.incl));
            for (int r = 0; r < comp.rows(); ++r) sys.set(r, static_cast<int>(b), comp.get_int(r, 0));
        }
        auto sol = sys.solve(hom_vec(identity_map(s.sub.space)));
        if (!sol) {
            witness = NonSplitWitness{v, nu, s.sub.incl.matrix};
            return false;
        }
        LinMap pi = zero_map(v, s.sub.space);
        for (size_t b = 0; b < homs.size(); ++b)
            pi = add(pi, LinMap(v, s.sub.space, homs[b].matrix.scaled(sol->get_int(static_cast<int>(b), 0))));
        out.push_back(IrreducibleDescriptor{s.sub.space, s.coaction, 1});
        SubSpace k = kernel(pi);
        LinMap knu = restrict_coaction(c, nu, k);
        v = k.space;
        nu = knu;
    }
    return true;
}

}  // namespace

CosemisimpleResult cosemisimple_decomposition(const Coalgebra& c) {
    AxiomWitness aw = check_coalgebra(c);
    if (!aw.ok) throw std::invalid_argument("cosemisimple_decomposition: coalgebra axioms fail");
    CosemisimpleResult res;
    std::vector<IrreducibleDescriptor> simples;
    if (!decompose_fully(c, c.space, c.comult, simples, res.witness)) {
        res.ok = false;
        return res;
    }
    // a small generated family must split as well
    VecSpace v2 = make_space(c.field(), 2, "v");
    LinMap cofree2 = tensor(c.comult, identity_map(v2));
    std::vector<IrreducibleDescriptor> scratch;
    if (!decompose_fully(c, tensor_space(c.space, v2), cofree2, scratch, res.witness)) {
        res.ok = false;
        return res;
    }
    std::vector<IrreducibleDescriptor> grouped;
    for (auto& s : simples) {
        bool merged = false;
        for (auto& g : grouped) {
            if (g.space.dim() != s.space.dim()) continue;
            if (!left_comodule_morphisms(c, s.space, s.coaction, g.space, g.coaction).empty()) {
                ++g.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) grouped.push_back(s);
    }
    res.ok = true;
    res.irreducibles = std::move(grouped);
    return res;
}

}  // namespace cocontra
