#include "cocontra/homcx.hpp"

#include <sstream>

namespace cocontra {

static VecSpace zero_space(Field f) { return make_space(f, 0, "z"); }

Complex::Complex(Field f, std::map<int, VecSpace> terms, std::map<int, LinMap> diffs,
                 std::map<int, TermStructurePtr> decorations)
    : field_(f), terms_(std::move(terms)), diffs_(std::move(diffs)), decor_(std::move(decorations)) {
    for (auto& [deg, sp] : terms_) {
        (void)deg;
        require_same_field(sp.field, field_, "Complex");
    }
    for (auto& [deg, d] : diffs_) {
        if (!(d.domain == term(deg)))
            throw std::invalid_argument("Complex: differential domain mismatch at degree " +
                                        std::to_string(deg));
        if (!(d.codomain == term(deg + 1)))
            throw std::invalid_argument("Complex: differential codomain mismatch at degree " +
                                        std::to_string(deg));
    }
    for (auto& [deg, d] : diffs_) {
        auto next = diffs_.find(deg + 1);
        if (next != diffs_.end()) {
            if (!compose(next->second, d).matrix.is_zero())
                throw std::invalid_argument("Complex: d.d != 0 at degree " + std::to_string(deg));
        }
    }
    for (auto& [deg, tag] : decor_) {
        if (!tag) continue;
        auto next_tag = decor_.find(deg + 1);
        if (diffs_.count(deg) && next_tag != decor_.end() && next_tag->second) {
            if (tag->kind() != next_tag->second->kind())
                throw std::invalid_argument("Complex: decoration kind mismatch at degree " +
                                            std::to_string(deg));
            if (!tag->morphism_to(*next_tag->second, diffs_.at(deg)))
                throw std::invalid_argument(
                    "Complex: differential is not structure-preserving at degree " +
                    std::to_string(deg));
        }
    }
}

int Complex::lo() const {
    if (terms_.empty()) throw std::logic_error("Complex::lo on empty complex");
    return terms_.begin()->first;
}

int Complex::hi() const {
    if (terms_.empty()) throw std::logic_error("Complex::hi on empty complex");
    return terms_.rbegin()->first;
}

VecSpace Complex::term(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? zero_space(field_) : it->second;
}

LinMap Complex::diff(int i) const {
    auto it = diffs_.find(i);
    return it == diffs_.end() ? zero_map(term(i), term(i + 1)) : it->second;
}

TermStructurePtr Complex::decoration(int i) const {
    auto it = decor_.find(i);
    return it == decor_.end() ? nullptr : it->second;
}

long long Complex::euler_char() const {
    long long chi = 0;
    for (auto& [deg, sp] : terms_) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long long>(sp.dim());
    return chi;
}

ChainMap::ChainMap(Complex src, Complex tgt, std::map<int, LinMap> comps)
    : source(std::move(src)), target(std::move(tgt)), components(std::move(comps)) {
    require_same_field(source.field(), target.field(), "ChainMap");
    for (auto& [deg, c] : components) {
        if (!(c.domain == source.term(deg)) || !(c.codomain == target.term(deg)))
            throw std::invalid_argument("ChainMap: component spaces mismatch at degree " +
                                        std::to_string(deg));
    }
    // commute with differentials degreewise
    if (!source.empty() || !target.empty()) {
        int a = source.empty() ? target.lo() : (target.empty() ? source.lo() : std::min(source.lo(), target.lo()));
        int b = source.empty() ? target.hi() : (target.empty() ? source.hi() : std::max(source.hi(), target.hi()));
        for (int deg = a - 1; deg <= b + 1; ++deg) {
            LinMap lhs = compose(component(deg + 1), source.diff(deg));
            LinMap rhs = compose(target.diff(deg), component(deg));
            if (!(lhs.matrix == rhs.matrix))
                throw std::invalid_argument("ChainMap: does not commute with differentials at degree " +
                                            std::to_string(deg));
        }
    }
}

LinMap ChainMap::component(int i) const {
    auto it = components.find(i);
    return it == components.end() ? zero_map(source.term(i), target.term(i)) : it->second;
}

Mat HomologyData::project(const Mat& cycles) const {
    auto coords = cycle_basis.solve(cycles);
    if (!coords) throw std::invalid_argument("HomologyData::project: input is not a cycle");
    return quot.matrix * *coords;
}

HomologyData homology_data(const Complex& x, int degree) {
    LinMap dout = x.diff(degree);
    LinMap din = x.diff(degree - 1);
    Mat z = dout.matrix.kernel_basis();
    // image of d^{degree-1} expressed in cycle coordinates
    auto img_coords = z.solve(din.matrix);
    if (!img_coords) throw std::logic_error("homology_data: image not contained in cycles");
    VecSpace zspace = make_space(x.field(), z.cols(), "z");
    QuotSpace q = quotient_by(zspace, *img_coords, "h");
    // quotient_by picked unit-vector representatives in cycle coordinates;
    // recover them by solving proj . r = id
    auto sec = q.proj.matrix.solve(Mat::identity(x.field(), q.space.dim()));
    if (!sec) throw std::logic_error("homology_data: no section");
    HomologyData h;
    h.space = q.space;
    h.cycle_basis = z;
    h.quot = q.proj;
    h.reps = z * *sec;
    return h;
}

VecSpace homology(const Complex& x, int degree) { return homology_data(x, degree).space; }

namespace {

// write src into dst at block offset (r0, c0)
void put_block(Mat& dst, const Mat& src, int r0, int c0) {
    Field f = dst.field();
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c) {
            if (src.entry_zero(r, c)) continue;
            if (f.ch > 0)
                dst.set(r0 + r, c0 + c, src.get_int(r, c));
            else
                dst.set_rat(r0 + r, c0 + c, src.get_rat(r, c));
        }
}

}  // namespace

Complex cone(const ChainMap& f) {
    // cone(f)^i = X^{i+1} (+) Y^i, d(x,y) = (-d_X x, f x + d_Y y)
    const Complex& x = f.source;
    const Complex& y = f.target;
    Field fl = x.field();
    if (x.empty() && y.empty()) return Complex(fl);
    int lo = std::min(x.empty() ? y.lo() : x.lo() - 1, y.empty() ? x.lo() - 1 : y.lo());
    int hi = std::max(x.empty() ? y.hi() : x.hi() - 1, y.empty() ? x.hi() - 1 : y.hi());
    std::map<int, VecSpace> terms;
    std::map<int, LinMap> diffs;
    for (int i = lo; i <= hi; ++i) {
        int d = x.term(i + 1).dim() + y.term(i).dim();
        if (d > 0) terms[i] = make_space(fl, d, "cn" + std::to_string(i - lo) + "_");
    }
    auto cterm = [&](int i) {
        auto it = terms.find(i);
        return it == terms.end() ? zero_space(fl) : it->second;
    };
    for (int i = lo; i <= hi; ++i) {
        VecSpace dom = cterm(i), cod = cterm(i + 1);
        if (dom.dim() == 0 || cod.dim() == 0) continue;
        Mat m(fl, cod.dim(), dom.dim());
        int xr = x.term(i + 2).dim();
        int xc = x.term(i + 1).dim();
        put_block(m, x.diff(i + 1).matrix.negated(), 0, 0);
        put_block(m, f.component(i + 1).matrix, xr, 0);
        put_block(m, y.diff(i).matrix, xr, xc);
        diffs[i] = LinMap(dom, cod, m);
    }
    return Complex(fl, std::move(terms), std::move(diffs));
}

Complex shift(const Complex& x, int n) {
    std::map<int, VecSpace> terms;
    std::map<int, LinMap> diffs;
    for (auto& [deg, sp] : x.terms()) terms[deg - n] = sp;
    if (!x.empty())
        for (int i = x.lo() - 1; i <= x.hi(); ++i) {
            LinMap d = x.diff(i);
            if (d.domain.dim() == 0 || d.codomain.dim() == 0 || d.matrix.is_zero()) continue;
            Mat m = (n % 2 == 0) ? d.matrix : d.matrix.negated();
            diffs[i - n] = LinMap(d.domain, d.codomain, m);
        }
    return Complex(x.field(), std::move(terms), std::move(diffs));
}

Complex direct_sum(const Complex& x, const Complex& y) {
    require_same_field(x.field(), y.field(), "direct_sum");
    Field fl = x.field();
    if (x.empty()) return y;
    if (y.empty()) return x;
    std::map<int, VecSpace> terms;
    std::map<int, LinMap> diffs;
    int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
    for (int i = lo; i <= hi; ++i) {
        int d = x.term(i).dim() + y.term(i).dim();
        if (d > 0) terms[i] = make_space(fl, d, "s" + std::to_string(i - lo) + "_");
    }
    auto cterm = [&](int i) {
        auto it = terms.find(i);
        return it == terms.end() ? zero_space(fl) : it->second;
    };
    for (int i = lo; i < hi; ++i) {
        VecSpace dom = cterm(i), cod = cterm(i + 1);
        if (dom.dim() == 0 || cod.dim() == 0) continue;
        Mat m(fl, cod.dim(), dom.dim());
        put_block(m, x.diff(i).matrix, 0, 0);
        put_block(m, y.diff(i).matrix, x.term(i + 1).dim(), x.term(i).dim());
        diffs[i] = LinMap(dom, cod, m);
    }
    return Complex(fl, std::move(terms), std::move(diffs));
}

QuasiIsoWitness is_quasi_iso(const ChainMap& f) {
    QuasiIsoWitness w;
    const Complex& x = f.source;
    const Complex& y = f.target;
    if (x.empty() && y.empty()) return w;
    int lo = std::min(x.empty() ? y.lo() : x.lo(), y.empty() ? x.lo() : y.lo()) - 1;
    int hi = std::max(x.empty() ? y.hi() : x.hi(), y.empty() ? x.hi() : y.hi()) + 1;
    for (int i = lo; i <= hi; ++i) {
        HomologyData hx = homology_data(x, i);
        HomologyData hy = homology_data(y, i);
        Mat mapped = f.component(i).matrix * hx.reps;
        Mat induced = hy.project(mapped);
        int rk = induced.rank();
        int kd = hx.space.dim() - rk;
        int cd = hy.space.dim() - rk;
        if (kd != 0 || cd != 0) {
            w.ok = false;
            w.degree = i;
            w.ker_defect = kd;
            w.coker_defect = cd;
            return w;
        }
    }
    return w;
}

bool is_exact(const Complex& x) {
    if (x.empty()) return true;
    for (int i = x.lo() - 1; i <= x.hi() + 1; ++i)
        if (homology(x, i).dim() != 0) return false;
    return true;
}

Complex truncate_support(const Complex& x, int lo, int hi) {
    if (x.empty()) return x;
    for (int i = x.lo() - 1; i <= x.hi() + 1; ++i) {
        if (i >= lo && i <= hi) continue;
        if (homology(x, i).dim() != 0)
            throw std::invalid_argument("truncate_support: nonzero homology at degree " +
                                        std::to_string(i));
    }
    if (x.lo() >= lo && x.hi() <= hi) return x;
    std::map<int, VecSpace> terms;
    std::map<int, LinMap> diffs;
    SubSpace khi = kernel(x.diff(hi));
    QuotSpace clo = cokernel(x.diff(lo - 1));
    if (lo == hi) {
        LinMap to_q = compose(clo.proj, khi.incl);
        SubSpace im = image(to_q);
        if (im.space.dim() > 0) terms[lo] = im.space;
        return Complex(x.field(), std::move(terms), std::move(diffs));
    }
    for (int i = lo; i <= hi; ++i) {
        VecSpace t = i == lo ? clo.space : (i == hi ? khi.space : x.term(i));
        if (t.dim() > 0) terms[i] = t;
    }
    auto cterm = [&](int i) -> VecSpace {
        auto it = terms.find(i);
        return it == terms.end() ? zero_space(x.field()) : it->second;
    };
    for (int i = lo; i < hi; ++i) {
        if (cterm(i).dim() == 0 || cterm(i + 1).dim() == 0) continue;
        Mat m = x.diff(i).matrix;
        if (i == lo) {
            auto sec = clo.proj.matrix.solve(Mat::identity(x.field(), clo.space.dim()));
            if (!sec) throw std::logic_error("truncate_support: no section");
            m = m * *sec;
        }
        if (i + 1 == hi) {
            auto co = khi.incl.matrix.solve(m);
            if (!co) throw std::logic_error("truncate_support: image not in kernel");
            m = *co;
        }
        diffs[i] = LinMap(cterm(i), cterm(i + 1), m);
    }
    return Complex(x.field(), std::move(terms), std::move(diffs));
}

}  // namespace cocontra
