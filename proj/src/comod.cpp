#include "cocontra/comod.hpp"

namespace cocontra {

Comodule::Comodule(CoalgebraPtr c, VecSpace sp, LinMap co, Side s)
    : coalgebra(std::move(c)), space(std::move(sp)), coaction(std::move(co)), side(s) {
    if (!coalgebra) throw std::invalid_argument("Comodule: null coalgebra");
    require_same_field(space.field, coalgebra->field(), "Comodule");
    VecSpace expect = side == Side::left ? tensor_space(coalgebra->space, space)
                                         : tensor_space(space, coalgebra->space);
    if (!(coaction.domain == space) || !(coaction.codomain == expect))
        throw std::invalid_argument("Comodule: coaction shape mismatch");
}

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->space == b->space && a->comult.matrix == b->comult.matrix &&
           a->counit.matrix == b->counit.matrix;
}

namespace {

AxiomWitness diff_witness(const Mat& lhs, const Mat& rhs, const char* axiom) {
    if (lhs == rhs) return {};
    for (int j = 0; j < lhs.cols(); ++j)
        for (int i = 0; i < lhs.rows(); ++i)
            if (lhs.get_rat(i, j) != rhs.get_rat(i, j)) return {false, axiom, j};
    return {};
}

}  // namespace

AxiomWitness check_comodule(const Comodule& m) {
    const Coalgebra& c = *m.coalgebra;
    LinMap idc = identity_map(c.space);
    LinMap idm = identity_map(m.space);
    if (m.side == Side::left) {
        LinMap lhs = compose(tensor(c.comult, idm), m.coaction);
        LinMap rhs = compose(tensor(idc, m.coaction), m.coaction);
        AxiomWitness w = diff_witness(lhs.matrix, rhs.matrix, "coaction-coassociativity");
        if (!w.ok) return w;
        LinMap cu =
            compose(left_unitor(c.unit_line(), m.space), compose(tensor(c.counit, idm), m.coaction));
        return diff_witness(cu.matrix, Mat::identity(m.space.field, m.space.dim()), "coaction-counit");
    }
    LinMap lhs = compose(tensor(m.coaction, idc), m.coaction);
    LinMap rhs = compose(tensor(idm, c.comult), m.coaction);
    AxiomWitness w = diff_witness(lhs.matrix, rhs.matrix, "coaction-coassociativity");
    if (!w.ok) return w;
    LinMap cu =
        compose(right_unitor(m.space, c.unit_line()), compose(tensor(idm, c.counit), m.coaction));
    return diff_witness(cu.matrix, Mat::identity(m.space.field, m.space.dim()), "coaction-counit");
}

Comodule cofree(const CoalgebraPtr& c, const VecSpace& v) {
    VecSpace sp = tensor_space(c->space, v);
    LinMap co = tensor(c->comult, identity_map(v));
    // (C (x) C) (x) V and C (x) (C (x) V) carry identical labels
    return Comodule(c, sp, LinMap(sp, tensor_space(c->space, sp), co.matrix), Side::left);
}

Comodule cofree_right(const CoalgebraPtr& c, const VecSpace& v) {
    VecSpace sp = tensor_space(v, c->space);
    LinMap co = tensor(identity_map(v), c->comult);
    return Comodule(c, sp, LinMap(sp, tensor_space(sp, c->space), co.matrix), Side::right);
}

Comodule regular_left(const CoalgebraPtr& c) { return Comodule(c, c->space, c->comult, Side::left); }

Comodule regular_right(const CoalgebraPtr& c) { return Comodule(c, c->space, c->comult, Side::right); }

Comodule trivial_left(const CoalgebraPtr& c, const VecSpace& v) {
    if (!c->coaugmentation) throw std::invalid_argument("trivial_left: coalgebra has no coaugmentation");
    LinMap co(v, tensor_space(c->space, v),
              c->coaugmentation->matrix.kron(Mat::identity(v.field, v.dim())));
    return Comodule(c, v, co, Side::left);
}

Comodule trivial_right(const CoalgebraPtr& c, const VecSpace& v) {
    if (!c->coaugmentation) throw std::invalid_argument("trivial_right: coalgebra has no coaugmentation");
    LinMap co(v, tensor_space(v, c->space),
              Mat::identity(v.field, v.dim()).kron(c->coaugmentation->matrix));
    return Comodule(c, v, co, Side::right);
}

Comodule sub_comodule(const Comodule& m, const SubSpace& s) {
    const Coalgebra& c = *m.coalgebra;
    if (m.side == Side::left) {
        LinMap co = restrict_coaction(c, m.coaction, s);
        return Comodule(m.coalgebra, s.space, co, Side::left);
    }
    LinMap big = compose(m.coaction, s.incl);
    Mat emb = s.incl.matrix.kron(Mat::identity(c.field(), c.dim()));
    auto x = emb.solve(big.matrix);
    if (!x) throw std::invalid_argument("sub_comodule: not a subcomodule");
    return Comodule(m.coalgebra, s.space, LinMap(s.space, tensor_space(s.space, c.space), *x),
                    Side::right);
}

Comodule quotient_comodule(const Comodule& m, const QuotSpace& q) {
    const Coalgebra& c = *m.coalgebra;
    if (m.side == Side::left) {
        LinMap co = quotient_coaction(c, m.coaction, q);
        return Comodule(m.coalgebra, q.space, co, Side::left);
    }
    auto sec = q.proj.matrix.solve(Mat::identity(c.field(), q.space.dim()));
    if (!sec) throw std::invalid_argument("quotient_comodule: projection not surjective");
    Mat down = q.proj.matrix.kron(Mat::identity(c.field(), c.dim()));
    Mat mm = down * (m.coaction.matrix * *sec);
    if (!((mm * q.proj.matrix) == (down * m.coaction.matrix)))
        throw std::invalid_argument("quotient_comodule: kernel is not a subcomodule");
    return Comodule(m.coalgebra, q.space, LinMap(q.space, tensor_space(q.space, c.space), mm),
                    Side::right);
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
    if (!same_coalgebra(a.coalgebra, b.coalgebra) || a.side != b.side)
        throw std::invalid_argument("direct_sum: comodule mismatch");
    const Coalgebra& c = *a.coalgebra;
    Field f = a.space.field;
    int da = a.space.dim(), db = b.space.dim(), nc = c.dim();
    VecSpace sp = make_space(f, da + db, "s");
    VecSpace cod = a.side == Side::left ? tensor_space(c.space, sp) : tensor_space(sp, c.space);
    Mat m(f, cod.dim(), da + db);
    auto put = [&](const Mat& src, int dsrc, int off) {
        for (int r = 0; r < src.rows(); ++r)
            for (int j = 0; j < src.cols(); ++j) {
                if (src.entry_zero(r, j)) continue;
                int row;
                if (a.side == Side::left) {
                    int ci = r / dsrc, mi = r % dsrc;
                    row = ci * (da + db) + mi + off;
                } else {
                    int mi = r / nc, ci = r % nc;
                    row = (mi + off) * nc + ci;
                }
                if (f.ch > 0)
                    m.set(row, off + j, src.get_int(r, j));
                else
                    m.set_rat(row, off + j, src.get_rat(r, j));
            }
    };
    put(a.coaction.matrix, da, 0);
    put(b.coaction.matrix, db, da);
    return Comodule(a.coalgebra, sp, LinMap(sp, cod, m), a.side);
}

ComoduleHoms comodule_hom(const Comodule& m, const Comodule& n) {
    if (!same_coalgebra(m.coalgebra, n.coalgebra) || m.side != n.side)
        throw std::invalid_argument("comodule_hom: comodule mismatch");
    const Coalgebra& c = *m.coalgebra;
    std::vector<LinMap> basis;
    if (m.side == Side::left) {
        basis = left_comodule_morphisms(c, m.space, m.coaction, n.space, n.coaction);
    } else {
        LinMap idc = identity_map(c.space);
        LinMap sys = materialize_operator(
            m.space, n.space, m.space, tensor_space(n.space, c.space), [&](const LinMap& phi) {
                return sub(compose(tensor(phi, idc), m.coaction), compose(n.coaction, phi));
            });
        Mat k = sys.matrix.kernel_basis();
        for (int j = 0; j < k.cols(); ++j)
            basis.push_back(hom_from_vec(m.space, n.space, k.cols_selected({j})));
    }
    return ComoduleHoms{make_space(m.space.field, static_cast<int>(basis.size()), "homc"),
                        std::move(basis)};
}

SubSpace cotensor(const Comodule& n_right, const Comodule& m_left) {
    if (n_right.side != Side::right || m_left.side != Side::left)
        throw std::invalid_argument("cotensor: expects a (right, left) pair");
    if (!same_coalgebra(n_right.coalgebra, m_left.coalgebra))
        throw std::invalid_argument("cotensor: different coalgebras");
    LinMap a = tensor(n_right.coaction, identity_map(m_left.space));
    LinMap b = tensor(identity_map(n_right.space), m_left.coaction);
    return kernel(sub(a, b));
}

std::optional<LinMap> injectivity_split(const Comodule& m) {
    const Coalgebra& c = *m.coalgebra;
    if (m.side != Side::left) throw std::invalid_argument("injectivity_split: left comodules only");
    Field f = m.space.field;
    Comodule hull = cofree(m.coalgebra, m.space);
    if (m.space.dim() == 0) return zero_map(hull.space, m.space);
    std::vector<LinMap> homs =
        left_comodule_morphisms(c, hull.space, hull.coaction, m.space, m.coaction);
    int dm = m.space.dim();
    Mat sys(f, dm * dm, static_cast<int>(homs.size()));
    for (size_t b = 0; b < homs.size(); ++b) {
        Mat comp = hom_vec(compose(homs[b], m.coaction));
        for (int r = 0; r < comp.rows(); ++r)
            if (f.ch > 0)
                sys.set(r, static_cast<int>(b), comp.get_int(r, 0));
            else
                sys.set_rat(r, static_cast<int>(b), comp.get_rat(r, 0));
    }
    auto sol = sys.solve(hom_vec(identity_map(m.space)));
    if (!sol) return std::nullopt;
    LinMap sigma = zero_map(hull.space, m.space);
    for (size_t b = 0; b < homs.size(); ++b) {
        if (f.ch > 0) {
            sigma = add(sigma, LinMap(hull.space, m.space,
                                      homs[b].matrix.scaled(sol->get_int(static_cast<int>(b), 0))));
        } else {
            Mat sm(f, homs[b].matrix.rows(), homs[b].matrix.cols());
            for (int i = 0; i < sm.rows(); ++i)
                for (int j = 0; j < sm.cols(); ++j)
                    sm.set_rat(i, j, homs[b].matrix.get_rat(i, j) * sol->get_rat(static_cast<int>(b), 0));
            sigma = add(sigma, LinMap(hull.space, m.space, sm));
        }
    }
    return sigma;
}

bool ComodTag::morphism_to(const TermStructure& next, const LinMap& f) const {
    const auto* n = dynamic_cast<const ComodTag*>(&next);
    if (!n) return false;
    const Comodule& a = m_;
    const Comodule& b = n->m_;
    if (!same_coalgebra(a.coalgebra, b.coalgebra) || a.side != b.side) return false;
    if (a.side == Side::left) {
        LinMap lhs = compose(tensor(identity_map(a.coalgebra->space), f), a.coaction);
        LinMap rhs = compose(b.coaction, f);
        return lhs.matrix == rhs.matrix;
    }
    LinMap lhs = compose(tensor(f, identity_map(a.coalgebra->space)), a.coaction);
    LinMap rhs = compose(b.coaction, f);
    return lhs.matrix == rhs.matrix;
}

Coresolution injective_coresolution(const Comodule& m, int cap) {
    if (m.side != Side::left) throw std::invalid_argument("injective_coresolution: left comodules only");
    AxiomWitness aw = check_comodule(m);
    if (!aw.ok) throw std::invalid_argument("injective_coresolution: comodule axioms fail: " + aw.axiom);

    std::map<int, VecSpace> terms;
    std::map<int, LinMap> diffs;
    std::map<int, TermStructurePtr> tags;
    Coresolution res{Complex(m.space.field), identity_map(m.space), {}, false};

    Comodule cur = m;
    int deg = 0;
    std::optional<LinMap> prev_proj;  // J^{deg-1} ->> cur
    while (cur.space.dim() > 0) {
        if (auto split = injectivity_split(cur)) {
            // cur is injective (split certificate): it closes the coresolution
            terms[deg] = cur.space;
            tags[deg] = std::make_shared<ComodTag>(cur);
            res.terms.push_back(cur);
            if (deg == 0)
                res.augmentation = identity_map(m.space);
            else
                diffs[deg - 1] = *prev_proj;
            res.final_term_split = true;
            break;
        }
        if (deg > cap)
            throw CapExceeded("injective_coresolution: cap exceeded; last cokernel dimension " +
                                  std::to_string(cur.space.dim()),
                              cur.space.dim());
        Comodule hull = cofree(cur.coalgebra, cur.space);
        terms[deg] = hull.space;
        tags[deg] = std::make_shared<ComodTag>(hull);
        res.terms.push_back(hull);
        LinMap emb(cur.space, hull.space, cur.coaction.matrix);  // nu: cur -> C (x) cur
        if (deg == 0)
            res.augmentation = emb;
        else
            diffs[deg - 1] = compose(emb, *prev_proj);
        QuotSpace q = cokernel(emb);
        Comodule next = quotient_comodule(hull, q);
        prev_proj = q.proj;
        cur = next;
        ++deg;
    }
    res.complex = Complex(m.space.field, std::move(terms), std::move(diffs), std::move(tags));
    return res;
}

}  // namespace cocontra
