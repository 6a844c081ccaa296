#include "cocontra/groups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cocontra {

int FiniteGroup::inv(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) == 0) return b;
    throw std::invalid_argument("FiniteGroup::inv: no inverse; invalid group table");
}

void FiniteGroup::validate() const {
    int n = order();
    if (n == 0) throw std::invalid_argument("invalid group table: empty");
    for (auto& row : table)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("invalid group table: ragged");
    for (auto& row : table)
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("invalid group table: entry out of range");
    for (int a = 0; a < n; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument("invalid group table: 0 is not an identity");
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n; ++b) has_inv |= mul(a, b) == 0;
        if (!has_inv) throw std::invalid_argument("invalid group table: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("invalid group table: not associative");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    FiniteGroup g;
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    FiniteGroup g;
    g.table.assign(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            g.table[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    return g;
}

FiniteGroup FiniteGroup::symmetric3() {
    // elements: permutations of {0,1,2} in lexicographic one-line order,
    // relabeled so that the identity is element 0
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    FiniteGroup g;
    int n = 6;
    g.table.assign(n, std::vector<int>(n));
    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(3);
        for (int i = 0; i < 3; ++i) r[i] = p[q[i]];
        return r;
    };
    auto find = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = find(compose(perms[a], perms[b]));
    return g;
}

FiniteGroup FiniteGroup::dihedral4() {
    // r^4 = s^2 = e, s r s = r^-1; element = i + 4*j for r^i s^j
    FiniteGroup g;
    g.table.assign(8, std::vector<int>(8));
    auto idx = [](int i, int j) { return ((i % 4 + 4) % 4) + 4 * (j % 2); };
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    g.table[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 + j2);
                }
    return g;
}

FiniteGroup FiniteGroup::quaternion8() {
    // {1,-1,i,-i,j,-j,k,-k} -> indices 0..7: 1,-1,i,-i,j,-j,k,-k
    auto neg = [](int x) { return x ^ 1; };
    FiniteGroup g;
    g.table.assign(8, std::vector<int>(8));
    // base products on {1=0, i=2, j=4, k=6}
    auto base_mul = [&](int a, int b) -> int {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) return 1;  // i*i = j*j = k*k = -1
        // i*j=k, j*k=i, k*i=j and anti-symmetry
        if (a == 2 && b == 4) return 6;
        if (a == 4 && b == 6) return 2;
        if (a == 6 && b == 2) return 4;
        if (a == 4 && b == 2) return 7;
        if (a == 6 && b == 4) return 3;
        if (a == 2 && b == 6) return 5;
        throw std::logic_error("quaternion8");
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sign = (a & 1) ^ (b & 1);
            int r = base_mul(a & ~1, b & ~1);
            g.table[a][b] = sign ? neg(r) : r;
        }
    return g;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> s{0};
    s.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (int a : elems)
        for (int b : elems)
            if (!s.count(g.mul(a, b))) return false;
    return true;
}

}  // namespace cocontra
