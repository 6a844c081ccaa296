#pragma once

#include <string>
#include <vector>

namespace cocontra {

/// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::vector<std::vector<int>> table;

    int order() const { return static_cast<int>(table.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const;

    /// Throws std::invalid_argument when the table is not a group table with
    /// identity 0.
    void validate() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup symmetric3();
    static FiniteGroup dihedral4();   // order 8
    static FiniteGroup quaternion8();
};

/// Subgroup as a sorted list of element indices; validated to be closed.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

}  // namespace cocontra
