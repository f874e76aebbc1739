#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace falc {

/// All residues in [1, n) coprime to n, ascending.
std::vector<long> units_modulo(long n);

/// A subgroup of the unit group (Z/N)*, stored as a sorted list of residues.
struct UnitSubgroup {
    long modulus = 1;
    std::vector<long> members{1};

    long order() const { return static_cast<long>(members.size()); }

    bool contains(long r) const {
        r %= modulus;
        if (r < 0) r += modulus;
        return std::binary_search(members.begin(), members.end(), r);
    }

    /// Index in the full unit group; equals the degree of the fixed field.
    long index() const {
        return static_cast<long>(units_modulo(modulus).size()) / order();
    }

    /// Membership closed under products and inverses, contains 1.
    bool is_subgroup() const;

    /// True when every member of `other` (same modulus) belongs to this group.
    bool contains_subgroup(const UnitSubgroup& other) const;

    /// Preimage under the reduction map (Z/level)* -> (Z/modulus)*;
    /// level must be a multiple of modulus.
    UnitSubgroup preimage_at(long level) const;

    friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
        return a.modulus == b.modulus && a.members == b.members;
    }
};

inline std::vector<long> units_modulo(long n) {
    if (n < 1) throw std::invalid_argument("units_modulo: modulus must be positive");
    std::vector<long> u;
    for (long a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) u.push_back(a);
    if (n == 1) u.push_back(0);  // trivial group, represented by the residue of 1
    return u;
}

inline bool UnitSubgroup::is_subgroup() const {
    if (members.empty() || !contains(1 % modulus)) return false;
    for (long a : members) {
        if (modulus > 1 && std::gcd(a, modulus) != 1) return false;
        for (long b : members)
            if (!contains((a * b) % std::max<long>(modulus, 1))) return false;
    }
    return true;
}

inline bool UnitSubgroup::contains_subgroup(const UnitSubgroup& other) const {
    if (modulus != other.modulus) return false;
    for (long a : other.members)
        if (!contains(a)) return false;
    return true;
}

inline UnitSubgroup UnitSubgroup::preimage_at(long level) const {
    if (level % modulus != 0)
        throw std::invalid_argument("UnitSubgroup: level must be a multiple of the modulus");
    UnitSubgroup g;
    g.modulus = level;
    g.members.clear();
    for (long a : units_modulo(level))
        if (contains(a % modulus)) g.members.push_back(a);
    return g;
}

}  // namespace falc
