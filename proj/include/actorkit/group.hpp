#pragma once

// Finite groups by Cayley table, written additively: op(a, b) = a + b.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "actorkit/report.hpp"

namespace actorkit {

struct Group {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    std::vector<std::string> names;

    std::size_t op(std::size_t a, std::size_t b) const { return table[a][b]; }
    std::size_t element_order(std::size_t a) const;
    bool is_abelian() const;
};

// Validates exhaustively. Throws InputError on a non-square or out-of-range
// table, a non-Latin square, a missing identity or inverse, or a
// non-associative triple.
Group make_group(const std::vector<std::vector<long long>>& table, std::vector<std::string> names = {});

// Greedy generating set: each new generator maximizes the subgroup reached.
std::vector<std::size_t> generators(const Group& g);

struct AutGroup {
    std::vector<std::vector<std::size_t>> perms;  // perms[s][a] = s(a), sorted, identity first
    Group group;                                  // op(s, t) = s after t
};

// Throws CapExceeded when |G| > order_cap or |Aut(G)| > aut_cap.
AutGroup automorphisms(const Group& g, std::size_t order_cap = 24, std::size_t aut_cap = 5040);

struct InnerAut {
    std::vector<std::size_t> tau;       // tau[c] = index in Aut of a -> c + a - c
    std::vector<std::size_t> subgroup;  // sorted distinct indices of Inn(G)
    std::vector<std::size_t> kernel;    // the center
};

InnerAut inner_automorphisms(const Group& g, const AutGroup& aut);
inline InnerAut inner_automorphisms(const Group& g) { return inner_automorphisms(g, automorphisms(g)); }

// Holomorph Aut(G) x G with (s',a') + (s,a) = (s's, a' + s'(a)); checks the
// group axioms, the crossed module G -> Aut(G) and both rows of the
// Inn/Aut/Out diagram for G normal in the holomorph.
Report holomorph_check(const Group& g, std::size_t order_cap = 24);

// Every action of every group B of order <= max_b on g, enumerated as
// homomorphisms B -> Aut(g), must factor through exactly one phi.
Report group_universality_check(const Group& g, std::size_t max_b = 6);

namespace groups {

Group trivial();
Group cyclic(std::size_t n);
Group klein();
Group dihedral(std::size_t n);  // order 2n
Group quaternion();
Group direct_product(const Group& a, const Group& b);
// The 14 groups of order <= 8 up to isomorphism, filtered by max_order.
std::vector<std::pair<std::string, Group>> small_groups(std::size_t max_order = 8);
// Named lookup: trivial, Zn, V4, S3, D4, Q8, Z4xZ2, Z2^3. Throws InputError.
Group by_name(const std::string& name);

}  // namespace groups

}  // namespace actorkit
