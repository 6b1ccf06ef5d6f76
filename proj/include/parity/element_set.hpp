#pragma once

#include "parity/signed_perm.hpp"

#include <cstddef>
#include <vector>

namespace paritygroups {

/// Enumeration limits. Defaults are the documented desk-scale caps; the CLI
/// can override any of them.
struct Caps {
    std::size_t closure_limit = 10'000'000;
    std::size_t jp_limit = 1'000'000;
    std::size_t candidate_limit = 1'000'000; // lattice automorphism candidates
    int enumeration_degree = 8;              // max n for P_n / kernel enumeration
    std::size_t iso_limit = 5000;
};

/// Deduplicated collection of equal-degree signed permutations, kept in the
/// canonical order (lexicographic on images, then signs with +1 < -1).
class ElementSet {
public:
    ElementSet(int degree, std::vector<SignedPermutation> elems);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const SignedPermutation& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<SignedPermutation>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const SignedPermutation& g) const;
    /// Index of g in canonical order, or -1.
    long index_of(const SignedPermutation& g) const;

    /// Contains the identity and is closed under compose and inverse.
    bool is_group() const;

    bool operator==(const ElementSet& o) const
    {
        return degree_ == o.degree_ && elems_ == o.elems_;
    }

private:
    int degree_;
    std::vector<SignedPermutation> elems_;
};

/// Smallest group containing the generators, by breadth-first product
/// closure. Output is canonical regardless of generator order.
ElementSet closure(const std::vector<SignedPermutation>& gens, const Caps& caps = {});

/// All 2^n n! elements of P_n.
ElementSet enumerate_pn(int n, const Caps& caps = {});

/// Kernel of the parity homomorphism of the given kind in P_n.
ElementSet kernel(int n, ParityKind kind, const Caps& caps = {});

enum class SubgroupKind { AP, BP, CP };
const char* subgroup_kind_name(SubgroupKind k);

/// The standard subgroups built structurally (not by filtering on parity):
/// AP = even permutations x all signs, BP = all permutations x even sign
/// vectors, CP = permutation and sign parities matched.
ElementSet standard_subgroup(SubgroupKind kind, int n, const Caps& caps = {});

enum class EmbeddedKind { AP3, BP2, CP2 };

/// For every axis pair (or triple), the nontrivial elements of the small
/// group embedded on those axes with identity elsewhere.
std::vector<SignedPermutation> embedded_generators(EmbeddedKind kind, int n);

} // namespace paritygroups
