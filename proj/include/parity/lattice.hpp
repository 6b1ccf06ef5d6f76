#pragma once

#include "parity/element_set.hpp"
#include "parity/group_table.hpp"
#include "parity/jp_group.hpp"
#include "parity/partition.hpp"
#include "parity/signed_perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paritygroups {

/// Circle of a quotient-lattice complex: the image of the axis-j line class
/// whose other block coordinates sit at `other_bits` (full m-bit mask with
/// the circle's own block bit zeroed). A Circle2 meets the two nodes
/// other_bits | {0,1} << (block-1); a ProjLine loops at the single node.
struct LatticeCircle {
    int block = 0; // 1-based
    int axis = 0;  // 1-based, axis in block
    std::uint32_t other_bits = 0;

    bool operator==(const LatticeCircle& o) const = default;
};

enum class CircleKind { Circle2, ProjLine };

/// Finite node/circle model of the quotient lattice L^n / JZ^n
/// (kind Circle2: 2^m nodes, n * 2^{m-1} circles, circumference-2 circles
/// admitting only the +1 multiplier), or of L^n / Z^n
/// (kind ProjLine: one node, n projective-line loops admitting +-1).
struct QuotientComplex {
    PartitionSpec J;
    CircleKind kind = CircleKind::Circle2;
    std::vector<std::uint32_t> nodes;  // all m-bit masks (one zero mask for ProjLine)
    std::vector<LatticeCircle> circles;

    int n() const { return J.n(); }
    int m() const { return J.m(); }
    /// Admissible circle multipliers: {+1} for Circle2, {+1,-1} for ProjLine.
    std::vector<int> admissible_multipliers() const
    {
        return kind == CircleKind::Circle2 ? std::vector<int>{1} : std::vector<int>{1, -1};
    }
    /// The (at most two distinct) nodes met by a circle.
    std::pair<std::uint32_t, std::uint32_t> circle_nodes(const LatticeCircle& c) const;
    /// Circles incident to a node, one per axis, in axis order.
    std::vector<LatticeCircle> node_circles(std::uint32_t node) const;
};

QuotientComplex build_complex(const PartitionSpec& J); // m <= 10, n <= 10

/// L^n / Z^n: a single node carrying n projective-line loops.
QuotientComplex build_full_quotient(int n);

/// Based self-map of the complex induced by an affine signed-permutation map
/// of the covering lattice: a size-preserving block permutation tau, an axis
/// bijection s mapping each I_i onto I_{tau(i)}, and per-axis orientation
/// signs. (s, eps) together form one signed permutation of degree n.
struct BasedAutomorphism {
    std::vector<int> block_perm;  // tau, 1-based images
    SignedPermutation axis_map;   // s with the orientation signs eps

    bool operator==(const BasedAutomorphism& o) const
    {
        return block_perm == o.block_perm && axis_map == o.axis_map;
    }
    bool operator<(const BasedAutomorphism& o) const
    {
        if (!(block_perm == o.block_perm))
            return block_perm < o.block_perm;
        return axis_map < o.axis_map;
    }
};

/// Composition (a after b); the axis maps compose as signed permutations.
BasedAutomorphism compose(const BasedAutomorphism& a, const BasedAutomorphism& b);
BasedAutomorphism automorphism_identity(const PartitionSpec& J);
std::string encode(const BasedAutomorphism& a);

/// All candidate triples (tau, s, eps); count = |size-preserving tau| * prod(n_i!) * 2^n.
std::vector<BasedAutomorphism> candidate_automorphisms(const QuotientComplex& complex,
                                                       const Caps& caps = {});

/// Discrete-rotation predicate. For a ProjLine complex every candidate is a
/// rotation. For a Circle2 complex: every even-size block i must satisfy
/// sgn(s_i) * prod_{j in I_i} eps_j = +1, and when all blocks have odd size
/// the product of those per-block values must be +1 globally.
bool is_rotation(const BasedAutomorphism& a, const QuotientComplex& complex);

std::vector<BasedAutomorphism> rotation_group(const QuotientComplex& complex,
                                              const Caps& caps = {});

/// The automorphism induced by a JP element: tau from the element, block i
/// receiving component c_{tau(i)} by ordinal identification, and
/// eps_j = (component sign at j) * delta_{target block}.
BasedAutomorphism jp_action(const PartitionSpec& J, const JPElement& e);

std::uint32_t apply_node(const BasedAutomorphism& a, const QuotientComplex& complex,
                         std::uint32_t node);
LatticeCircle apply_circle(const BasedAutomorphism& a, const QuotientComplex& complex,
                           const LatticeCircle& c);

struct Prop1Report {
    PartitionSpec partition;
    std::uint64_t jp_order = 0;
    std::uint64_t image_order = 0;
    std::uint64_t kernel_order = 0;
    std::uint64_t rotation_order = 0;
    bool predicate_equals_image = false; // jp_action image == predicate rotation group, as sets
    bool iso_check = false;              // JP/kernel isomorphic to the rotation group
    std::string note;                    // records the size-preserving tau restriction
};

/// Checks Proposition 1 for one partition: enumerates JP, its action image,
/// the action kernel and the predicate rotation group, validates the action
/// is a homomorphism (aborts with diagnostics if not), and runs the
/// independent isomorphism search between JP/kernel and the rotations.
Prop1Report verify_prop1(const PartitionSpec& J, const Caps& caps = {});

struct FullQuotientReport {
    int n = 0;
    std::uint64_t order = 0; // 2^n n!
    bool iso_checked = false;
    bool isomorphic_to_pn = false;
};

/// Automorphism group of L^n / Z^n, checked against P_n.
FullQuotientReport full_quotient_automorphisms(int n, const Caps& caps = {});

} // namespace paritygroups
