#pragma once

#include "parity/element_set.hpp"
#include "parity/partition.hpp"
#include "parity/signed_perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paritygroups {

/// Element of the abstract group JP_n = (CP_{n_1} x ... x CP_{n_m}) |x BP_m.
///
/// components[i] lives in CP_{n_{i+1}} (Type3 parity +1), block_signs is the
/// sign tuple of the BP_m part (product +1), block_perm its permutation part.
/// block_perm is restricted to size-preserving block permutations; the sign
/// tuple acts trivially on the components (the BP_m action factors through
/// its S_m quotient).
struct JPElement {
    std::vector<SignedPermutation> components;
    std::vector<int> block_signs; // +1/-1 per block
    std::vector<int> block_perm;  // 1-based images

    bool operator==(const JPElement& o) const
    {
        return components == o.components && block_signs == o.block_signs
            && block_perm == o.block_perm;
    }
};

void jp_validate(const PartitionSpec& J, const JPElement& e);

JPElement jp_identity(const PartitionSpec& J);
JPElement jp_compose(const PartitionSpec& J, const JPElement& a, const JPElement& b);
JPElement jp_inverse(const PartitionSpec& J, const JPElement& a);

std::uint64_t jp_order(const PartitionSpec& J);

/// All elements, in a deterministic canonical order.
std::vector<JPElement> jp_enumerate(const PartitionSpec& J, const Caps& caps = {});

/// Comparable/hashable canonical key.
std::string jp_key(const JPElement& e);
std::string jp_encode(const JPElement& e);

/// The size-preserving block permutations of J, lexicographic.
std::vector<std::vector<int>> size_preserving_block_perms(const PartitionSpec& J);

} // namespace paritygroups
