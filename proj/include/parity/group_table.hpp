#pragma once

#include "parity/element_set.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace paritygroups {

/// Finite group as a multiplication table over element indices 0..order-1.
struct GroupTable {
    int order = 0;
    int identity = -1;
    std::vector<std::uint16_t> mul; // row-major, mul[a*order+b] = a*b
    std::vector<std::uint16_t> inv;
    std::vector<int> element_order;

    int compose(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }

    /// Builds the table from a compose function on indices and derives the
    /// identity, inverses and element orders. Throws if the function is not
    /// a group law on {0..n-1}.
    static GroupTable build(std::size_t n, const std::function<int(int, int)>& compose_fn);

    std::vector<int> order_histogram() const; // histogram[k] = #elements of order k
};

GroupTable group_table_from(const ElementSet& s);

/// Isomorphism search by generator-image backtracking with element-order and
/// centralizer-size fingerprint pruning. Returns an index mapping G -> H if
/// the groups are isomorphic, std::nullopt otherwise. Deterministic.
std::optional<std::vector<int>> isomorphic(const GroupTable& g, const GroupTable& h,
                                           const Caps& caps = {});

} // namespace paritygroups
