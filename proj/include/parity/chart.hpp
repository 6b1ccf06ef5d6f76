#pragma once

#include "parity/partition.hpp"
#include "parity/rational.hpp"

#include <string>
#include <vector>

namespace paritygroups {

using RationalVector = std::vector<Rat>;

RationalVector rational_vector_parse(const std::string& text); // "3/4,1/4,5"

/// Coordinates of a point of R^n / JZ^n.
///
/// Per block: the coordinates after the first (the block's smallest axis),
/// each reduced mod 1 into [0,1), and the block coordinate sum reduced mod 2
/// into [0,2). "mod" is the canonical congruence-class residue, which keeps
/// the map a homomorphism on negative coordinates.
struct BlockChart {
    std::vector<Rat> residues; // n_i - 1 values in [0,1)
    Rat blocksum;              // in [0,2)

    bool operator==(const BlockChart& o) const = default;
};

struct Chart {
    std::vector<BlockChart> blocks;

    bool operator==(const Chart& o) const = default;
};

Chart chart(const RationalVector& x, const PartitionSpec& J);

/// Componentwise sum of charts (residues mod 1, block sums mod 2); the chart
/// map is a homomorphism onto this addition.
Chart chart_add(const Chart& a, const Chart& b);

/// Spherical angles of one block, as exact rational multiples of pi:
/// phi = pi * blocksum in [0,2pi), theta_k = pi * residue_k in [0,pi).
struct SphericalAngles {
    std::vector<Rat> theta;
    Rat phi;
};

SphericalAngles spherical(const Chart& c, int block_index); // 1-based

/// chart(x) == chart(y); equivalently x - y is integral with even block sums.
bool chart_equiv(const RationalVector& x, const RationalVector& y, const PartitionSpec& J);

} // namespace paritygroups
