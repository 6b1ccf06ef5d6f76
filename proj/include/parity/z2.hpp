#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paritygroups {

/// Vector over the two-element field, packed into a mask (bit j-1 = axis j).
struct Z2Vector {
    int n = 0;
    std::uint32_t bits = 0;

    int bit(int j) const { return (bits >> (j - 1)) & 1u; }
    bool operator==(const Z2Vector& o) const = default;
    std::string str() const; // "(1,0,1)"
};

Z2Vector z2_from_list(const std::vector<int>& bits);

/// Sum of the bits mod 2.
int z2_parity(const Z2Vector& v);

struct Z2SpanReport {
    int n = 0;
    std::uint64_t even_subgroup_order = 0; // |AZ_2^n| by direct enumeration
    std::uint64_t pair_span_order = 0;     // span of all two-coordinate (1,1) vectors
    bool spans_match = false;              // set equality, not just equal orders
};

/// Checks that the even-weight subgroup of Z_2^n equals the span of the
/// pair vectors e_a + e_b. Supported for n <= 20.
Z2SpanReport z2_pair_span_check(int n);

} // namespace paritygroups
