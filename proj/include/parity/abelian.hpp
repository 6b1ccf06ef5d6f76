#pragma once

#include "parity/partition.hpp"
#include "parity/rational.hpp"
#include "parity/z2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace paritygroups {

using IntegerVector = std::vector<Int>;

IntegerVector integer_vector_parse(const std::string& text); // "1,-2,3"

/// Parity of an integer vector: sum of the entries mod 2.
int int_parity(const IntegerVector& x);

/// AZ^n: total sum even.
bool member_A(const IntegerVector& x);
/// BZ^n = (2Z)^n: every entry even.
bool member_B(const IntegerVector& x);
/// JZ^n = AZ^{n_1} x ... x AZ^{n_m}: every block sum even.
bool member_J(const IntegerVector& x, const PartitionSpec& J);

/// Canonical projection Z^n -> Z^n / JZ^n = Z_2^m: bit i is the parity of
/// the block-i sum.
Z2Vector project_node(const IntegerVector& x, const PartitionSpec& J);

struct QuotientGroupInfo {
    int m = 0;
    std::uint64_t order = 0;                              // 2^m
    std::optional<std::vector<std::vector<int>>> table;   // full addition table when m <= table_limit
    std::string generator_note;                           // description used above the limit
    bool all_self_inverse = false;
};

/// The quotient group Z^n / JZ^n as an explicit Z_2^m table (m <= 20).
QuotientGroupInfo quotient_table(const PartitionSpec& J, int table_limit_m = 6);

} // namespace paritygroups
