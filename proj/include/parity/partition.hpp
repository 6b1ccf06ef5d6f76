#pragma once

#include <string>
#include <vector>

namespace paritygroups {

/// Ordered partition J = {I_1, ..., I_m} of the axis set {1..n}.
/// Blocks are disjoint, internally sorted ascending, and cover {1..n}.
class PartitionSpec {
public:
    explicit PartitionSpec(std::vector<std::vector<int>> blocks);

    /// Blocks of the given sizes on consecutive ascending axes:
    /// sizes {2,1} gives I_1 = {1,2}, I_2 = {3}.
    static PartitionSpec from_sizes(const std::vector<int>& sizes);

    /// CLI grammar: comma-separated block sizes, e.g. "2,1".
    static PartitionSpec parse(const std::string& text);

    int n() const { return n_; }
    int m() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i - 1]; } // 1-based
    int block_size(int i) const { return static_cast<int>(blocks_[i - 1].size()); }
    int block_of_axis(int j) const { return axis_block_[j - 1]; }
    /// Ordinal (1-based) of axis j within its block.
    int ordinal_in_block(int j) const { return axis_ordinal_[j - 1]; }

    bool all_blocks_odd() const;
    std::vector<int> sizes() const;
    std::string text() const; // "2,1"

    bool operator==(const PartitionSpec& o) const { return blocks_ == o.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> axis_block_;
    std::vector<int> axis_ordinal_;
};

/// All ordered size lists (compositions) of n, lexicographic. Every partition
/// shape of n appears among them; used by the verification sweeps.
std::vector<std::vector<int>> compositions_of(int n);

} // namespace paritygroups
