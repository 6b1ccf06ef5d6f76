#include "parity/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

PartitionSpec::PartitionSpec(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks))
{
    if (blocks_.empty())
        throw std::invalid_argument("partition must have at least one block");
    for (auto& b : blocks_) {
        if (b.empty())
            throw std::invalid_argument("partition blocks must be nonempty");
        if (!std::is_sorted(b.begin(), b.end()))
            std::sort(b.begin(), b.end());
        n_ += static_cast<int>(b.size());
    }
    axis_block_.assign(n_, 0);
    axis_ordinal_.assign(n_, 0);
    for (int i = 0; i < m(); ++i) {
        for (std::size_t k = 0; k < blocks_[i].size(); ++k) {
            int axis = blocks_[i][k];
            if (axis < 1 || axis > n_)
                throw std::invalid_argument("partition axis " + std::to_string(axis) + " out of range");
            if (axis_block_[axis - 1] != 0)
                throw std::invalid_argument("partition blocks overlap at axis " + std::to_string(axis));
            axis_block_[axis - 1] = i + 1;
            axis_ordinal_[axis - 1] = static_cast<int>(k) + 1;
        }
    }
    // covering follows: n axes, n slots, no overlap
}

PartitionSpec PartitionSpec::from_sizes(const std::vector<int>& sizes)
{
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int s : sizes) {
        if (s < 1)
            throw std::invalid_argument("block sizes must be positive");
        std::vector<int> b(s);
        for (int k = 0; k < s; ++k)
            b[k] = next++;
        blocks.push_back(std::move(b));
    }
    return PartitionSpec(std::move(blocks));
}

PartitionSpec PartitionSpec::parse(const std::string& text)
{
    std::vector<int> sizes;
    std::size_t pos = 0;
    if (text.empty())
        throw std::invalid_argument("empty partition");
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition \"" + text + "\"");
        }
        if (used != tok.size() || v < 1)
            throw std::invalid_argument("invalid partition \"" + text + "\": block sizes must be positive integers");
        if (v > 64 || sizes.size() > 64)
            throw std::invalid_argument("partition too large");
        sizes.push_back(v);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return from_sizes(sizes);
}

bool PartitionSpec::all_blocks_odd() const
{
    for (const auto& b : blocks_)
        if (b.size() % 2 == 0)
            return false;
    return true;
}

std::vector<int> PartitionSpec::sizes() const
{
    std::vector<int> s;
    s.reserve(blocks_.size());
    for (const auto& b : blocks_)
        s.push_back(static_cast<int>(b.size()));
    return s;
}

std::string PartitionSpec::text() const
{
    std::ostringstream out;
    for (int i = 1; i <= m(); ++i)
        out << (i > 1 ? "," : "") << block_size(i);
    return out.str();
}

std::vector<std::vector<int>> compositions_of(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // each composition <-> subset of the n-1 gaps
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        cur.clear();
        int run = 1;
        for (int gap = 0; gap < n - 1; ++gap) {
            if (mask & (1 << gap)) {
                cur.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        cur.push_back(run);
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace paritygroups
