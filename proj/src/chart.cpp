#include "parity/chart.hpp"

#include <stdexcept>

namespace paritygroups {

RationalVector rational_vector_parse(const std::string& text)
{
    RationalVector out;
    std::size_t pos = 0;
    if (text.empty())
        throw std::invalid_argument("empty rational vector");
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        out.push_back(rat_parse(text.substr(pos, next == std::string::npos ? next : next - pos)));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

Chart chart(const RationalVector& x, const PartitionSpec& J)
{
    if (static_cast<int>(x.size()) != J.n())
        throw std::invalid_argument("vector length " + std::to_string(x.size())
                                    + " does not match partition degree " + std::to_string(J.n()));
    Chart c;
    for (int i = 1; i <= J.m(); ++i) {
        BlockChart bc;
        const auto& axes = J.block(i); // sorted; axes[0] is the block's first coordinate
        Rat sum = 0;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            sum += x[axes[k] - 1];
            if (k > 0)
                bc.residues.push_back(rat_mod(x[axes[k] - 1], 1));
        }
        bc.blocksum = rat_mod(sum, 2);
        c.blocks.push_back(std::move(bc));
    }
    return c;
}

Chart chart_add(const Chart& a, const Chart& b)
{
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("chart_add: block count mismatch");
    Chart r;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        const auto& ba = a.blocks[i];
        const auto& bb = b.blocks[i];
        if (ba.residues.size() != bb.residues.size())
            throw std::invalid_argument("chart_add: block size mismatch");
        BlockChart bc;
        for (std::size_t k = 0; k < ba.residues.size(); ++k)
            bc.residues.push_back(rat_mod(ba.residues[k] + bb.residues[k], 1));
        bc.blocksum = rat_mod(ba.blocksum + bb.blocksum, 2);
        r.blocks.push_back(std::move(bc));
    }
    return r;
}

SphericalAngles spherical(const Chart& c, int block_index)
{
    if (block_index < 1 || block_index > static_cast<int>(c.blocks.size()))
        throw std::invalid_argument("spherical: block index out of range");
    const BlockChart& bc = c.blocks[block_index - 1];
    SphericalAngles a;
    a.phi = bc.blocksum;      // multiple of pi in [0,2)
    a.theta = bc.residues;    // multiples of pi in [0,1)
    return a;
}

bool chart_equiv(const RationalVector& x, const RationalVector& y, const PartitionSpec& J)
{
    if (x.size() != y.size())
        throw std::invalid_argument("chart_equiv: vector length mismatch");
    return chart(x, J) == chart(y, J);
}

} // namespace paritygroups
