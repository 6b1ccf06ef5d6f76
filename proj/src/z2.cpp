#include "parity/z2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

std::string Z2Vector::str() const
{
    std::ostringstream out;
    out << "(";
    for (int j = 1; j <= n; ++j)
        out << (j > 1 ? "," : "") << bit(j);
    out << ")";
    return out.str();
}

Z2Vector z2_from_list(const std::vector<int>& bits)
{
    if (bits.empty() || bits.size() > 32)
        throw std::invalid_argument("Z2Vector length must be 1..32");
    Z2Vector v;
    v.n = static_cast<int>(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != 0 && bits[j] != 1)
            throw std::invalid_argument("Z2Vector entries must be 0 or 1");
        v.bits |= static_cast<std::uint32_t>(bits[j]) << j;
    }
    return v;
}

int z2_parity(const Z2Vector& v)
{
    return std::popcount(v.bits) & 1;
}

Z2SpanReport z2_pair_span_check(int n)
{
    if (n < 1 || n > 20)
        throw std::invalid_argument("z2_pair_span_check supports n in 1..20");
    Z2SpanReport rep;
    rep.n = n;

    // even-weight subgroup, enumerated directly
    std::vector<bool> even(1u << n, false);
    for (std::uint32_t v = 0; v < (1u << n); ++v)
        if ((std::popcount(v) & 1) == 0) {
            even[v] = true;
            ++rep.even_subgroup_order;
        }

    // GF(2) span of all pair vectors, grown one generator at a time
    std::vector<std::uint32_t> span{0};
    std::vector<bool> in_span(1u << n, false);
    in_span[0] = true;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            std::uint32_t gen = (1u << (a - 1)) | (1u << (b - 1));
            if (in_span[gen])
                continue;
            std::size_t old = span.size();
            for (std::size_t i = 0; i < old; ++i) {
                std::uint32_t w = span[i] ^ gen;
                if (!in_span[w]) {
                    in_span[w] = true;
                    span.push_back(w);
                }
            }
        }
    }
    rep.pair_span_order = span.size();
    rep.spans_match = true;
    for (std::uint32_t v = 0; v < (1u << n); ++v)
        if (in_span[v] != even[v])
            rep.spans_match = false;
    return rep;
}

} // namespace paritygroups
