#include "parity/jp_group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

void jp_validate(const PartitionSpec& J, const JPElement& e)
{
    const int m = J.m();
    if (static_cast<int>(e.components.size()) != m || static_cast<int>(e.block_signs.size()) != m
        || static_cast<int>(e.block_perm.size()) != m)
        throw std::invalid_argument("JP element has wrong block count for partition " + J.text());
    int prod = 1;
    std::vector<bool> seen(m, false);
    for (int i = 1; i <= m; ++i) {
        const auto& c = e.components[i - 1];
        if (c.degree() != J.block_size(i))
            throw std::invalid_argument("JP component " + std::to_string(i) + " degree mismatch");
        if (parity(c, ParityKind::Type3) != 1)
            throw std::invalid_argument("JP component " + std::to_string(i) + " not in CP (Type3 parity -1)");
        int s = e.block_signs[i - 1];
        if (s != 1 && s != -1)
            throw std::invalid_argument("JP block sign must be +1 or -1");
        prod *= s;
        int t = e.block_perm[i - 1];
        if (t < 1 || t > m || seen[t - 1])
            throw std::invalid_argument("JP block permutation is not a bijection");
        seen[t - 1] = true;
        if (J.block_size(t) != J.block_size(i))
            throw std::invalid_argument("JP block permutation must preserve block sizes");
    }
    if (prod != 1)
        throw std::invalid_argument("JP block signs must have product +1");
}

JPElement jp_identity(const PartitionSpec& J)
{
    JPElement e;
    for (int i = 1; i <= J.m(); ++i) {
        e.components.push_back(SignedPermutation::identity(J.block_size(i)));
        e.block_signs.push_back(1);
        e.block_perm.push_back(i);
    }
    return e;
}

JPElement jp_compose(const PartitionSpec& J, const JPElement& a, const JPElement& b)
{
    const int m = J.m();
    std::vector<int> tau_a_inv(m);
    for (int i = 1; i <= m; ++i)
        tau_a_inv[a.block_perm[i - 1] - 1] = i;

    // (c,d,t)(c',d',t') = (c * t(c'), d * t(d'), t o t') with t(c')_i = c'_{t^-1(i)}
    JPElement r;
    r.components.reserve(m);
    for (int i = 1; i <= m; ++i) {
        int src = tau_a_inv[i - 1];
        r.components.push_back(compose(a.components[i - 1], b.components[src - 1]));
        r.block_signs.push_back(a.block_signs[i - 1] * b.block_signs[src - 1]);
    }
    r.block_perm.resize(m);
    for (int i = 1; i <= m; ++i)
        r.block_perm[i - 1] = a.block_perm[b.block_perm[i - 1] - 1];
    return r;
}

JPElement jp_inverse(const PartitionSpec& J, const JPElement& a)
{
    const int m = J.m();
    JPElement r;
    r.components.resize(m, SignedPermutation::identity(1));
    r.block_signs.resize(m);
    r.block_perm.resize(m);
    for (int i = 1; i <= m; ++i) {
        int t = a.block_perm[i - 1];
        r.block_perm[t - 1] = i;
        r.components[i - 1] = inverse(a.components[t - 1]);
        r.block_signs[i - 1] = a.block_signs[t - 1];
    }
    return r;
}

std::vector<std::vector<int>> size_preserving_block_perms(const PartitionSpec& J)
{
    const int m = J.m();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i)
        perm[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i)
            ok = J.block_size(perm[i - 1]) == J.block_size(i);
        if (ok)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint64_t jp_order(const PartitionSpec& J)
{
    if (J.n() > kMaxDegree)
        throw std::invalid_argument("jp_order: partition degree exceeds " + std::to_string(kMaxDegree));
    std::uint64_t order = 1;
    for (int i = 1; i <= J.m(); ++i) {
        std::uint64_t cp = 1; // |CP_k| = 2^k k! / 2 for k >= 2, 1 for k = 1
        int k = J.block_size(i);
        for (int j = 2; j <= k; ++j)
            cp *= j;
        if (k >= 2)
            cp <<= (k - 1);
        order *= cp;
    }
    order <<= (J.m() - 1); // even sign tuples
    return order * size_preserving_block_perms(J).size();
}

std::vector<JPElement> jp_enumerate(const PartitionSpec& J, const Caps& caps)
{
    if (jp_order(J) > caps.jp_limit)
        throw std::length_error("jp_enumerate: order " + std::to_string(jp_order(J))
                                + " exceeds cap");
    const int m = J.m();
    std::vector<ElementSet> cp_blocks;
    for (int i = 1; i <= m; ++i)
        cp_blocks.push_back(standard_subgroup(SubgroupKind::CP, J.block_size(i)));

    std::vector<JPElement> out;
    for (const auto& tau : size_preserving_block_perms(J)) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) % 2 != 0)
                continue;
            std::vector<int> signs(m);
            for (int i = 0; i < m; ++i)
                signs[i] = (mask >> (m - 1 - i)) & 1u ? -1 : 1;
            // odometer over the CP components, last block fastest
            std::vector<std::size_t> idx(m, 0);
            for (;;) {
                JPElement e;
                for (int i = 0; i < m; ++i)
                    e.components.push_back(cp_blocks[i][idx[i]]);
                e.block_signs = signs;
                e.block_perm = tau;
                out.push_back(std::move(e));
                int pos = m - 1;
                while (pos >= 0 && ++idx[pos] == cp_blocks[pos].size()) {
                    idx[pos] = 0;
                    --pos;
                }
                if (pos < 0)
                    break;
            }
        }
    }
    return out;
}

std::string jp_key(const JPElement& e)
{
    std::ostringstream out;
    for (const auto& c : e.components)
        out << c.key() << ".";
    out << "|";
    for (int s : e.block_signs)
        out << (s > 0 ? "+" : "-");
    out << "|";
    for (int t : e.block_perm)
        out << t << ".";
    return out.str();
}

std::string jp_encode(const JPElement& e)
{
    std::ostringstream out;
    out << "c:(";
    for (std::size_t i = 0; i < e.components.size(); ++i)
        out << (i ? " | " : "") << encode(e.components[i]);
    out << ");δ:[";
    for (std::size_t i = 0; i < e.block_signs.size(); ++i)
        out << (i ? "," : "") << (e.block_signs[i] > 0 ? "+1" : "-1");
    out << "];τ:[";
    for (std::size_t i = 0; i < e.block_perm.size(); ++i)
        out << (i ? "," : "") << e.block_perm[i];
    out << "]";
    return out.str();
}

} // namespace paritygroups
