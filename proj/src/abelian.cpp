#include "parity/abelian.hpp"

#include <stdexcept>

namespace paritygroups {

IntegerVector integer_vector_parse(const std::string& text)
{
    IntegerVector out;
    std::size_t pos = 0;
    if (text.empty())
        throw std::invalid_argument("empty integer vector");
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer \"" + tok + "\"");
        }
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

int int_parity(const IntegerVector& x)
{
    Int s = 0;
    for (const Int& v : x)
        s += v;
    return static_cast<int>(int_mod(s, 2));
}

bool member_A(const IntegerVector& x)
{
    return int_parity(x) == 0;
}

bool member_B(const IntegerVector& x)
{
    for (const Int& v : x)
        if (int_mod(v, 2) != 0)
            return false;
    return true;
}

namespace {

void check_degree(const IntegerVector& x, const PartitionSpec& J)
{
    if (static_cast<int>(x.size()) != J.n())
        throw std::invalid_argument("vector length " + std::to_string(x.size())
                                    + " does not match partition degree " + std::to_string(J.n()));
}

} // namespace

bool member_J(const IntegerVector& x, const PartitionSpec& J)
{
    check_degree(x, J);
    for (int i = 1; i <= J.m(); ++i) {
        Int s = 0;
        for (int axis : J.block(i))
            s += x[axis - 1];
        if (int_mod(s, 2) != 0)
            return false;
    }
    return true;
}

Z2Vector project_node(const IntegerVector& x, const PartitionSpec& J)
{
    check_degree(x, J);
    Z2Vector v;
    v.n = J.m();
    for (int i = 1; i <= J.m(); ++i) {
        Int s = 0;
        for (int axis : J.block(i))
            s += x[axis - 1];
        if (int_mod(s, 2) == 1)
            v.bits |= 1u << (i - 1);
    }
    return v;
}

QuotientGroupInfo quotient_table(const PartitionSpec& J, int table_limit_m)
{
    const int m = J.m();
    if (m > 20)
        throw std::length_error("quotient_table: m exceeds cap 20");
    QuotientGroupInfo info;
    info.m = m;
    info.order = std::uint64_t{1} << m;
    info.all_self_inverse = true; // characteristic 2
    if (m <= table_limit_m) {
        std::vector<std::vector<int>> table(info.order, std::vector<int>(info.order));
        for (std::uint64_t a = 0; a < info.order; ++a)
            for (std::uint64_t b = 0; b < info.order; ++b)
                table[a][b] = static_cast<int>(a ^ b);
        info.table = std::move(table);
    } else {
        info.generator_note = "Z_2^" + std::to_string(m) + " generated by the " + std::to_string(m)
                              + " coordinate bits; componentwise addition mod 2";
    }
    return info;
}

} // namespace paritygroups
