#include "parity/lattice.hpp"

#include "parity/rng.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace paritygroups {

std::pair<std::uint32_t, std::uint32_t> QuotientComplex::circle_nodes(const LatticeCircle& c) const
{
    if (kind == CircleKind::ProjLine)
        return {0u, 0u};
    std::uint32_t lo = c.other_bits;
    std::uint32_t hi = c.other_bits | (1u << (c.block - 1));
    return {lo, hi};
}

std::vector<LatticeCircle> QuotientComplex::node_circles(std::uint32_t node) const
{
    std::vector<LatticeCircle> out;
    for (int j = 1; j <= n(); ++j) {
        int i = J.block_of_axis(j);
        LatticeCircle c;
        c.block = i;
        c.axis = j;
        c.other_bits = kind == CircleKind::ProjLine ? 0u : (node & ~(1u << (i - 1)));
        out.push_back(c);
    }
    return out;
}

QuotientComplex build_complex(const PartitionSpec& J)
{
    if (J.m() > 10 || J.n() > 10)
        throw std::length_error("build_complex: caps are m <= 10, n <= 10");
    QuotientComplex cx{J, CircleKind::Circle2, {}, {}};
    const std::uint32_t node_count = 1u << J.m();
    for (std::uint32_t v = 0; v < node_count; ++v)
        cx.nodes.push_back(v);
    for (int i = 1; i <= J.m(); ++i)
        for (int axis : J.block(i))
            for (std::uint32_t w = 0; w < node_count; ++w) {
                if (w & (1u << (i - 1)))
                    continue;
                cx.circles.push_back(LatticeCircle{i, axis, w});
            }
    return cx;
}

QuotientComplex build_full_quotient(int n)
{
    if (n < 1 || n > 8)
        throw std::length_error("build_full_quotient: cap is n <= 8");
    QuotientComplex cx{PartitionSpec::from_sizes(std::vector<int>(n, 1)), CircleKind::ProjLine,
                       {}, {}};
    cx.nodes.push_back(0u);
    for (int j = 1; j <= n; ++j)
        cx.circles.push_back(LatticeCircle{j, j, 0u});
    return cx;
}

BasedAutomorphism compose(const BasedAutomorphism& a, const BasedAutomorphism& b)
{
    const int m = static_cast<int>(a.block_perm.size());
    if (m != static_cast<int>(b.block_perm.size()))
        throw std::invalid_argument("automorphism compose: block count mismatch");
    BasedAutomorphism r{std::vector<int>(m), compose(a.axis_map, b.axis_map)};
    for (int i = 1; i <= m; ++i)
        r.block_perm[i - 1] = a.block_perm[b.block_perm[i - 1] - 1];
    return r;
}

BasedAutomorphism automorphism_identity(const PartitionSpec& J)
{
    BasedAutomorphism a{std::vector<int>(J.m()), SignedPermutation::identity(J.n())};
    for (int i = 1; i <= J.m(); ++i)
        a.block_perm[i - 1] = i;
    return a;
}

std::string encode(const BasedAutomorphism& a)
{
    std::ostringstream out;
    out << "τ:[";
    for (std::size_t i = 0; i < a.block_perm.size(); ++i)
        out << (i ? "," : "") << a.block_perm[i];
    out << "];" << encode(a.axis_map);
    return out.str();
}

namespace {

std::uint64_t candidate_count(const PartitionSpec& J, const std::vector<std::vector<int>>& taus)
{
    std::uint64_t count = static_cast<std::uint64_t>(taus.size());
    for (int i = 1; i <= J.m(); ++i)
        for (int f = 2; f <= J.block_size(i); ++f)
            count *= static_cast<std::uint64_t>(f);
    return count << J.n();
}

} // namespace

std::vector<BasedAutomorphism> candidate_automorphisms(const QuotientComplex& complex, const Caps& caps)
{
    const PartitionSpec& J = complex.J;
    const int n = J.n();
    const int m = J.m();
    auto taus = size_preserving_block_perms(J);
    if (candidate_count(J, taus) > caps.candidate_limit)
        throw std::length_error("candidate_automorphisms: count exceeds cap");

    std::vector<BasedAutomorphism> out;
    for (const auto& tau : taus) {
        // odometer over per-block ordinal permutations
        std::vector<std::vector<int>> ordinals(m);
        for (int i = 0; i < m; ++i) {
            ordinals[i].resize(J.block_size(i + 1));
            for (std::size_t k = 0; k < ordinals[i].size(); ++k)
                ordinals[i][k] = static_cast<int>(k) + 1;
        }
        for (;;) {
            std::vector<int> images(n);
            for (int i = 1; i <= m; ++i) {
                const auto& src = J.block(i);
                const auto& dst = J.block(tau[i - 1]);
                for (std::size_t k = 0; k < src.size(); ++k)
                    images[src[k] - 1] = dst[ordinals[i - 1][k] - 1];
            }
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> signs(n);
                for (int j = 0; j < n; ++j)
                    signs[j] = (mask >> (n - 1 - j)) & 1u ? -1 : 1;
                out.push_back(BasedAutomorphism{tau, SignedPermutation(images, std::move(signs))});
            }
            int pos = m - 1;
            while (pos >= 0 && !std::next_permutation(ordinals[pos].begin(), ordinals[pos].end()))
                --pos;
            if (pos < 0)
                break;
        }
    }
    return out;
}

bool is_rotation(const BasedAutomorphism& a, const QuotientComplex& complex)
{
    if (complex.kind == CircleKind::ProjLine)
        return true; // every projective-line loop admits the -1 multiplier
    const PartitionSpec& J = complex.J;
    int global = 1;
    for (int i = 1; i <= J.m(); ++i) {
        const auto& src = J.block(i);
        std::vector<int> ordinal_perm(src.size());
        int prod_eps = 1;
        for (std::size_t k = 0; k < src.size(); ++k) {
            int axis = src[k];
            ordinal_perm[k] = J.ordinal_in_block(a.axis_map.image(axis));
            prod_eps *= a.axis_map.sign(axis);
        }
        int value = permutation_sign(ordinal_perm) * prod_eps;
        if (src.size() % 2 == 0 && value != 1)
            return false;
        global *= value;
    }
    if (J.all_blocks_odd() && global != 1)
        return false;
    return true;
}

std::vector<BasedAutomorphism> rotation_group(const QuotientComplex& complex, const Caps& caps)
{
    std::vector<BasedAutomorphism> rot;
    for (const auto& a : candidate_automorphisms(complex, caps))
        if (is_rotation(a, complex))
            rot.push_back(a);
    std::sort(rot.begin(), rot.end());

    if (!std::binary_search(rot.begin(), rot.end(), automorphism_identity(complex.J)))
        throw std::logic_error("rotation_group: identity not admitted");
    auto check_closed = [&](const BasedAutomorphism& a, const BasedAutomorphism& b) {
        if (!std::binary_search(rot.begin(), rot.end(), compose(a, b)))
            throw std::logic_error("rotation_group: not closed under composition at " + encode(a)
                                   + " * " + encode(b));
    };
    if (rot.size() * rot.size() <= 4'000'000) {
        for (const auto& a : rot)
            for (const auto& b : rot)
                check_closed(a, b);
    } else {
        SplitMix64 rng(0x5c1e5ULL ^ rot.size());
        for (int t = 0; t < 100'000; ++t)
            check_closed(rot[static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(rot.size()) - 1))],
                         rot[static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(rot.size()) - 1))]);
    }
    return rot;
}

BasedAutomorphism jp_action(const PartitionSpec& J, const JPElement& e)
{
    jp_validate(J, e);
    const int n = J.n();
    std::vector<int> images(n), signs(n);
    for (int i = 1; i <= J.m(); ++i) {
        const int target = e.block_perm[i - 1];
        const auto& src = J.block(i);
        const auto& dst = J.block(target);
        const SignedPermutation& c = e.components[target - 1];
        for (std::size_t k = 0; k < src.size(); ++k) {
            images[src[k] - 1] = dst[c.image(static_cast<int>(k) + 1) - 1];
            signs[src[k] - 1] = c.sign(static_cast<int>(k) + 1) * e.block_signs[target - 1];
        }
    }
    return BasedAutomorphism{e.block_perm, SignedPermutation(std::move(images), std::move(signs))};
}

std::uint32_t apply_node(const BasedAutomorphism& a, const QuotientComplex& complex,
                         std::uint32_t node)
{
    if (complex.kind == CircleKind::ProjLine)
        return 0u;
    std::uint32_t image = 0;
    for (std::size_t i = 1; i <= a.block_perm.size(); ++i)
        if (node & (1u << (i - 1)))
            image |= 1u << (a.block_perm[i - 1] - 1);
    return image;
}

LatticeCircle apply_circle(const BasedAutomorphism& a, const QuotientComplex& complex,
                           const LatticeCircle& c)
{
    LatticeCircle r;
    r.block = a.block_perm[c.block - 1];
    r.axis = a.axis_map.image(c.axis);
    r.other_bits = 0;
    if (complex.kind == CircleKind::Circle2)
        for (std::size_t p = 1; p <= a.block_perm.size(); ++p)
            if (c.other_bits & (1u << (p - 1)))
                r.other_bits |= 1u << (a.block_perm[p - 1] - 1);
    return r;
}

Prop1Report verify_prop1(const PartitionSpec& J, const Caps& caps)
{
    Prop1Report rep{J, 0, 0, 0, 0, false, false,
                    "tau restricted to size-preserving block permutations"};

    QuotientComplex cx = build_complex(J);
    auto jp = jp_enumerate(J, caps);
    rep.jp_order = jp.size();

    std::vector<BasedAutomorphism> images;
    images.reserve(jp.size());
    for (const auto& e : jp)
        images.push_back(jp_action(J, e));

    // homomorphism law, exhaustive when feasible, else seeded random pairs
    const std::size_t pair_budget = 100'000;
    auto check_pair = [&](std::size_t a, std::size_t b) {
        BasedAutomorphism lhs = jp_action(J, jp_compose(J, jp[a], jp[b]));
        BasedAutomorphism rhs = compose(images[a], images[b]);
        if (!(lhs == rhs))
            throw std::logic_error("jp_action is not a homomorphism on partition " + J.text()
                                   + " at elements " + jp_encode(jp[a]) + " and " + jp_encode(jp[b]));
    };
    if (jp.size() * jp.size() <= pair_budget) {
        for (std::size_t a = 0; a < jp.size(); ++a)
            for (std::size_t b = 0; b < jp.size(); ++b)
                check_pair(a, b);
    } else {
        SplitMix64 rng(0x9a7c0b1eULL ^ jp.size());
        for (std::size_t t = 0; t < pair_budget; ++t)
            check_pair(static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(jp.size()) - 1)),
                       static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(jp.size()) - 1)));
    }

    std::vector<BasedAutomorphism> image_set = images;
    std::sort(image_set.begin(), image_set.end());
    image_set.erase(std::unique(image_set.begin(), image_set.end()), image_set.end());
    rep.image_order = image_set.size();

    const BasedAutomorphism id = automorphism_identity(J);
    rep.kernel_order = 0;
    std::vector<std::size_t> kernel_indices;
    for (std::size_t a = 0; a < jp.size(); ++a)
        if (images[a] == id) {
            ++rep.kernel_order;
            kernel_indices.push_back(a);
        }

    auto rotations = rotation_group(cx, caps);
    rep.rotation_order = rotations.size();
    rep.predicate_equals_image = image_set == rotations;

    // JP/kernel vs rotation group, by independent backtracking search
    if (rep.image_order <= caps.iso_limit && rep.rotation_order <= caps.iso_limit) {
        std::unordered_map<std::string, int> jp_index;
        for (std::size_t a = 0; a < jp.size(); ++a)
            jp_index.emplace(jp_key(jp[a]), static_cast<int>(a));

        // cosets of the kernel; quotient multiplication through representatives
        std::vector<int> coset_of(jp.size(), -1);
        std::vector<int> reps;
        for (std::size_t a = 0; a < jp.size(); ++a) {
            if (coset_of[a] != -1)
                continue;
            int id_coset = static_cast<int>(reps.size());
            reps.push_back(static_cast<int>(a));
            for (std::size_t k : kernel_indices) {
                auto prod = jp_compose(J, jp[a], jp[k]);
                coset_of[jp_index.at(jp_key(prod))] = id_coset;
            }
        }
        GroupTable quotient = GroupTable::build(reps.size(), [&](int a, int b) {
            auto prod = jp_compose(J, jp[reps[a]], jp[reps[b]]);
            return coset_of[jp_index.at(jp_key(prod))];
        });
        GroupTable rot_table = GroupTable::build(rotations.size(), [&](int a, int b) {
            auto prod = compose(rotations[a], rotations[b]);
            auto it = std::lower_bound(rotations.begin(), rotations.end(), prod);
            return static_cast<int>(it - rotations.begin());
        });
        rep.iso_check = isomorphic(quotient, rot_table, caps).has_value();
    }
    return rep;
}

FullQuotientReport full_quotient_automorphisms(int n, const Caps& caps)
{
    FullQuotientReport rep;
    rep.n = n;
    rep.order = std::uint64_t{1} << n;
    for (int f = 2; f <= n; ++f)
        rep.order *= static_cast<std::uint64_t>(f);

    QuotientComplex cx = build_full_quotient(n);
    if (rep.order <= caps.candidate_limit) {
        auto autos = rotation_group(cx, caps); // every candidate is admissible here
        if (autos.size() != rep.order)
            throw std::logic_error("full quotient automorphism count differs from 2^n n!");
        if (autos.size() <= caps.iso_limit) {
            GroupTable at = GroupTable::build(autos.size(), [&](int a, int b) {
                auto prod = compose(autos[a], autos[b]);
                auto it = std::lower_bound(autos.begin(), autos.end(), prod);
                return static_cast<int>(it - autos.begin());
            });
            GroupTable pn = group_table_from(enumerate_pn(n, caps));
            rep.isomorphic_to_pn = isomorphic(at, pn, caps).has_value();
            rep.iso_checked = true;
        }
    }
    return rep;
}

} // namespace paritygroups
