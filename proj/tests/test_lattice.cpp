#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parity/group_table.hpp"
#include "parity/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace paritygroups;

namespace {

SignedPermutation sp(std::vector<int> images, std::vector<int> signs)
{
    return SignedPermutation(std::move(images), std::move(signs));
}

BasedAutomorphism ba(std::vector<int> tau, std::vector<int> images, std::vector<int> signs)
{
    return BasedAutomorphism{std::move(tau), sp(std::move(images), std::move(signs))};
}

} // namespace

TEST_CASE("complex shapes")
{
    QuotientComplex single = build_complex(PartitionSpec::parse("2"));
    CHECK(single.nodes.size() == 2);
    CHECK(single.circles.size() == 2);
    for (const auto& c : single.circles) {
        auto [lo, hi] = single.circle_nodes(c);
        CHECK(lo == 0);
        CHECK(hi == 1);
    }

    QuotientComplex square = build_complex(PartitionSpec::parse("1,1"));
    CHECK(square.nodes.size() == 4);
    CHECK(square.circles.size() == 4);

    QuotientComplex mixed = build_complex(PartitionSpec::parse("2,1"));
    CHECK(mixed.nodes.size() == 4);
    CHECK(mixed.circles.size() == 6);

    CHECK(single.admissible_multipliers() == std::vector<int>{1});
    CHECK(build_full_quotient(2).admissible_multipliers() == std::vector<int>{1, -1});

    CHECK_THROWS_AS(build_complex(PartitionSpec::from_sizes(std::vector<int>(11, 1))),
                    std::length_error);
}

TEST_CASE("complex well-formedness across partitions")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& sizes : compositions_of(n)) {
            PartitionSpec J = PartitionSpec::from_sizes(sizes);
            QuotientComplex cx = build_complex(J);
            CHECK(cx.nodes.size() == (std::size_t{1} << J.m()));
            CHECK(cx.circles.size() == static_cast<std::size_t>(n) << (J.m() - 1));
            for (std::uint32_t node : cx.nodes) {
                auto incident = cx.node_circles(node);
                CHECK(incident.size() == static_cast<std::size_t>(n));
                std::set<int> axes;
                for (const auto& c : incident) {
                    axes.insert(c.axis);
                    auto [lo, hi] = cx.circle_nodes(c);
                    CHECK((lo == node || hi == node));
                    CHECK(lo != hi);
                    CHECK((lo ^ hi) == (1u << (c.block - 1)));
                }
                CHECK(axes.size() == static_cast<std::size_t>(n));
            }
        }
    }
}

TEST_CASE("candidate counts")
{
    CHECK(candidate_automorphisms(build_complex(PartitionSpec::parse("2"))).size() == 8);
    CHECK(candidate_automorphisms(build_complex(PartitionSpec::parse("1"))).size() == 2);
    CHECK(candidate_automorphisms(build_complex(PartitionSpec::parse("2,2"))).size() == 128);

    Caps tight;
    tight.candidate_limit = 16;
    CHECK_THROWS_AS(candidate_automorphisms(build_complex(PartitionSpec::parse("2,2")), tight),
                    std::length_error);
}

TEST_CASE("rotation predicate on degree-2 examples")
{
    QuotientComplex cx2 = build_complex(PartitionSpec::parse("2"));
    CHECK(!is_rotation(ba({1}, {1, 2}, {1, -1}), cx2)); // sgn * prod eps = -1
    CHECK(is_rotation(automorphism_identity(cx2.J), cx2));
    CHECK(is_rotation(ba({1}, {2, 1}, {1, -1}), cx2));

    QuotientComplex square = build_complex(PartitionSpec::parse("1,1"));
    CHECK(is_rotation(ba({2, 1}, {2, 1}, {1, 1}), square)); // diagonal reflection
    CHECK(!is_rotation(ba({1, 2}, {1, 2}, {-1, 1}), square));
}

TEST_CASE("rotation groups of the named quotients")
{
    auto rot2 = rotation_group(build_complex(PartitionSpec::parse("2")));
    CHECK(rot2.size() == 4);
    GroupTable t2 = GroupTable::build(rot2.size(), [&](int a, int b) {
        auto prod = compose(rot2[a], rot2[b]);
        auto it = std::lower_bound(rot2.begin(), rot2.end(), prod);
        return static_cast<int>(it - rot2.begin());
    });
    // cyclic of order 4, like CP_2
    auto hist = t2.order_histogram();
    CHECK(hist[4] == 2);
    CHECK(isomorphic(t2, group_table_from(kernel(2, ParityKind::Type3))).has_value());

    CHECK(rotation_group(build_complex(PartitionSpec::parse("1"))).size() == 1);

    auto rot11 = rotation_group(build_complex(PartitionSpec::parse("1,1")));
    CHECK(rot11.size() == 4);
    BasedAutomorphism id11 = automorphism_identity(PartitionSpec::parse("1,1"));
    for (const auto& a : rot11)
        CHECK(compose(a, a) == id11); // every nontrivial element is an involution
}

TEST_CASE("jp_action examples")
{
    PartitionSpec one_block = PartitionSpec::parse("2");
    CHECK(jp_action(one_block, jp_identity(one_block)) == automorphism_identity(one_block));

    JPElement e = jp_identity(one_block);
    e.components[0] = sp({2, 1}, {1, -1});
    BasedAutomorphism a = jp_action(one_block, e);
    CHECK(a.block_perm == std::vector<int>{1});
    CHECK(a.axis_map == sp({2, 1}, {1, -1}));

    PartitionSpec singletons = PartitionSpec::parse("1,1");
    JPElement f = jp_identity(singletons);
    f.block_signs = {-1, -1};
    BasedAutomorphism b = jp_action(singletons, f);
    CHECK(b.block_perm == std::vector<int>{1, 2});
    CHECK(b.axis_map == sp({1, 2}, {-1, -1}));

    CHECK_THROWS_AS(jp_action(PartitionSpec::parse("3"), e), std::invalid_argument);
}

TEST_CASE("proposition 1 reports")
{
    Prop1Report r21 = verify_prop1(PartitionSpec::parse("2,1"));
    CHECK(r21.jp_order == 8);
    CHECK(r21.kernel_order == 1);
    CHECK(r21.rotation_order == 8);
    CHECK(r21.predicate_equals_image);
    CHECK(r21.iso_check);
    CHECK(r21.image_order * r21.kernel_order == r21.jp_order);

    Prop1Report r22 = verify_prop1(PartitionSpec::parse("2,2"));
    CHECK(r22.jp_order == 64);
    CHECK(r22.kernel_order == 2);
    CHECK(r22.rotation_order == 32);
    CHECK(r22.predicate_equals_image);
    CHECK(r22.iso_check);

    Prop1Report r111 = verify_prop1(PartitionSpec::parse("1,1,1"));
    CHECK(r111.jp_order == 24);
    CHECK(r111.rotation_order == 24);
    CHECK(r111.kernel_order == 1);
    CHECK(!r111.note.empty());
}

TEST_CASE("full quotient automorphisms")
{
    FullQuotientReport f1 = full_quotient_automorphisms(1);
    CHECK(f1.order == 2);

    FullQuotientReport f2 = full_quotient_automorphisms(2);
    CHECK(f2.order == 8);

    FullQuotientReport f3 = full_quotient_automorphisms(3);
    CHECK(f3.order == 48);
    CHECK(f3.iso_checked);
    CHECK(f3.isomorphic_to_pn);
}

TEST_CASE("apply preserves incidence")
{
    for (const char* text : {"2", "1,1", "2,1"}) {
        PartitionSpec J = PartitionSpec::parse(text);
        QuotientComplex cx = build_complex(J);
        for (const auto& a : rotation_group(cx)) {
            for (const auto& c : cx.circles) {
                LatticeCircle ci = apply_circle(a, cx, c);
                auto [lo, hi] = cx.circle_nodes(c);
                auto [ilo, ihi] = cx.circle_nodes(ci);
                CHECK(((apply_node(a, cx, lo) == ilo && apply_node(a, cx, hi) == ihi)
                       || (apply_node(a, cx, lo) == ihi && apply_node(a, cx, hi) == ilo)));
            }
            // node images form a permutation
            std::set<std::uint32_t> images;
            for (std::uint32_t v : cx.nodes)
                images.insert(apply_node(a, cx, v));
            CHECK(images.size() == cx.nodes.size());
            CHECK(apply_node(a, cx, 0) == 0); // based map
        }
    }

    // the diagonal reflection of the square swaps the two axis circles
    PartitionSpec square = PartitionSpec::parse("1,1");
    QuotientComplex cx = build_complex(square);
    BasedAutomorphism refl = ba({2, 1}, {2, 1}, {1, 1});
    LatticeCircle c1{1, 1, 0};
    LatticeCircle img = apply_circle(refl, cx, c1);
    CHECK(img.block == 2);
    CHECK(img.axis == 2);

    BasedAutomorphism id = automorphism_identity(square);
    for (const auto& c : cx.circles)
        CHECK(apply_circle(id, cx, c) == c);
}

TEST_CASE("automorphism encoding parses back through the CLI grammar")
{
    BasedAutomorphism refl = ba({2, 1}, {2, 1}, {1, -1});
    std::string text = encode(refl);
    CHECK(text.find("τ:[2,1]") == 0);
}
