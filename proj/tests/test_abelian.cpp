#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parity/abelian.hpp"
#include "parity/chart.hpp"
#include "parity/rng.hpp"

#include <algorithm>

using namespace paritygroups;

namespace {

IntegerVector iv(std::vector<long long> v)
{
    IntegerVector out;
    for (long long x : v)
        out.emplace_back(x);
    return out;
}

RationalVector rv(const std::string& text)
{
    return rational_vector_parse(text);
}

} // namespace

TEST_CASE("integer parity")
{
    CHECK(int_parity(iv({1, 2, 3})) == 0);
    CHECK(int_parity(iv({1, 0})) == 1);
    CHECK(int_parity(iv({-3})) == 1);

    SplitMix64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        IntegerVector a, b, sum;
        int n = static_cast<int>(rng.next_int(1, 6));
        for (int j = 0; j < n; ++j) {
            a.emplace_back(rng.next_int(-1000, 1000));
            b.emplace_back(rng.next_int(-1000, 1000));
            sum.push_back(a.back() + b.back());
        }
        CHECK(int_parity(sum) == (int_parity(a) + int_parity(b)) % 2);
    }
}

TEST_CASE("lattice membership")
{
    CHECK(member_A(iv({1, 1})));
    CHECK(!member_A(iv({1, 0})));
    CHECK(member_B(iv({0, 0})));
    CHECK(member_A(iv({0, 0, 0})));
    CHECK(member_J(iv({0, 0, 0}), PartitionSpec::parse("2,1")));

    // block sums (2, 1): second block odd
    CHECK(!member_J(iv({1, 1, 1, 0}), PartitionSpec::parse("2,2")));
    CHECK(member_J(iv({1, 1, 1, 1}), PartitionSpec::parse("2,2")));
    CHECK(!member_B(iv({1, 1})));
    CHECK(member_B(iv({2, -4})));

    CHECK_THROWS_AS(member_J(iv({1, 1}), PartitionSpec::parse("2,1")), std::invalid_argument);
}

TEST_CASE("project_node")
{
    PartitionSpec two_singletons = PartitionSpec::parse("1,1");
    std::vector<std::uint32_t> images;
    for (auto v : {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})})
        images.push_back(project_node(v, two_singletons).bits);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    CHECK(images.size() == 4);

    PartitionSpec one_block = PartitionSpec::parse("2");
    CHECK(project_node(iv({0, 0}), one_block) == project_node(iv({1, 1}), one_block));
    CHECK(project_node(iv({0, 0}), one_block) != project_node(iv({1, 0}), one_block));
    CHECK(project_node(iv({0, 0, 0}), PartitionSpec::parse("2,1")).bits == 0);
}

TEST_CASE("quotient table")
{
    QuotientGroupInfo q = quotient_table(PartitionSpec::parse("2,1"));
    CHECK(q.order == 4);
    REQUIRE(q.table.has_value());
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK((*q.table)[a][a] == 0); // self-inverse
        for (std::size_t b = 0; b < 4; ++b)
            CHECK((*q.table)[a][b] == (*q.table)[b][a]);
    }

    CHECK(quotient_table(PartitionSpec::parse("3")).order == 2);
    CHECK(quotient_table(PartitionSpec::parse("3")).all_self_inverse);

    QuotientGroupInfo big = quotient_table(PartitionSpec::from_sizes(std::vector<int>(8, 1)), 6);
    CHECK(big.order == 256);
    CHECK(!big.table.has_value());
    CHECK(!big.generator_note.empty());
}

TEST_CASE("chart values")
{
    Chart c = chart(rv("1/2,1/2"), PartitionSpec::parse("2"));
    REQUIRE(c.blocks.size() == 1);
    CHECK(c.blocks[0].residues == std::vector<Rat>{Rat(1, 2)});
    CHECK(c.blocks[0].blocksum == Rat(1));

    // lattice vectors map to the zero chart
    Chart zero = chart(rv("2,4,-2"), PartitionSpec::parse("2,1"));
    for (const auto& b : zero.blocks) {
        CHECK(b.blocksum == 0);
        for (const auto& r : b.residues)
            CHECK(r == 0);
    }

    Chart c2 = chart(rv("3/4,1/4,5"), PartitionSpec::parse("2,1"));
    CHECK(c2.blocks[0].residues == std::vector<Rat>{Rat(1, 4)});
    CHECK(c2.blocks[0].blocksum == Rat(1));
    CHECK(c2.blocks[1].residues.empty());
    CHECK(c2.blocks[1].blocksum == Rat(1));

    CHECK_THROWS_AS(chart(rv("1,2"), PartitionSpec::parse("3")), std::invalid_argument);
}

TEST_CASE("negative coordinates use congruence residues")
{
    // -1/4 mod 1 = 3/4, not 1/4: the homomorphism law needs the residue
    Chart c = chart(rv("0,-1/4"), PartitionSpec::parse("2"));
    CHECK(c.blocks[0].residues == std::vector<Rat>{Rat(3, 4)});
    CHECK(c.blocks[0].blocksum == Rat(7, 4));
}

TEST_CASE("spherical angles")
{
    Chart c = chart(rv("1/2,1/2"), PartitionSpec::parse("2"));
    SphericalAngles a = spherical(c, 1);
    CHECK(a.phi == Rat(1));               // phi = pi
    CHECK(a.theta == std::vector<Rat>{Rat(1, 2)}); // theta = pi/2

    Chart zero = chart(rv("0,0"), PartitionSpec::parse("2"));
    SphericalAngles z = spherical(zero, 1);
    CHECK(z.phi == 0);
    CHECK(z.theta == std::vector<Rat>{Rat(0)});

    Chart c2 = chart(rv("0,3/2"), PartitionSpec::parse("2"));
    SphericalAngles a2 = spherical(c2, 1);
    CHECK(a2.theta == std::vector<Rat>{Rat(1, 2)});
    CHECK(a2.phi == Rat(3, 2));

    CHECK_THROWS_AS(spherical(c, 2), std::invalid_argument);
}

TEST_CASE("chart equivalence")
{
    PartitionSpec J = PartitionSpec::parse("2");
    CHECK(chart_equiv(rv("3/4,1/4"), rv("7/4,5/4"), J)); // difference (1,1) in AZ^2
    CHECK(chart_equiv(rv("3/4,1/4"), rv("3/4,1/4"), J));
    CHECK(!chart_equiv(rv("0,0"), rv("1,0"), J));
}

TEST_CASE("chart kernel, homomorphism and equivalence oracle, randomized")
{
    SplitMix64 rng(0xabc);
    for (int t = 0; t < 300; ++t) {
        int n = static_cast<int>(rng.next_int(1, 5));
        std::vector<int> sizes;
        int left = n;
        while (left > 0) {
            int s = static_cast<int>(rng.next_int(1, left));
            sizes.push_back(s);
            left -= s;
        }
        PartitionSpec J = PartitionSpec::from_sizes(sizes);

        RationalVector x(n), y(n), shift(n);
        for (int j = 0; j < n; ++j) {
            x[j] = Rat(Int(rng.next_int(-30, 30)), Int(rng.next_int(1, 8)));
            y[j] = Rat(Int(rng.next_int(-30, 30)), Int(rng.next_int(1, 8)));
        }
        for (int i = 1; i <= J.m(); ++i) {
            long long sum = 0;
            for (int axis : J.block(i)) {
                long long v = rng.next_int(-10, 10);
                shift[axis - 1] = v;
                sum += v;
            }
            if (sum % 2 != 0)
                shift[J.block(i).back() - 1] += 1;
        }

        RationalVector xs(n), xy(n);
        for (int j = 0; j < n; ++j) {
            xs[j] = x[j] + shift[j];
            xy[j] = x[j] + y[j];
        }
        CHECK(chart(xs, J) == chart(x, J));
        CHECK(chart(xy, J) == chart_add(chart(x, J), chart(y, J)));

        // equivalence against the membership oracle
        bool equal = chart_equiv(x, y, J);
        bool integral = true;
        IntegerVector diff;
        for (int j = 0; j < n; ++j) {
            Rat d = x[j] - y[j];
            if (boost::multiprecision::denominator(d) != 1)
                integral = false;
            else
                diff.emplace_back(boost::multiprecision::numerator(d));
        }
        CHECK(equal == (integral && member_J(diff, J)));
    }
}

TEST_CASE("chart factors through block restrictions")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sizes : compositions_of(n)) {
            PartitionSpec J = PartitionSpec::from_sizes(sizes);
            SplitMix64 rng(static_cast<std::uint64_t>(n) * 100 + sizes.size());
            RationalVector x(n);
            for (int j = 0; j < n; ++j)
                x[j] = Rat(Int(rng.next_int(-20, 20)), Int(rng.next_int(1, 6)));
            Chart whole = chart(x, J);
            for (int i = 1; i <= J.m(); ++i) {
                RationalVector restricted;
                for (int axis : J.block(i))
                    restricted.push_back(x[axis - 1]);
                Chart single = chart(restricted, PartitionSpec::from_sizes({J.block_size(i)}));
                CHECK(whole.blocks[i - 1] == single.blocks[0]);
            }
        }
    }
}

TEST_CASE("rational parsing")
{
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-3/4") == Rat(-3, 4));
    CHECK(rat_parse("5") == Rat(5));
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
    CHECK(rat_mod(Rat(-1, 4), 1) == Rat(3, 4));
    CHECK(rat_mod(Rat(7, 2), 2) == Rat(3, 2));
    CHECK(rat_mod(Rat(-5), 2) == Rat(1));
}
