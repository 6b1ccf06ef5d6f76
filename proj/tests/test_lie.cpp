#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parity/lie.hpp"
#include "parity/rng.hpp"

#include <algorithm>

using namespace paritygroups;

TEST_CASE("algebra arithmetic")
{
    TwoByTwo i{AlgebraKind::C, 0, 1};
    TwoByTwo sq = algebra_mul(i, i);
    CHECK(sq.x == -1);
    CHECK(sq.y == 0);

    // (1,0) is the matrix identity for B and C; the diagonal algebra's unit
    // is diag(1,1), i.e. (1,1)
    for (AlgebraKind k : {AlgebraKind::B, AlgebraKind::C}) {
        TwoByTwo one{k, 1, 0};
        TwoByTwo v{k, Rat(3, 7), Rat(-2, 5)};
        CHECK(algebra_mul(one, v) == v);
        CHECK(algebra_mul(v, one) == v);
    }
    {
        TwoByTwo one{AlgebraKind::A, 1, 1};
        TwoByTwo v{AlgebraKind::A, Rat(3, 7), Rat(-2, 5)};
        CHECK(algebra_mul(one, v) == v);
        CHECK(algebra_mul(v, one) == v);
    }

    CHECK(algebra_det(TwoByTwo{AlgebraKind::B, Rat(5, 4), Rat(3, 4)}) == 1);
    CHECK(algebra_det(TwoByTwo{AlgebraKind::A, 3, 4}) == 12);
    CHECK(algebra_det(TwoByTwo{AlgebraKind::C, 3, 4}) == 25);

    CHECK_THROWS_AS(algebra_mul(TwoByTwo{AlgebraKind::A, 1, 0}, TwoByTwo{AlgebraKind::B, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("algebra laws, randomized exact")
{
    SplitMix64 rng(5);
    for (AlgebraKind k : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C}) {
        for (int t = 0; t < 200; ++t) {
            TwoByTwo a{k, Rat(Int(rng.next_int(-9, 9)), Int(rng.next_int(1, 5))),
                       Rat(Int(rng.next_int(-9, 9)), Int(rng.next_int(1, 5)))};
            TwoByTwo b{k, Rat(Int(rng.next_int(-9, 9)), Int(rng.next_int(1, 5))),
                       Rat(Int(rng.next_int(-9, 9)), Int(rng.next_int(1, 5)))};
            // commutative and det-multiplicative
            CHECK(algebra_mul(a, b) == algebra_mul(b, a));
            CHECK(algebra_det(algebra_mul(a, b)) == algebra_det(a) * algebra_det(b));
            CHECK(algebra_add(a, b) == algebra_add(b, a));
        }
    }
}

TEST_CASE("det kernel membership")
{
    CHECK(det_kernel_member(TwoByTwo{AlgebraKind::C, Rat(3, 5), Rat(4, 5)}));
    CHECK(det_kernel_member(TwoByTwo{AlgebraKind::C, 1, 0}));
    CHECK(!det_kernel_member(TwoByTwo{AlgebraKind::B, 1, 1})); // det 0, not invertible
    CHECK(det_kernel_member(TwoByTwo{AlgebraKind::B, Rat(5, 4), Rat(3, 4)}));
    CHECK_THROWS_AS(det_kernel_member(TwoByTwo{AlgebraKind::A, 1, 1}), std::invalid_argument);

    // kernel members form a group under multiplication and inverse
    SplitMix64 rng(17);
    for (int t = 0; t < 100; ++t) {
        // rational points of x^2 + y^2 = 1 from the tangent parametrization
        Rat u(Int(rng.next_int(-20, 20)), Int(rng.next_int(1, 9)));
        TwoByTwo a{AlgebraKind::C, (1 - u * u) / (1 + u * u), 2 * u / (1 + u * u)};
        CHECK(det_kernel_member(a));
        TwoByTwo conj{AlgebraKind::C, a.x, -a.y}; // inverse of a unit-circle element
        CHECK(det_kernel_member(algebra_mul(a, conj)));
        CHECK(det_kernel_member(algebra_mul(a, a)));
    }
    // hyperbolic points of x^2 - y^2 = 1
    for (int t = 0; t < 100; ++t) {
        Rat u(Int(rng.next_int(1, 30)), Int(rng.next_int(1, 9)));
        TwoByTwo h{AlgebraKind::B, (u * u + 1) / (2 * u), (u * u - 1) / (2 * u)};
        CHECK(det_kernel_member(h));
        CHECK(det_kernel_member(algebra_mul(h, h)));
        TwoByTwo inv{AlgebraKind::B, h.x, -h.y};
        CHECK(det_kernel_member(algebra_mul(h, inv)));
    }
}

TEST_CASE("so generators")
{
    RationalMatrix r = so2_generator(1, 2, 2);
    CHECK(r.at(1, 2) == 1);
    CHECK(r.at(2, 1) == -1);
    CHECK(r.at(1, 1) == 0);

    RationalMatrix h = so11_generator(1, 2, 2);
    CHECK(h.at(1, 2) == 1);
    CHECK(h.at(2, 1) == 1);

    RationalMatrix e = so2_generator(1, 3, 3);
    CHECK(e.at(1, 3) == 1);
    CHECK(e.at(3, 1) == -1);
    for (int i = 1; i <= 3; ++i)
        CHECK(e.at(i, 2) == 0);

    CHECK_THROWS_AS(so2_generator(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(so11_generator(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(so2_generator(1, 4, 3), std::invalid_argument);
}

TEST_CASE("generator sets")
{
    auto single = generator_set(PartitionSpec::parse("3"), true);
    CHECK(single.size() == 3);
    for (const auto& g : single)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                CHECK(g.at(i, j) == -g.at(j, i)); // all rotations

    CHECK(generator_set(PartitionSpec::parse("1,1"), true).size() == 1);
    CHECK(generator_set(PartitionSpec::parse("1,1"), false).size() == 1);
    CHECK(generator_set(PartitionSpec::parse("2,2"), true).size() == 3);
    CHECK(generator_set(PartitionSpec::parse("2,2"), false).size() == 6);
}

TEST_CASE("p formula")
{
    CHECK(p_formula(PartitionSpec::parse("3")) == 3);
    CHECK(p_formula(PartitionSpec::parse("1")) == 0);
    CHECK(p_formula(PartitionSpec::parse("2,1")) == 2);
    CHECK(p_formula(PartitionSpec::parse("2,2")) == 3);
}

TEST_CASE("bracket closure dimensions")
{
    for (int n = 2; n <= 5; ++n) {
        LieBasis b = bracket_closure(generator_set(PartitionSpec::from_sizes({n}), true));
        CHECK(b.dimension() == n * (n - 1) / 2);
        for (const auto& m : b.basis())
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(m.at(i, j) == -m.at(j, i)); // antisymmetric basis
    }

    CHECK(bracket_closure({so11_generator(1, 2, 2)}).dimension() == 1);

    LieBasis b21 = bracket_closure(generator_set(PartitionSpec::parse("2,1"), true));
    CHECK(b21.dimension() == 3);
    LieBasis hand(3);
    hand.insert(so2_generator(1, 2, 3));
    hand.insert(so11_generator(1, 3, 3));
    hand.insert(so11_generator(2, 3, 3));
    CHECK(b21.same_span(hand));
}

TEST_CASE("closure output is bracket-closed and order independent")
{
    auto gens = generator_set(PartitionSpec::parse("2,2"), true);
    LieBasis b = bracket_closure(gens);
    for (const auto& x : b.basis())
        for (const auto& y : b.basis())
            CHECK(b.contains(bracket(x, y)));

    SplitMix64 rng(23);
    for (int t = 0; t < 10; ++t) {
        for (std::size_t j = gens.size() - 1; j > 0; --j)
            std::swap(gens[j], gens[rng.next_int(0, static_cast<std::int64_t>(j))]);
        LieBasis shuffled = bracket_closure(gens);
        CHECK(shuffled.dimension() == b.dimension());
        CHECK(shuffled.same_span(b));
        CHECK(shuffled.basis().size() == b.basis().size());
        for (std::size_t i = 0; i < b.basis().size(); ++i)
            CHECK(shuffled.basis()[i] == b.basis()[i]); // canonical echelon form
    }

    CHECK_THROWS_AS(bracket_closure({}), std::invalid_argument);
    CHECK_THROWS_AS(bracket_closure({so2_generator(1, 2, 2), so2_generator(1, 2, 3)}),
                    std::invalid_argument);
}

TEST_CASE("closure reports")
{
    ClosureReport r3 = closure_report(PartitionSpec::parse("3"));
    CHECK(r3.p == 3);
    CHECK(r3.dim_minimal == 3);
    CHECK(r3.dim_full == 3);
    CHECK(r3.spans_equal);

    ClosureReport r21 = closure_report(PartitionSpec::parse("2,1"));
    CHECK(r21.p == 2);
    CHECK(r21.dim_minimal == 3); // dimension exceeds p here; both are reported
    CHECK(r21.dim_full == 3);
    CHECK(r21.spans_equal);

    ClosureReport r11 = closure_report(PartitionSpec::parse("1,1"));
    CHECK(r11.p == 1);
    CHECK(r11.dim_minimal == 1);
    CHECK(r11.spans_equal);
}

TEST_CASE("monomial factorization")
{
    RationalMatrix m(2);
    m.at(2, 1) = 3;
    m.at(1, 2) = -2;
    MonomialFactors f = factor_monomial(m);
    CHECK(f.perm.images() == std::vector<int>{2, 1});
    CHECK(f.perm.signs() == std::vector<int>{1, -1});
    CHECK(f.scales == std::vector<Rat>{3, 2});

    MonomialFactors id = factor_monomial(RationalMatrix::identity(3));
    CHECK(id.perm.is_identity());
    CHECK(id.scales == std::vector<Rat>(3, Rat(1)));

    SplitMix64 rng(41);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + t % 5;
        std::vector<int> images(n);
        for (int j = 0; j < n; ++j)
            images[j] = j + 1;
        for (int j = n - 1; j > 0; --j)
            std::swap(images[j], images[rng.next_int(0, j)]);
        RationalMatrix r(n);
        for (int j = 1; j <= n; ++j) {
            Rat scale(Int(rng.next_int(1, 30)), Int(rng.next_int(1, 7)));
            r.at(images[j - 1], j) = (rng.next_int(0, 1) ? 1 : -1) * scale;
        }
        MonomialFactors g = factor_monomial(r);
        RationalMatrix p(n), d(n);
        SignedMatrix pm = to_matrix(g.perm);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                p.at(i, j) = pm.at(i, j);
        for (int j = 1; j <= n; ++j) {
            CHECK(g.scales[j - 1] > 0);
            d.at(j, j) = g.scales[j - 1];
        }
        CHECK(mat_mul(p, d) == r);
    }

    RationalMatrix bad(2);
    bad.at(1, 1) = 1;
    bad.at(2, 1) = 1; // two nonzeros in a column
    bad.at(2, 2) = 1;
    CHECK_THROWS_AS(factor_monomial(bad), std::invalid_argument);

    RationalMatrix singular(2);
    singular.at(1, 1) = 1; // zero column
    CHECK_THROWS_AS(factor_monomial(singular), std::invalid_argument);
}
