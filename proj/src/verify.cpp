#include "parity/verify.hpp"

#include "parity/abelian.hpp"
#include "parity/chart.hpp"
#include "parity/group_table.hpp"
#include "parity/jp_group.hpp"
#include "parity/lattice.hpp"
#include "parity/lie.hpp"
#include "parity/odo.hpp"
#include "parity/rng.hpp"
#include "parity/signed_perm.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace paritygroups {
namespace {

// ---------------------------------------------------------------------------
// independent oracles
// ---------------------------------------------------------------------------

/// Leibniz-sum determinant of a monomial sign matrix, with permutation signs
/// by inversion counting. Shares no code with parity()'s cycle decomposition.
long long leibniz_det(const SignedMatrix& m)
{
    std::vector<int> rows(m.n);
    std::iota(rows.begin(), rows.end(), 1);
    long long det = 0;
    do {
        long long term = 1;
        for (int j = 1; j <= m.n; ++j)
            term *= m.at(rows[j - 1], j);
        if (term != 0) {
            int inversions = 0;
            for (int a = 0; a < m.n; ++a)
                for (int b = a + 1; b < m.n; ++b)
                    if (rows[a] > rows[b])
                        ++inversions;
            det += inversions % 2 == 0 ? term : -term;
        }
    } while (std::next_permutation(rows.begin(), rows.end()));
    return det;
}

/// Generator count of Eq.-style p, by brute-force pair counting.
long p_pair_count(const PartitionSpec& J)
{
    long within = 0;
    for (int j = 1; j <= J.n(); ++j)
        for (int k = j + 1; k <= J.n(); ++k)
            if (J.block_of_axis(j) == J.block_of_axis(k))
                ++within;
    long across = 0;
    for (int i1 = 1; i1 <= J.m(); ++i1)
        for (int i2 = i1 + 1; i2 <= J.m(); ++i2)
            ++across;
    return within + across;
}

std::uint64_t hyperoctahedral_order(int n) // 2^n n!
{
    std::uint64_t v = std::uint64_t{1} << n;
    for (int f = 2; f <= n; ++f)
        v *= static_cast<std::uint64_t>(f);
    return v;
}

PartitionSpec random_partition(SplitMix64& rng, int max_n)
{
    int n = static_cast<int>(rng.next_int(1, max_n));
    std::vector<int> sizes;
    int left = n;
    while (left > 0) {
        int s = static_cast<int>(rng.next_int(1, left));
        sizes.push_back(s);
        left -= s;
    }
    return PartitionSpec::from_sizes(sizes);
}

Rat random_rational(SplitMix64& rng)
{
    Int num = rng.next_int(-50, 50);
    Int den = rng.next_int(1, 10);
    return Rat(num, den);
}

/// Random element of JZ^n with entries in [-10,10].
RationalVector random_lattice_shift(SplitMix64& rng, const PartitionSpec& J)
{
    RationalVector g(J.n());
    for (int i = 1; i <= J.m(); ++i) {
        long long sum = 0;
        const auto& axes = J.block(i);
        for (int axis : axes) {
            long long v = rng.next_int(-10, 10);
            g[axis - 1] = v;
            sum += v;
        }
        if (sum % 2 != 0) {
            int last = axes.back();
            g[last - 1] += g[last - 1] < 10 ? 1 : -1;
        }
    }
    return g;
}

bool diff_in_lattice(const RationalVector& x, const RationalVector& y, const PartitionSpec& J)
{
    IntegerVector d(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        Rat diff = x[j] - y[j];
        if (boost::multiprecision::denominator(diff) != 1)
            return false;
        d[j] = boost::multiprecision::numerator(diff);
    }
    return member_J(d, J);
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

void crit_parity_homomorphism(Report& r, const VerifyOptions& opt)
{
    for (int n = 1; n <= opt.max_n; ++n) {
        ElementSet pn = enumerate_pn(n, opt.caps);
        std::vector<std::array<int, 3>> par(pn.size());
        constexpr std::array<ParityKind, 3> kinds{ParityKind::Type1, ParityKind::Type2,
                                                  ParityKind::Type3};
        for (std::size_t i = 0; i < pn.size(); ++i)
            for (int k = 0; k < 3; ++k)
                par[i][k] = parity(pn[i], kinds[k]);
        std::uint64_t violations = 0;
        for (std::size_t a = 0; a < pn.size(); ++a)
            for (std::size_t b = 0; b < pn.size(); ++b) {
                SignedPermutation z = compose(pn[a], pn[b]);
                for (int k = 0; k < 3; ++k)
                    if (parity(z, kinds[k]) != par[a][k] * par[b][k])
                        ++violations;
            }
        std::ostringstream name;
        name << "n=" << n << " violations over " << pn.size() * pn.size() << " pairs x 3 kinds";
        r.expect_eq(name.str(), std::uint64_t{0}, violations);
    }
}

void crit_kernel_orders(Report& r, const VerifyOptions& opt)
{
    struct Row {
        ParityKind kind;
        SubgroupKind sub;
        const char* name;
    };
    constexpr Row rows[] = {{ParityKind::Type1, SubgroupKind::AP, "AP"},
                            {ParityKind::Type2, SubgroupKind::BP, "BP"},
                            {ParityKind::Type3, SubgroupKind::CP, "CP"}};
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t expected = hyperoctahedral_order(n) / 2;
        for (const Row& row : rows) {
            ElementSet ker = kernel(n, row.kind, opt.caps);
            ElementSet sub = standard_subgroup(row.sub, n, opt.caps);
            r.expect_eq("|" + std::string(row.name) + "_" + std::to_string(n) + "|", expected,
                        static_cast<std::uint64_t>(ker.size()));
            r.expect_true(std::string(row.name) + "_" + std::to_string(n)
                              + " predicate set equals kernel",
                          sub == ker);
        }
    }
}

void crit_paper_listings(Report& r, const VerifyOptions& opt)
{
    auto elem = [](std::vector<int> entries) {
        SignedMatrix m;
        m.n = 2;
        m.entries = std::move(entries);
        return from_matrix(m);
    };
    ElementSet bp2_listing(2, {elem({1, 0, 0, 1}), elem({0, 1, 1, 0}), elem({-1, 0, 0, -1}),
                               elem({0, -1, -1, 0})});
    ElementSet cp2_listing(2, {elem({1, 0, 0, 1}), elem({0, 1, -1, 0}), elem({-1, 0, 0, -1}),
                               elem({0, -1, 1, 0})});
    r.expect_true("kernel(2,Type2) equals the four BP_2 maps element-for-element",
                  kernel(2, ParityKind::Type2, opt.caps) == bp2_listing);
    r.expect_true("kernel(2,Type3) equals the four CP_2 maps element-for-element",
                  kernel(2, ParityKind::Type3, opt.caps) == cp2_listing);
}

void crit_generation(Report& r, const VerifyOptions& opt)
{
    for (int n = 3; n <= 5; ++n) {
        r.expect_true("closure of embedded CP_2 copies = CP_" + std::to_string(n),
                      closure(embedded_generators(EmbeddedKind::CP2, n), opt.caps)
                          == kernel(n, ParityKind::Type3, opt.caps));
        r.expect_true("closure of embedded BP_2 copies = BP_" + std::to_string(n),
                      closure(embedded_generators(EmbeddedKind::BP2, n), opt.caps)
                          == kernel(n, ParityKind::Type2, opt.caps));
        r.expect_true("closure of embedded AP_3 copies = AP_" + std::to_string(n),
                      closure(embedded_generators(EmbeddedKind::AP3, n), opt.caps)
                          == kernel(n, ParityKind::Type1, opt.caps));
    }
    for (int n = 1; n <= 8; ++n) {
        Z2SpanReport z = z2_pair_span_check(n);
        bool ok = z.spans_match && z.pair_span_order == (std::uint64_t{1} << (n - 1))
                  && z.even_subgroup_order == z.pair_span_order;
        r.expect_true("AZ_2^" + std::to_string(n) + " = span of pair vectors, order 2^"
                          + std::to_string(n - 1),
                      ok);
    }
}

void crit_quotient_orders(Report& r, const VerifyOptions&)
{
    for (int n = 1; n <= 6; ++n) {
        bool all_ok = true;
        for (const auto& sizes : compositions_of(n)) {
            PartitionSpec J = PartitionSpec::from_sizes(sizes);
            std::vector<std::uint32_t> images;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                IntegerVector x(n);
                for (int j = 0; j < n; ++j)
                    x[j] = (mask >> j) & 1u;
                images.push_back(project_node(x, J).bits);
            }
            std::sort(images.begin(), images.end());
            images.erase(std::unique(images.begin(), images.end()), images.end());
            std::uint64_t expected = std::uint64_t{1} << J.m();
            if (images.size() != expected || quotient_table(J).order != expected)
                all_ok = false;
        }
        r.expect_true("|Z^n / JZ^n| = 2^m for all partitions of n=" + std::to_string(n), all_ok);

        PartitionSpec singletons = PartitionSpec::from_sizes(std::vector<int>(n, 1));
        std::vector<std::uint32_t> images;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            IntegerVector x(n);
            for (int j = 0; j < n; ++j)
                x[j] = (mask >> j) & 1u;
            images.push_back(project_node(x, singletons).bits);
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        r.expect_eq("|Z^n / BZ^n| at n=" + std::to_string(n), std::uint64_t{1} << n,
                    static_cast<std::uint64_t>(images.size()));
    }
}

void crit_chart_exactness(Report& r, const VerifyOptions& opt)
{
    SplitMix64 rng(opt.seed);
    std::uint64_t kernel_violations = 0, hom_violations = 0, positive_violations = 0,
                  negative_violations = 0, oracle_violations = 0;
    for (int t = 0; t < 1000; ++t) {
        PartitionSpec J = random_partition(rng, 6);
        RationalVector x(J.n()), y(J.n());
        for (int j = 0; j < J.n(); ++j) {
            x[j] = random_rational(rng);
            y[j] = random_rational(rng);
        }

        RationalVector g = random_lattice_shift(rng, J);
        RationalVector xg(J.n());
        for (int j = 0; j < J.n(); ++j)
            xg[j] = x[j] + g[j];
        if (!(chart(xg, J) == chart(x, J)))
            ++kernel_violations;

        RationalVector xy(J.n());
        for (int j = 0; j < J.n(); ++j)
            xy[j] = x[j] + y[j];
        if (!(chart(xy, J) == chart_add(chart(x, J), chart(y, J))))
            ++hom_violations;

        // forced equal pair
        if (!chart_equiv(x, xg, J) || !diff_in_lattice(x, xg, J))
            ++positive_violations;

        // forced unequal pair: break integrality or one block-sum parity
        RationalVector z = xg;
        if (t % 2 == 0)
            z[static_cast<std::size_t>(rng.next_int(0, J.n() - 1))] += Rat(1, 2);
        else
            z[static_cast<std::size_t>(rng.next_int(0, J.n() - 1))] += 1;
        if (chart_equiv(x, z, J) || diff_in_lattice(x, z, J))
            ++negative_violations;

        if (chart_equiv(x, y, J) != diff_in_lattice(x, y, J))
            ++oracle_violations;
    }
    r.expect_eq("kernel invariance violations (1000 draws)", std::uint64_t{0}, kernel_violations);
    r.expect_eq("homomorphism violations (1000 draws)", std::uint64_t{0}, hom_violations);
    r.expect_eq("forced-equal pair violations (1000 draws)", std::uint64_t{0}, positive_violations);
    r.expect_eq("forced-unequal pair violations (1000 draws)", std::uint64_t{0},
                negative_violations);
    r.expect_eq("chart equality vs membership oracle mismatches", std::uint64_t{0},
                oracle_violations);
}

void crit_prop1(Report& r, const VerifyOptions& opt)
{
    for (int n = 1; n <= opt.max_n; ++n) {
        for (const auto& sizes : compositions_of(n)) {
            PartitionSpec J = PartitionSpec::from_sizes(sizes);
            Prop1Report rep = verify_prop1(J, opt.caps);
            bool ok = rep.predicate_equals_image
                      && rep.image_order * rep.kernel_order == rep.jp_order && rep.iso_check
                      && rep.rotation_order == rep.image_order;
            std::ostringstream name;
            name << "prop1 " << J.text() << ": jp " << rep.jp_order << ", kernel "
                 << rep.kernel_order << ", rotations " << rep.rotation_order;
            r.expect_true(name.str(), ok);
        }
    }
    if (opt.max_n >= 4) {
        Prop1Report rep = verify_prop1(PartitionSpec::parse("2,2"), opt.caps);
        r.expect_true("partition 2,2 pinned orders: jp 64, kernel 2, rotations 32",
                      rep.jp_order == 64 && rep.kernel_order == 2 && rep.rotation_order == 32);
    }

    auto rot_table = [&](const PartitionSpec& J) {
        auto rot = rotation_group(build_complex(J), opt.caps);
        return GroupTable::build(rot.size(), [rot](int a, int b) {
            auto prod = compose(rot[a], rot[b]);
            auto it = std::lower_bound(rot.begin(), rot.end(), prod);
            return static_cast<int>(it - rot.begin());
        });
    };
    for (int n = 1; n <= opt.max_n; ++n) {
        GroupTable single = rot_table(PartitionSpec::from_sizes({n}));
        GroupTable cp = group_table_from(kernel(n, ParityKind::Type3, opt.caps));
        r.expect_true("rotations of L^" + std::to_string(n) + "/AZ^" + std::to_string(n)
                          + " isomorphic to CP_" + std::to_string(n),
                      isomorphic(single, cp, opt.caps).has_value());
        GroupTable singles = rot_table(PartitionSpec::from_sizes(std::vector<int>(n, 1)));
        GroupTable bp = group_table_from(kernel(n, ParityKind::Type2, opt.caps));
        r.expect_true("rotations of L^" + std::to_string(n) + "/BZ^" + std::to_string(n)
                          + " isomorphic to BP_" + std::to_string(n),
                      isomorphic(singles, bp, opt.caps).has_value());
    }

    r.expect_eq("rotation group of L^1/2Z is trivial", std::uint64_t{1},
                static_cast<std::uint64_t>(
                    rotation_group(build_complex(PartitionSpec::parse("1")), opt.caps).size()));

    for (int n = 1; n <= opt.max_n; ++n) {
        FullQuotientReport fq = full_quotient_automorphisms(n, opt.caps);
        r.expect_true("L^" + std::to_string(n) + "/Z^" + std::to_string(n) + " automorphism order "
                          + std::to_string(hyperoctahedral_order(n)) + " and isomorphic to P_"
                          + std::to_string(n),
                      fq.order == hyperoctahedral_order(n) && fq.iso_checked
                          && fq.isomorphic_to_pn);
    }
}

void crit_det_bridge(Report& r, const VerifyOptions& opt)
{
    for (int n = 1; n <= opt.max_n; ++n) {
        ElementSet pn = enumerate_pn(n, opt.caps);
        std::uint64_t violations = 0;
        for (const auto& z : pn)
            if (leibniz_det(to_matrix(z)) != parity(z, ParityKind::Type3))
                ++violations;
        r.expect_eq("det(to_matrix) = Type3 parity violations at n=" + std::to_string(n),
                    std::uint64_t{0}, violations);
    }
}

void crit_lie_closure(Report& r, const VerifyOptions& opt)
{
    for (int n = 2; n <= 5; ++n) {
        LieBasis b = bracket_closure(generator_set(PartitionSpec::from_sizes({n}), true), opt.caps);
        r.expect_eq("single block n=" + std::to_string(n) + " closure dimension",
                    n * (n - 1) / 2, b.dimension());
    }
    {
        LieBasis b = bracket_closure(generator_set(PartitionSpec::parse("1,1"), true), opt.caps);
        r.expect_eq("partition 1,1 closure dimension", 1, b.dimension());
    }
    {
        // hand-computed oracle basis for "2,1": {E12-E21, E13+E31, E23+E32}
        LieBasis b = bracket_closure(generator_set(PartitionSpec::parse("2,1"), true), opt.caps);
        LieBasis hand(3);
        hand.insert(so2_generator(1, 2, 3));
        hand.insert(so11_generator(1, 3, 3));
        hand.insert(so11_generator(2, 3, 3));
        r.expect_true("partition 2,1 closure equals the hand-bracket basis (dim 3)",
                      b.dimension() == 3 && b.same_span(hand));
    }
    for (int n = 1; n <= opt.max_n; ++n) {
        bool spans_ok = true, p_ok = true;
        for (const auto& sizes : compositions_of(n)) {
            PartitionSpec J = PartitionSpec::from_sizes(sizes);
            ClosureReport rep = closure_report(J, opt.caps);
            spans_ok = spans_ok && rep.spans_equal;
            p_ok = p_ok && rep.p == p_pair_count(J);
        }
        r.expect_true("minimal and full spans equal for all partitions of n=" + std::to_string(n),
                      spans_ok);
        r.expect_true("p formula matches pair-count oracle for all partitions of n="
                          + std::to_string(n),
                      p_ok);
    }
}

void crit_monomial(Report& r, const VerifyOptions& opt)
{
    SplitMix64 rng(opt.seed ^ 0xfac702ULL);
    std::uint64_t violations = 0;
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 6;
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 1);
        for (int j = n - 1; j > 0; --j)
            std::swap(images[j], images[rng.next_int(0, j)]);
        RationalMatrix m(n);
        std::vector<Rat> scales(n);
        std::vector<int> signs(n);
        for (int j = 1; j <= n; ++j) {
            signs[j - 1] = rng.next_int(0, 1) ? 1 : -1;
            scales[j - 1] = Rat(Int(rng.next_int(1, 20)), Int(rng.next_int(1, 10)));
            m.at(images[j - 1], j) = signs[j - 1] * scales[j - 1];
        }

        MonomialFactors f = factor_monomial(m);
        // reconstruction oracle: multiply the factors back with exact matrices
        SignedMatrix pm = to_matrix(f.perm);
        RationalMatrix p(n), d(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                p.at(i, j) = pm.at(i, j);
        for (int j = 1; j <= n; ++j)
            d.at(j, j) = f.scales[j - 1];
        bool ok = mat_mul(p, d) == m;
        for (int j = 1; j <= n; ++j)
            ok = ok && f.scales[j - 1] > 0 && f.perm.image(j) == images[j - 1]
                 && f.perm.sign(j) == signs[j - 1];
        if (!ok)
            ++violations;
    }
    r.expect_eq("monomial P*D reconstruction failures (100 matrices, n <= 6)", std::uint64_t{0},
                violations);
}

void crit_odo(Report& r, const VerifyOptions& opt)
{
    constexpr double half_pi = 1.5707963267948966;
    std::uint64_t violations = 0;
    for (int t = 1; t <= 100; ++t) {
        int n = 1 + (t - 1) % 8;
        ComplexMatrix u = random_unitary(n, opt.seed + static_cast<std::uint64_t>(t));
        DecompositionResult res = odo_decompose(u, opt.tol);
        bool ok = res.reconstruction_error <= opt.tol && res.orthogonality_error <= 1e-10;
        for (double th : res.thetas)
            ok = ok && th > -half_pi && th <= half_pi;
        if (!ok)
            ++violations;
    }
    r.expect_eq("random unitary round-trip failures (100 seeds, n in 1..8)", std::uint64_t{0},
                violations);

    std::uint64_t ortho_violations = 0;
    SplitMix64 rng(opt.seed ^ 0x0d0ULL);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 5;
        // random real orthogonal by Gram-Schmidt on a real Gaussian matrix
        Eigen::MatrixXd q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                q(i, j) = rng.next_gaussian();
        for (int j = 0; j < n; ++j) {
            for (int pass = 0; pass < 2; ++pass)
                for (int k = 0; k < j; ++k)
                    q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
            q.col(j) /= q.col(j).norm();
        }
        DecompositionResult res = odo_decompose(q.cast<std::complex<double>>(), opt.tol);
        for (double th : res.thetas)
            if (std::abs(th) > 1e-12)
                ++ortho_violations;
    }
    r.expect_eq("real-orthogonal inputs give theta = 0", std::uint64_t{0}, ortho_violations);

    bool identity_ok = true;
    for (int n = 1; n <= 8; ++n) {
        DecompositionResult res = odo_decompose(ComplexMatrix::Identity(n, n), opt.tol);
        identity_ok = identity_ok
                      && (res.o1 - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12
                      && (res.o2 - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12;
        for (double th : res.thetas)
            identity_ok = identity_ok && std::abs(th) <= 1e-15;
    }
    r.expect_true("identity input yields identity factors", identity_ok);
}

using CriterionFn = void (*)(Report&, const VerifyOptions&);

struct Entry {
    Criterion meta;
    CriterionFn fn;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = {
        {{1, "parity", "parity homomorphism laws, exhaustive"}, crit_parity_homomorphism},
        {{2, "kernels", "kernel orders and predicate subgroups, n = 2..5"}, crit_kernel_orders},
        {{3, "listings", "explicit BP_2 / CP_2 listings"}, crit_paper_listings},
        {{4, "generation", "generation by embedded CP_2 / BP_2 / AP_3 and pair vectors"},
         crit_generation},
        {{5, "quotients", "quotient orders 2^m, n <= 6"}, crit_quotient_orders},
        {{6, "charts", "chart exactness, kernel and homomorphism laws"}, crit_chart_exactness},
        {{7, "prop1", "discrete rotations vs JP_n"}, crit_prop1},
        {{8, "det-bridge", "determinant equals Type3 parity"}, crit_det_bridge},
        {{9, "lie", "bracket closure dimensions and span equality"}, crit_lie_closure},
        {{10, "monomial", "monomial P*D factorization round-trip"}, crit_monomial},
        {{11, "odo", "unitary O1*diag(e^{i theta})*O2 factorization"}, crit_odo},
    };
    return entries;
}

} // namespace

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = [] {
        std::vector<Criterion> c;
        for (const auto& e : registry())
            c.push_back(e.meta);
        return c;
    }();
    return list;
}

Report run_criterion(int id, const VerifyOptions& opt)
{
    for (const auto& e : registry()) {
        if (e.meta.id != id)
            continue;
        Report r;
        r.command = "verify " + e.meta.slug;
        r.params.emplace_back("max-n", std::to_string(opt.max_n));
        r.params.emplace_back("seed", std::to_string(opt.seed));
        auto t0 = std::chrono::steady_clock::now();
        e.fn(r, opt);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown criterion id " + std::to_string(id));
}

std::vector<Report> run_all_criteria(const VerifyOptions& opt)
{
    std::vector<Report> out;
    for (const auto& e : registry())
        out.push_back(run_criterion(e.meta.id, opt));
    return out;
}

} // namespace paritygroups
