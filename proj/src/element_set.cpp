#include "parity/element_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace paritygroups {

ElementSet::ElementSet(int degree, std::vector<SignedPermutation> elems)
    : degree_(degree), elems_(std::move(elems))
{
    for (const auto& g : elems_)
        if (g.degree() != degree_)
            throw std::invalid_argument("ElementSet: mixed degrees");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ElementSet::contains(const SignedPermutation& g) const
{
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

long ElementSet::index_of(const SignedPermutation& g) const
{
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || !(*it == g))
        return -1;
    return it - elems_.begin();
}

bool ElementSet::is_group() const
{
    if (!contains(SignedPermutation::identity(degree_)))
        return false;
    for (const auto& g : elems_) {
        if (!contains(inverse(g)))
            return false;
        for (const auto& h : elems_)
            if (!contains(compose(g, h)))
                return false;
    }
    return true;
}

ElementSet closure(const std::vector<SignedPermutation>& gens, const Caps& caps)
{
    if (gens.empty())
        throw std::invalid_argument("closure: no generators");
    const int n = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != n)
            throw std::invalid_argument("closure: generator degree mismatch");

    std::unordered_set<std::uint64_t> seen;
    std::vector<SignedPermutation> all;
    std::vector<SignedPermutation> frontier;
    auto push = [&](const SignedPermutation& g) {
        if (seen.insert(g.key()).second) {
            all.push_back(g);
            frontier.push_back(g);
        }
    };
    push(SignedPermutation::identity(n));
    for (const auto& g : gens)
        push(g);

    while (!frontier.empty()) {
        std::vector<SignedPermutation> next;
        next.swap(frontier);
        for (const auto& f : next) {
            for (const auto& g : gens) {
                push(compose(f, g));
                if (all.size() > caps.closure_limit)
                    throw std::length_error("closure: element cap exceeded");
            }
        }
    }
    return ElementSet(n, std::move(all));
}

namespace {

void check_enum_degree(int n, const Caps& caps)
{
    if (n < 1)
        throw std::invalid_argument("degree must be positive");
    if (n > caps.enumeration_degree)
        throw std::length_error("enumeration degree cap exceeded (n = " + std::to_string(n) + ")");
}

/// Calls fn for every element of P_n in canonical order.
template <typename Fn>
void for_each_pn(int n, Fn&& fn)
{
    std::vector<int> images(n);
    for (int j = 0; j < n; ++j)
        images[j] = j + 1;
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(n);
            for (int j = 0; j < n; ++j)
                signs[j] = (mask >> (n - 1 - j)) & 1u ? -1 : 1;
            fn(SignedPermutation(images, std::move(signs)));
        }
    } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace

ElementSet enumerate_pn(int n, const Caps& caps)
{
    check_enum_degree(n, caps);
    std::vector<SignedPermutation> all;
    for_each_pn(n, [&](SignedPermutation g) { all.push_back(std::move(g)); });
    return ElementSet(n, std::move(all));
}

ElementSet kernel(int n, ParityKind kind, const Caps& caps)
{
    check_enum_degree(n, caps);
    std::vector<SignedPermutation> kept;
    for_each_pn(n, [&](SignedPermutation g) {
        if (parity(g, kind) == 1)
            kept.push_back(std::move(g));
    });
    return ElementSet(n, std::move(kept));
}

const char* subgroup_kind_name(SubgroupKind k)
{
    switch (k) {
    case SubgroupKind::AP: return "AP";
    case SubgroupKind::BP: return "BP";
    default: return "CP";
    }
}

ElementSet standard_subgroup(SubgroupKind kind, int n, const Caps& caps)
{
    check_enum_degree(n, caps);
    std::vector<SignedPermutation> kept;

    std::vector<int> images(n);
    for (int j = 0; j < n; ++j)
        images[j] = j + 1;
    do {
        const int sgn_pi = permutation_sign(images);
        if (kind == SubgroupKind::AP && sgn_pi != 1)
            continue;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(n);
            int prod = 1;
            for (int j = 0; j < n; ++j) {
                signs[j] = (mask >> (n - 1 - j)) & 1u ? -1 : 1;
                prod *= signs[j];
            }
            if (kind == SubgroupKind::BP && prod != 1)
                continue;
            if (kind == SubgroupKind::CP && sgn_pi * prod != 1)
                continue;
            kept.emplace_back(images, std::move(signs));
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return ElementSet(n, std::move(kept));
}

namespace {

/// Plants a degree-k element onto the chosen axes of {1..n}, identity elsewhere.
SignedPermutation embed(const SignedPermutation& small, const std::vector<int>& axes, int n)
{
    std::vector<int> images(n), signs(n, 1);
    for (int j = 0; j < n; ++j)
        images[j] = j + 1;
    for (int k = 1; k <= small.degree(); ++k) {
        images[axes[k - 1] - 1] = axes[small.image(k) - 1];
        signs[axes[k - 1] - 1] = small.sign(k);
    }
    return SignedPermutation(std::move(images), std::move(signs));
}

} // namespace

std::vector<SignedPermutation> embedded_generators(EmbeddedKind kind, int n)
{
    const int small_degree = kind == EmbeddedKind::AP3 ? 3 : 2;
    if (n < small_degree)
        throw std::invalid_argument("embedded_generators: degree too small");

    ElementSet small = kind == EmbeddedKind::AP3 ? standard_subgroup(SubgroupKind::AP, 3)
                       : kind == EmbeddedKind::BP2 ? standard_subgroup(SubgroupKind::BP, 2)
                                                   : standard_subgroup(SubgroupKind::CP, 2);
    std::vector<SignedPermutation> gens;
    std::vector<int> axes(small_degree);
    auto emit_for_axes = [&]() {
        for (const auto& g : small)
            if (!g.is_identity())
                gens.push_back(embed(g, axes, n));
    };
    if (small_degree == 2) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                axes = {a, b};
                emit_for_axes();
            }
    } else {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    axes = {a, b, c};
                    emit_for_axes();
                }
    }
    return gens;
}

} // namespace paritygroups
