#include "parity/group_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace paritygroups {

GroupTable GroupTable::build(std::size_t n, const std::function<int(int, int)>& compose_fn)
{
    if (n == 0 || n > 65535)
        throw std::invalid_argument("group table order out of range");
    GroupTable t;
    t.order = static_cast<int>(n);
    t.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int c = compose_fn(static_cast<int>(a), static_cast<int>(b));
            if (c < 0 || c >= t.order)
                throw std::logic_error("group table: compose left the element set");
            t.mul[a * n + b] = static_cast<std::uint16_t>(c);
        }

    for (std::size_t e = 0; e < n; ++e) {
        bool neutral = true;
        for (std::size_t a = 0; a < n && neutral; ++a)
            neutral = t.mul[e * n + a] == a && t.mul[a * n + e] == a;
        if (neutral) {
            t.identity = static_cast<int>(e);
            break;
        }
    }
    if (t.identity < 0)
        throw std::logic_error("group table: no identity element");

    t.inv.assign(n, 0);
    std::vector<bool> has_inv(n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t.mul[a * n + b] == t.identity && t.mul[b * n + a] == t.identity) {
                t.inv[a] = static_cast<std::uint16_t>(b);
                has_inv[a] = true;
            }
    for (std::size_t a = 0; a < n; ++a)
        if (!has_inv[a])
            throw std::logic_error("group table: element without inverse");

    t.element_order.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        int x = static_cast<int>(a);
        int k = 1;
        while (x != t.identity) {
            x = t.compose(x, static_cast<int>(a));
            ++k;
            if (k > t.order)
                throw std::logic_error("group table: runaway element order");
        }
        t.element_order[a] = k;
    }
    return t;
}

std::vector<int> GroupTable::order_histogram() const
{
    std::vector<int> h(static_cast<std::size_t>(order) + 1, 0);
    for (int k : element_order)
        ++h[k];
    return h;
}

GroupTable group_table_from(const ElementSet& s)
{
    return GroupTable::build(s.size(), [&](int a, int b) {
        return static_cast<int>(s.index_of(compose(s[a], s[b])));
    });
}

namespace {

/// (element order, centralizer size) — preserved by every isomorphism.
std::vector<std::pair<int, int>> fingerprints(const GroupTable& t)
{
    std::vector<std::pair<int, int>> fp(t.order);
    for (int a = 0; a < t.order; ++a) {
        int cent = 0;
        for (int b = 0; b < t.order; ++b)
            if (t.compose(a, b) == t.compose(b, a))
                ++cent;
        fp[a] = {t.element_order[a], cent};
    }
    return fp;
}

/// Greedy minimal-ish generating sequence in canonical index order.
std::vector<int> generating_sequence(const GroupTable& t)
{
    std::vector<int> gens;
    std::vector<bool> generated(t.order, false);
    generated[t.identity] = true;
    int count = 1;
    auto grow = [&](int g) {
        // close the generated set under multiplication by g and old elements
        std::vector<int> frontier{g};
        if (!generated[g]) {
            generated[g] = true;
            ++count;
        }
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int b = 0; b < t.order; ++b) {
                    if (!generated[b])
                        continue;
                    for (int c : {t.compose(a, b), t.compose(b, a)})
                        if (!generated[c]) {
                            generated[c] = true;
                            ++count;
                            next.push_back(c);
                        }
                }
            frontier.swap(next);
        }
    };
    for (int g = 0; g < t.order && count < t.order; ++g) {
        if (generated[g])
            continue;
        gens.push_back(g);
        grow(g);
    }
    return gens;
}

struct IsoSearch {
    const GroupTable& g;
    const GroupTable& h;
    const std::vector<int>& gens;
    const std::vector<std::vector<int>>& candidates; // per generator slot
    std::vector<int> best;

    /// Extends the partial map determined by images of gens[0..k]; returns
    /// the full map when consistent and defined everywhere, empty otherwise.
    std::vector<int> extend(const std::vector<int>& images, std::size_t k) const
    {
        std::vector<int> map(g.order, -1);
        std::vector<bool> used(h.order, false);
        map[g.identity] = h.identity;
        used[h.identity] = true;
        std::vector<int> queue{g.identity};
        std::size_t head = 0;
        int mapped = 1;
        while (head < queue.size()) {
            int a = queue[head++];
            for (std::size_t i = 0; i < k; ++i) {
                int b = g.compose(a, gens[i]);
                int bh = h.compose(map[a], images[i]);
                if (map[b] == -1) {
                    if (used[bh])
                        return {}; // not injective
                    map[b] = bh;
                    used[bh] = true;
                    ++mapped;
                    queue.push_back(b);
                } else if (map[b] != bh) {
                    return {}; // inconsistent
                }
            }
        }
        if (k == gens.size() && mapped != g.order)
            return {}; // gens should generate; defensive
        map.push_back(mapped); // piggyback the mapped count
        return map;
    }

    bool search(std::vector<int>& images, std::size_t k)
    {
        if (k == gens.size()) {
            auto map = extend(images, k);
            if (map.empty() || map.back() != g.order)
                return false;
            map.pop_back();
            best = std::move(map);
            return true;
        }
        for (int cand : candidates[k]) {
            images[k] = cand;
            auto partial = extend(images, k + 1);
            if (partial.empty())
                continue;
            if (search(images, k + 1))
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> isomorphic(const GroupTable& g, const GroupTable& h, const Caps& caps)
{
    if (static_cast<std::size_t>(g.order) > caps.iso_limit
        || static_cast<std::size_t>(h.order) > caps.iso_limit)
        throw std::length_error("isomorphic: order exceeds cap");
    if (g.order != h.order)
        return std::nullopt;
    if (g.order_histogram() != h.order_histogram())
        return std::nullopt;

    auto fg = fingerprints(g);
    auto fh = fingerprints(h);
    {
        auto sg = fg;
        auto sh = fh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh)
            return std::nullopt;
    }

    auto gens = generating_sequence(g);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int b = 0; b < h.order; ++b)
            if (fh[b] == fg[gens[i]])
                candidates[i].push_back(b);

    IsoSearch s{g, h, gens, candidates, {}};
    std::vector<int> images(gens.size(), -1);
    if (s.search(images, 0))
        return s.best;
    return std::nullopt;
}

} // namespace paritygroups
