#include "parity/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

const char* algebra_kind_name(AlgebraKind k)
{
    switch (k) {
    case AlgebraKind::A: return "A";
    case AlgebraKind::B: return "B";
    default: return "C";
    }
}

AlgebraKind algebra_kind_parse(const std::string& name)
{
    if (name == "A")
        return AlgebraKind::A;
    if (name == "B")
        return AlgebraKind::B;
    if (name == "C")
        return AlgebraKind::C;
    throw std::invalid_argument("algebra kind must be A, B or C");
}

namespace {

void check_same_kind(const TwoByTwo& a, const TwoByTwo& b)
{
    if (a.kind != b.kind)
        throw std::invalid_argument("algebra kind mismatch");
}

} // namespace

TwoByTwo algebra_add(const TwoByTwo& a, const TwoByTwo& b)
{
    check_same_kind(a, b);
    return {a.kind, a.x + b.x, a.y + b.y};
}

TwoByTwo algebra_mul(const TwoByTwo& a, const TwoByTwo& b)
{
    check_same_kind(a, b);
    switch (a.kind) {
    case AlgebraKind::A: return {a.kind, a.x * b.x, a.y * b.y};
    case AlgebraKind::B: return {a.kind, a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
    default: return {a.kind, a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    }
}

Rat algebra_det(const TwoByTwo& a)
{
    switch (a.kind) {
    case AlgebraKind::A: return a.x * a.y;
    case AlgebraKind::B: return a.x * a.x - a.y * a.y;
    default: return a.x * a.x + a.y * a.y;
    }
}

bool det_kernel_member(const TwoByTwo& a)
{
    if (a.kind == AlgebraKind::A)
        throw std::invalid_argument("det_kernel_member: kind A has no parity kernel");
    return algebra_det(a) == 1;
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("matrix size mismatch");
    RationalMatrix r(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("matrix size mismatch");
    RationalMatrix r(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int k = 1; k <= a.n(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 1; j <= a.n(); ++j) {
                if (b.at(k, j) == 0)
                    continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

RationalMatrix mat_scale(const Rat& s, const RationalMatrix& a)
{
    RationalMatrix r(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            r.at(i, j) = s * a.at(i, j);
    return r;
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix ab = mat_mul(a, b);
    RationalMatrix ba = mat_mul(b, a);
    RationalMatrix r(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            r.at(i, j) = ab.at(i, j) - ba.at(i, j);
    return r;
}

namespace {

RationalMatrix pair_generator(int j, int k, int n, int lower_sign)
{
    if (!(1 <= j && j < k && k <= n))
        throw std::invalid_argument("generator indices must satisfy 1 <= j < k <= n");
    RationalMatrix m(n);
    m.at(j, k) = 1;
    m.at(k, j) = lower_sign;
    return m;
}

} // namespace

RationalMatrix so2_generator(int j, int k, int n)
{
    return pair_generator(j, k, n, -1);
}

RationalMatrix so11_generator(int j, int k, int n)
{
    return pair_generator(j, k, n, 1);
}

std::vector<RationalMatrix> generator_set(const PartitionSpec& J, bool minimal)
{
    const int n = J.n();
    std::vector<RationalMatrix> gens;
    for (int i = 1; i <= J.m(); ++i) {
        const auto& axes = J.block(i);
        for (std::size_t a = 0; a < axes.size(); ++a)
            for (std::size_t b = a + 1; b < axes.size(); ++b)
                gens.push_back(so2_generator(axes[a], axes[b], n));
    }
    for (int i1 = 1; i1 <= J.m(); ++i1)
        for (int i2 = i1 + 1; i2 <= J.m(); ++i2) {
            if (minimal) {
                int j = J.block(i1).front();
                int k = J.block(i2).front();
                gens.push_back(so11_generator(std::min(j, k), std::max(j, k), n));
            } else {
                for (int j : J.block(i1))
                    for (int k : J.block(i2))
                        gens.push_back(so11_generator(std::min(j, k), std::max(j, k), n));
            }
        }
    return gens;
}

long p_formula(const PartitionSpec& J)
{
    long p = 0;
    for (int i = 1; i <= J.m(); ++i)
        p += static_cast<long>(J.block_size(i)) * (J.block_size(i) - 1) / 2;
    p += static_cast<long>(J.m()) * (J.m() - 1) / 2;
    return p;
}

bool LieBasis::insert(const RationalMatrix& m)
{
    if (m.n() != n_)
        throw std::invalid_argument("LieBasis: matrix size mismatch");
    std::vector<Rat> v = m.flat();
    const std::size_t dim = v.size();

    // reduce against existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat coeff = v[pivots_[r]]; // copy: the loop below zeroes this slot
        if (coeff == 0)
            continue;
        const auto& row = rows_[r].flat();
        for (std::size_t k = 0; k < dim; ++k)
            v[k] -= coeff * row[k];
    }
    std::size_t pivot = dim;
    for (std::size_t k = 0; k < dim; ++k)
        if (v[k] != 0) {
            pivot = k;
            break;
        }
    if (pivot == dim)
        return false;

    // normalize to leading 1 and eliminate the new pivot from old rows
    Rat lead = v[pivot];
    RationalMatrix nr(n_);
    for (std::size_t k = 0; k < dim; ++k)
        nr.at(static_cast<int>(k / n_) + 1, static_cast<int>(k % n_) + 1) = v[k] / lead;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat c = rows_[r].flat()[pivot];
        if (c == 0)
            continue;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                rows_[r].at(i, j) -= c * nr.at(i, j);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<int>(pivot));
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, static_cast<int>(pivot));
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(nr));
    return true;
}

bool LieBasis::contains(const RationalMatrix& m) const
{
    LieBasis copy = *this;
    return !copy.insert(m);
}

bool LieBasis::same_span(const LieBasis& o) const
{
    if (n_ != o.n_ || dimension() != o.dimension())
        return false;
    for (const auto& row : o.rows_)
        if (!contains(row))
            return false;
    return true;
}

LieBasis bracket_closure(const std::vector<RationalMatrix>& gens, const Caps& caps)
{
    if (gens.empty())
        throw std::invalid_argument("bracket_closure: no generators");
    const int n = gens.front().n();
    if (n > 8)
        throw std::length_error("bracket_closure: cap is n <= 8");
    for (const auto& g : gens)
        if (g.n() != n)
            throw std::invalid_argument("bracket_closure: generator size mismatch");
    (void)caps;

    LieBasis basis(n);
    for (const auto& g : gens)
        basis.insert(g);

    // close under brackets: bracket every pair of current basis rows until
    // the span stops growing
    bool grew = true;
    while (grew) {
        grew = false;
        const auto rows = basis.basis(); // copy; basis mutates below
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b)
                if (basis.insert(bracket(rows[a], rows[b])))
                    grew = true;
    }
    return basis;
}

ClosureReport closure_report(const PartitionSpec& J, const Caps& caps)
{
    ClosureReport rep;
    rep.p = p_formula(J);
    auto close = [&](bool minimal) {
        auto gens = generator_set(J, minimal);
        // a single singleton block has no generators; the algebra is zero
        return gens.empty() ? LieBasis(J.n()) : bracket_closure(gens, caps);
    };
    LieBasis minimal = close(true);
    LieBasis full = close(false);
    rep.dim_minimal = minimal.dimension();
    rep.dim_full = full.dimension();
    rep.spans_equal = minimal.same_span(full);
    return rep;
}

MonomialFactors factor_monomial(const RationalMatrix& m)
{
    const int n = m.n();
    std::vector<int> images(n, 0), signs(n, 0);
    std::vector<Rat> scales(n);
    std::vector<bool> row_used(n, false);
    for (int j = 1; j <= n; ++j) {
        int hit = 0;
        for (int i = 1; i <= n; ++i) {
            const Rat& e = m.at(i, j);
            if (e == 0)
                continue;
            if (hit++ || row_used[i - 1])
                throw std::invalid_argument("factor_monomial: not a monomial matrix");
            row_used[i - 1] = true;
            images[j - 1] = i;
            signs[j - 1] = e > 0 ? 1 : -1;
            scales[j - 1] = e > 0 ? e : Rat(-e);
        }
        if (hit == 0)
            throw std::invalid_argument("factor_monomial: zero column " + std::to_string(j));
    }
    return {SignedPermutation(std::move(images), std::move(signs)), std::move(scales)};
}

std::string matrix_str(const RationalMatrix& m)
{
    std::ostringstream out;
    for (int i = 1; i <= m.n(); ++i) {
        out << (i > 1 ? "; " : "[");
        for (int j = 1; j <= m.n(); ++j)
            out << (j > 1 ? "," : "") << rat_str(m.at(i, j));
    }
    out << "]";
    return out.str();
}

} // namespace paritygroups
