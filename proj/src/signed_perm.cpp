#include "parity/signed_perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paritygroups {

const char* parity_kind_name(ParityKind k)
{
    switch (k) {
    case ParityKind::Type1: return "Type1";
    case ParityKind::Type2: return "Type2";
    default: return "Type3";
    }
}

ParityKind parity_kind_from_int(int k)
{
    switch (k) {
    case 1: return ParityKind::Type1;
    case 2: return ParityKind::Type2;
    case 3: return ParityKind::Type3;
    default: throw std::invalid_argument("parity kind must be 1, 2 or 3");
    }
}

SignedPermutation::SignedPermutation(std::vector<int> images, std::vector<int> signs)
    : images_(std::move(images)), signs_(std::move(signs))
{
    const std::size_t n = images_.size();
    if (n == 0 || n > kMaxDegree)
        throw std::invalid_argument("degree must be between 1 and 12");
    if (signs_.size() != n)
        throw std::invalid_argument("images and signs lengths differ");
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(n) || seen[v - 1])
            throw std::invalid_argument("images is not a bijection of {1..n}");
        seen[v - 1] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("signs entries must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int n)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("degree must be between 1 and 12");
    std::vector<int> images(n), signs(n, 1);
    for (int j = 0; j < n; ++j)
        images[j] = j + 1;
    return SignedPermutation(std::move(images), std::move(signs));
}

bool SignedPermutation::is_identity() const
{
    for (int j = 1; j <= degree(); ++j)
        if (image(j) != j || sign(j) != 1)
            return false;
    return true;
}

std::uint64_t SignedPermutation::key() const
{
    std::uint64_t k = 0;
    for (int j = 0; j < degree(); ++j) {
        std::uint64_t axis = (static_cast<std::uint64_t>(images_[j] - 1) << 1) | (signs_[j] < 0 ? 1u : 0u);
        k = (k << 5) | axis;
    }
    return k;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const
{
    if (images_ != o.images_)
        return images_ < o.images_;
    for (std::size_t j = 0; j < signs_.size(); ++j)
        if (signs_[j] != o.signs_[j])
            return signs_[j] > o.signs_[j]; // +1 before -1
    return false;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h)
{
    const int n = g.degree();
    if (n != h.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(n) + " vs "
                                    + std::to_string(h.degree()) + ")");
    std::vector<int> images(n), signs(n);
    for (int j = 1; j <= n; ++j) {
        images[j - 1] = g.image(h.image(j));
        signs[j - 1] = h.sign(j) * g.sign(h.image(j));
    }
    return SignedPermutation(std::move(images), std::move(signs));
}

SignedPermutation inverse(const SignedPermutation& g)
{
    const int n = g.degree();
    std::vector<int> images(n), signs(n);
    for (int j = 1; j <= n; ++j) {
        images[g.image(j) - 1] = j;
        signs[g.image(j) - 1] = g.sign(j);
    }
    return SignedPermutation(std::move(images), std::move(signs));
}

SignedMatrix to_matrix(const SignedPermutation& g)
{
    const int n = g.degree();
    SignedMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int j = 1; j <= n; ++j)
        m.entries[static_cast<std::size_t>(g.image(j) - 1) * n + (j - 1)] = g.sign(j);
    return m;
}

SignedPermutation from_matrix(const SignedMatrix& m)
{
    const int n = m.n;
    if (n < 1 || m.entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("from_matrix: malformed matrix");
    std::vector<int> images(n, 0), signs(n, 0);
    std::vector<int> row_hits(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int e = m.at(i, j);
            if (e == 0)
                continue;
            if (e != 1 && e != -1)
                throw std::invalid_argument("from_matrix: entry not in {-1,0,+1}");
            if (images[j - 1] != 0)
                throw std::invalid_argument("from_matrix: column " + std::to_string(j) + " has two nonzeros");
            if (row_hits[i - 1]++)
                throw std::invalid_argument("from_matrix: row " + std::to_string(i) + " has two nonzeros");
            images[j - 1] = i;
            signs[j - 1] = e;
        }
    }
    for (int j = 0; j < n; ++j)
        if (images[j] == 0)
            throw std::invalid_argument("from_matrix: column " + std::to_string(j + 1) + " is zero");
    return SignedPermutation(std::move(images), std::move(signs));
}

std::pair<SignedPermutation, SignedPermutation> decompose(const SignedPermutation& z)
{
    const int n = z.degree();
    SignedPermutation x(z.images(), std::vector<int>(n, 1));
    SignedPermutation y(SignedPermutation::identity(n).images(), z.signs());
    return {std::move(x), std::move(y)};
}

int permutation_sign(const std::vector<int>& images)
{
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (seen[j])
            continue;
        int len = 0;
        for (int k = j; !seen[k]; k = images[k] - 1) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

int parity(const SignedPermutation& z, ParityKind k)
{
    int sgn_x = permutation_sign(z.images());
    int sgn_y = 1;
    for (int s : z.signs())
        sgn_y *= s;
    switch (k) {
    case ParityKind::Type1: return sgn_x;
    case ParityKind::Type2: return sgn_y;
    default: return sgn_x * sgn_y;
    }
}

std::string encode(const SignedPermutation& g)
{
    std::ostringstream out;
    out << "π:[";
    for (int j = 1; j <= g.degree(); ++j)
        out << (j > 1 ? "," : "") << g.image(j);
    out << "];ε:[";
    for (int j = 1; j <= g.degree(); ++j)
        out << (j > 1 ? "," : "") << (g.sign(j) > 0 ? "+1" : "-1");
    out << "]";
    return out.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& body)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty())
            throw std::invalid_argument("empty list entry");
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad integer \"" + tok + "\"");
        out.push_back(v);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

std::string expect_bracketed(const std::string& text, const std::string& prefix, std::size_t& pos)
{
    if (text.compare(pos, prefix.size(), prefix) != 0)
        throw std::invalid_argument("expected \"" + prefix + "\"");
    pos += prefix.size();
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
        throw std::invalid_argument("missing ']'");
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;
    return body;
}

} // namespace

SignedPermutation decode_signed_permutation(const std::string& text)
{
    try {
        std::size_t pos = 0;
        std::string images_body = expect_bracketed(text, "π:[", pos);
        if (text.compare(pos, 1, ";") != 0)
            throw std::invalid_argument("expected ';'");
        ++pos;
        std::string signs_body = expect_bracketed(text, "ε:[", pos);
        if (pos != text.size())
            throw std::invalid_argument("trailing characters");
        return SignedPermutation(parse_int_list(images_body), parse_int_list(signs_body));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("cannot parse element \"" + text + "\": " + e.what());
    }
}

} // namespace paritygroups
