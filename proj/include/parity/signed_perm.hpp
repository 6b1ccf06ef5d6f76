#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace paritygroups {

constexpr int kMaxDegree = 12;

enum class ParityKind { Type1, Type2, Type3 };

const char* parity_kind_name(ParityKind k);
ParityKind parity_kind_from_int(int k); // 1, 2 or 3

/// Monomial +-1 matrix: exactly one nonzero entry per row and per column.
struct SignedMatrix {
    int n = 0;
    std::vector<int> entries; // row-major, values in {-1,0,+1}

    int at(int row, int col) const { return entries[static_cast<std::size_t>(row - 1) * n + (col - 1)]; }
};

/// Element of P_n = S_2 wr S_n: the linear map sending axis e_j to
/// sign(j) * e_{image(j)}.  Axes are 1-based everywhere.
class SignedPermutation {
public:
    /// images must be a bijection of {1..n}, signs entries +-1; 1 <= n <= 12.
    SignedPermutation(std::vector<int> images, std::vector<int> signs);

    static SignedPermutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int j) const { return images_[j - 1]; }
    int sign(int j) const { return signs_[j - 1]; }
    const std::vector<int>& images() const { return images_; }
    const std::vector<int>& signs() const { return signs_; }

    bool is_identity() const;

    /// Packed 5-bits-per-axis key; respects the canonical order below.
    std::uint64_t key() const;

    bool operator==(const SignedPermutation& o) const
    {
        return images_ == o.images_ && signs_ == o.signs_;
    }
    /// Canonical total order: lexicographic on (images, signs) with +1 < -1.
    bool operator<(const SignedPermutation& o) const;

private:
    std::vector<int> images_;
    std::vector<int> signs_;
};

/// Group law: the result acts as g after h (matches the matrix product
/// to_matrix(g) * to_matrix(h)).
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

SignedMatrix to_matrix(const SignedPermutation& g);
SignedPermutation from_matrix(const SignedMatrix& m);

/// Unique factorization z = x*y with x pure permutation and y pure signs.
std::pair<SignedPermutation, SignedPermutation> decompose(const SignedPermutation& z);

/// Sign of a permutation given as 1-based images, by cycle decomposition.
int permutation_sign(const std::vector<int>& images);

/// The three parity homomorphisms P_n -> {+1,-1}:
/// Type1 = sign of the permutation part, Type2 = product of the axis signs,
/// Type3 = their product (the determinant of the matrix image).
int parity(const SignedPermutation& z, ParityKind k);

/// Text form used by the CLI and JSON reports, e.g. "π:[2,1];ε:[+1,-1]".
std::string encode(const SignedPermutation& g);
SignedPermutation decode_signed_permutation(const std::string& text);

} // namespace paritygroups
