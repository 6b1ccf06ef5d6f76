#pragma once

#include "parity/element_set.hpp"
#include "parity/partition.hpp"
#include "parity/rational.hpp"
#include "parity/signed_perm.hpp"

#include <string>
#include <vector>

namespace paritygroups {

/// The three 2x2 matrix algebras: A = diag(x,y), B = [[x,y],[y,x]],
/// C = [[x,y],[-y,x]].
enum class AlgebraKind { A, B, C };
const char* algebra_kind_name(AlgebraKind k);
AlgebraKind algebra_kind_parse(const std::string& name);

struct TwoByTwo {
    AlgebraKind kind;
    Rat x, y;

    bool operator==(const TwoByTwo& o) const { return kind == o.kind && x == o.x && y == o.y; }
};

TwoByTwo algebra_add(const TwoByTwo& a, const TwoByTwo& b);
TwoByTwo algebra_mul(const TwoByTwo& a, const TwoByTwo& b);
/// det per kind: A: xy; B: x^2 - y^2; C: x^2 + y^2.
Rat algebra_det(const TwoByTwo& a);

/// Membership in the det = 1 kernel: SO(2) for kind C, SO(1,1) for kind B.
/// Kind A is rejected (no parity kernel is attached to it).
bool det_kernel_member(const TwoByTwo& a);

/// Exact square rational matrix.
class RationalMatrix {
public:
    explicit RationalMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
    static RationalMatrix identity(int n);

    int n() const { return n_; }
    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; } // 1-based
    const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
    const std::vector<Rat>& flat() const { return e_; }

    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    int n_;
    std::vector<Rat> e_;
};

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_scale(const Rat& s, const RationalMatrix& a);
/// Commutator [a,b] = ab - ba.
RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b);

/// Tangent generators of the one-parameter groups SO_jk(2) and SO_jk(1,1):
/// E_jk - E_kj (rotation) and E_jk + E_kj (hyperbolic), 1 <= j < k <= n.
RationalMatrix so2_generator(int j, int k, int n);
RationalMatrix so11_generator(int j, int k, int n);

/// Generators attached to a partition. Full: rotation generators for every
/// within-block pair and hyperbolic generators for every cross-block pair.
/// Minimal: the same rotations plus one hyperbolic generator per unordered
/// block pair (smallest axis of each block).
std::vector<RationalMatrix> generator_set(const PartitionSpec& J, bool minimal);

/// p = sum_i n_i (n_i - 1)/2 + m(m-1)/2.
long p_formula(const PartitionSpec& J);

/// Bracket-closed linear span in reduced row-echelon form over the n^2
/// matrix coordinates; canonical for the subspace, so independent of
/// generator order.
class LieBasis {
public:
    explicit LieBasis(int n) : n_(n) {}

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<RationalMatrix>& basis() const { return rows_; }

    /// Reduces m against the basis; inserts the remainder if nonzero.
    /// Returns true when the span grew.
    bool insert(const RationalMatrix& m);
    /// True iff m lies in the current span.
    bool contains(const RationalMatrix& m) const;
    bool same_span(const LieBasis& o) const;

private:
    int n_;
    std::vector<RationalMatrix> rows_; // ascending pivot order, RREF
    std::vector<int> pivots_;          // 0-based flat pivot index per row
};

LieBasis bracket_closure(const std::vector<RationalMatrix>& gens, const Caps& caps = {});

struct ClosureReport {
    long p = 0;
    int dim_minimal = 0;
    int dim_full = 0;
    bool spans_equal = false;
};

/// Compares the closures of the minimal and full generator sets. Makes no
/// claim relating p to the dimensions; both are reported.
ClosureReport closure_report(const PartitionSpec& J, const Caps& caps = {});

struct MonomialFactors {
    SignedPermutation perm;  // P
    std::vector<Rat> scales; // D, strictly positive, indexed by column
};

/// Unique factorization M = to_matrix(P) * diag(D) of an invertible
/// monomial matrix; P is the component index of M.
MonomialFactors factor_monomial(const RationalMatrix& m);

std::string matrix_str(const RationalMatrix& m);

} // namespace paritygroups
