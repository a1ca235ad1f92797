#pragma once

#include <compare>
#include <vector>

#include "supergrass/linalg.hpp"
#include "supergrass/qpoly.hpp"

namespace sgr {

/// A pair of linear maps f: V0 -> V1 (m x n) and g: V1 -> V0 (n x m).
struct MatrixPair {
    QMat f;  // rows = dim V1, cols = dim V0
    QMat g;

    int dim_v0() const { return f.cols(); }
    int dim_v1() const { return f.rows(); }
};

/// Indecomposable tags:
///   A(k, pi)  - pi monic irreducible; dims k*deg(pi) | k*deg(pi)
///   A(k, inf) - the eigenvalue-infinity string;   dims k | k
///   B(k)      - dims (k+1) | k
///   Bshift(k) - dims k | (k+1)
struct IndecompTag {
    enum class Type { A, B, Bshift };
    Type type = Type::A;
    int k = 1;
    QPoly poly;       // monic irreducible, empty when at_infinity or type != A
    bool at_infinity = false;

    int dim_v0() const;
    int dim_v1() const;
    std::strong_ordering operator<=>(const IndecompTag& o) const;
    bool operator==(const IndecompTag& o) const { return (*this <=> o) == 0; }
};

/// Canonically sorted multiset of tags.
struct IndecompMultiset {
    std::vector<IndecompTag> tags;

    void add(IndecompTag tag, int count = 1);
    void normalize();
    int dim_v0() const;
    int dim_v1() const;
    bool operator==(const IndecompMultiset& o) const = default;
};

/// Block-diagonal realization of a multiset.
MatrixPair synthesize(const IndecompMultiset& ms);

/// Complete decomposition of a pair into indecomposables.
IndecompMultiset classify(const MatrixPair& pair);

/// chi(u)/u^delta where chi is the characteristic polynomial of fg;
/// throws if u^delta does not divide chi.
QPoly reduced_charpoly(const MatrixPair& pair, int delta);

/// Base change: f -> Q f P^{-1}, g -> P g Q^{-1} with P in GL(V0), Q in GL(V1).
MatrixPair conjugate(const MatrixPair& pair, const QMat& P, const QMat& Q);

/// Ranks of all alternating words of length 1..max_len; for each length, the
/// word ending in f (applied to V0 first) then the word ending in g.
std::vector<Int> word_ranks(const MatrixPair& pair, int max_len);

} // namespace sgr
