#pragma once

#include <string>

#include "supergrass/multipoly.hpp"

namespace sgr {

/// Splitting ring of a monic degree-n polynomial f, presented by the tower
/// f_1 = f, f_{i+1} = f_i / (u - xi_i). Ambient variables are a_1..a_n (when
/// universal) followed by xi_1..xi_n.
struct SplitRing {
    int n = 0;
    bool universal = false;
    UniPoly f;                    // over the ambient variables
    std::vector<UniPoly> tower;   // f_1..f_n; f_i has degree n-i+1
    std::vector<MultiPoly> xi_reductions;  // xi_i^{n-i+1} - f_i(xi_i)

    int nvars() const { return universal ? 2 * n : n; }
    int xi_index(int i) const { return (universal ? n : 0) + i; }  // i in 0..n-1
    std::vector<int> weights() const;  // halved: a_i -> i, xi -> 1
    std::vector<std::string> var_names() const;
    /// e_i(xi) - (-1)^i a_i, i = 1..n.
    std::vector<MultiPoly> defining_relations() const;
};

SplitRing make_split_ring_universal(int n);
/// Specialized ring: f given by ascending coefficients c0..cn with cn = 1.
SplitRing make_split_ring(const std::vector<Rat>& f_ascending);

/// Staircase normal form: result has deg_{xi_i} <= n - i for every i.
MultiPoly split_normal_form(const SplitRing& ring, const MultiPoly& elem);

/// Factorization ring Fact^{p,q}(f): relations are the remainder coefficients
/// of f / (u^p + b_1 u^{p-1} + ... + b_p); the c's of the complementary factor
/// are eliminated via the division quotient. Ambient variables are a_1..a_n
/// (when universal) followed by b_1..b_p.
struct FactRing {
    int n = 0;
    int p = 0;
    bool universal = false;
    std::vector<MultiPoly> relations;  // exactly p relations
    UniPoly g;                         // u^p + b_1 u^{p-1} + ... + b_p
    UniPoly h;                         // the eliminated complementary factor
    int nvars() const { return (universal ? n : 0) + p; }
    std::vector<int> weights() const;  // halved: a_i -> i, b_i -> i
    std::vector<std::string> var_names() const;
};

FactRing fact_presentation_universal(int n, int p);
FactRing fact_presentation(const std::vector<Rat>& f_ascending, int p);

struct RankReport {
    Int expected = 0;
    Int computed = 0;
    bool ok() const { return expected == computed; }
};

/// Total Q-dimension of Split(f) at a rational specialization vs n!.
RankReport verify_free_rank_split(const std::vector<Rat>& f_ascending);
/// Total Q-dimension of Fact^{p,q}(f) at a rational specialization vs binom(n,p).
RankReport verify_free_rank_fact(const std::vector<Rat>& f_ascending, int p);

/// Graded dims (halved degrees) of Split(u^n) / Fact(u^n, p).
GradedQuotientReport split_graded_dims(int n);
GradedQuotientReport fact_graded_dims(int n, int p);

/// Sylvester matrix of f = a0 x^n + ... + a_n and g = b0 x^m + ... + b_m,
/// coefficients descending; size (n+m) x (n+m). Requires a0 != 0.
struct SylvesterMatrix {
    int n = 0, m = 0;
    std::vector<MultiPoly> entries;  // row-major, (n+m)^2
    const MultiPoly& at(int i, int j) const { return entries[size_t(i) * (n + m) + j]; }
};

SylvesterMatrix sylvester(const std::vector<MultiPoly>& a_desc,
                          const std::vector<MultiPoly>& b_desc, int n, int m);
MultiPoly sylvester_det(const SylvesterMatrix& syl);
/// Nullity over Q for rational coefficient lists (descending).
long sylvester_nullity(const std::vector<Rat>& a_desc, const std::vector<Rat>& b_desc,
                       int n, int m);

/// Discriminant of a monic f: det Syl_{n,n-1}(f, f'), sign-normalized so that
/// disc(u^2 + a1 u + a2) = a1^2 - 4 a2.
MultiPoly discriminant(const UniPoly& f);
Rat discriminant(const std::vector<Rat>& f_ascending);

} // namespace sgr
