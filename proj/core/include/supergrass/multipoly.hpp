#pragma once

#include <map>
#include <optional>
#include <vector>

#include "supergrass/rational.hpp"

namespace sgr {

using Expo = std::vector<int>;

/// Exact multivariate polynomial over Q, variables identified by position.
struct MultiPoly {
    int nvars = 0;
    std::map<Expo, Rat> terms;  // no zero coefficients stored

    static MultiPoly zero(int nvars) { return MultiPoly{nvars, {}}; }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly var(int nvars, int i, int power = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_value() const;

    void add_term(const Expo& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const = default;

    /// Weighted degree if homogeneous, nullopt otherwise. Zero poly: degree 0.
    std::optional<int> homogeneous_degree(const std::vector<int>& weights) const;
    int total_degree() const;

    std::string str(const std::vector<std::string>& names) const;
};

int weighted_degree(const Expo& e, const std::vector<int>& weights);

/// Monic univariate polynomial with MultiPoly coefficients, ascending order:
/// c[0] + c[1] u + ... + u^deg.
struct UniPoly {
    std::vector<MultiPoly> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool monic() const;
    void trim();
};

/// f = g * quotient + remainder with deg remainder < deg g; g must be monic.
std::pair<UniPoly, UniPoly> monic_divmod(const UniPoly& f, const UniPoly& g);

struct GradedQuotientReport {
    std::vector<Int> dims;  // dims[d] for d = 0..up_to
    Int total() const;
};

/// Degree-by-degree dimension of Q[x]/(relations) for a weighted grading;
/// relations must be homogeneous.
GradedQuotientReport graded_quotient_dims(int nvars, const std::vector<int>& weights,
                                          const std::vector<MultiPoly>& relations,
                                          int up_to);

/// Total dimension of Q[x]/(relations) for a finite-dimensional quotient with
/// possibly inhomogeneous relations: the filtered dimension count, truncated at
/// increasing degrees until it stabilizes. Returns nullopt if no stabilization
/// below the cap.
std::optional<Int> filtered_quotient_dim(int nvars,
                                         const std::vector<MultiPoly>& relations,
                                         int degree_cap);

/// All monomials of the given weighted degree.
std::vector<Expo> monomials_of_weighted_degree(int nvars, const std::vector<int>& weights,
                                               int d);

} // namespace sgr
