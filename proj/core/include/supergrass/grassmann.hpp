#pragma once

#include <map>

#include "supergrass/partition.hpp"

namespace sgr {

struct GrassSpec {
    int s = 0;  // subspace dimension
    int N = 0;  // ambient dimension
    BoxBound box() const { return BoxBound{s, N - s}; }
};

/// Exact-rational linear combination of Schubert classes sigma_lambda.
struct CohomologyClass {
    std::map<Partition, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Partition& p, const Rat& c);
};

/// Schubert basis of the cohomology in a given (even) degree.
std::vector<Partition> grass_basis(const GrassSpec& spec, int degree);

/// Cup product via LR expansion truncated to the s x (N-s) box.
CohomologyClass cup(const GrassSpec& spec, const CohomologyClass& x,
                    const CohomologyClass& y);

/// binom(N, s) = total dimension of H^*(Gr_s(C^N)).
Int grass_total_dim(const GrassSpec& spec);

} // namespace sgr
