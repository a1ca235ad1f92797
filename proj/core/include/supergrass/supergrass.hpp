#pragma once

#include <vector>

#include "supergrass/grassmann.hpp"
#include "supergrass/lascoux.hpp"

namespace sgr {

/// The super Grassmannian Gr_{r|s}(C^{n|m}).
struct SuperGrassSpec {
    int n = 0, m = 0;  // ambient even | odd dimensions
    int r = 0, s = 0;  // subspace even | odd dimensions
    bool valid() const { return 0 <= r && r <= n && 0 <= s && s <= m; }
};

/// Gr_{r|s}(C^{n|m}) = Gr_{s|r}(C^{m|n}); pick the representative with r >= s.
SuperGrassSpec normalize(const SuperGrassSpec& spec);

/// delta = m - n + r - s when r - s > n - m, else 0. Requires r >= s.
int delta(const SuperGrassSpec& spec);

struct CohomologyTerm {
    int a_degree = 0;  // degree in A (doubled convention)
    int strand = 0;    // k with the RepPair drawn from L_k
    int p = 0;         // homological degree inside the strand
    RepPair rep;
    int parity = 0;    // (p + strand) mod 2
};

struct CohomologyGroup {
    int i = 0;
    Int even_dim = 0, odd_dim = 0;
    std::vector<CohomologyTerm> terms;
};

struct CohomologyReport {
    SuperGrassSpec spec;        // as given
    SuperGrassSpec normalized;  // r >= s representative actually computed
    int delta = 0;
    std::vector<CohomologyGroup> groups;  // i = 0 .. top, trailing zeros trimmed
    Int euler_formula = 0;
    Int euler_computed = 0;

    Int dim(int i) const;
    Int total_dim() const;
};

/// H^i(X, O_X) = (+)_j A_{2j} (x) L_{i-2j} with A = H^*(Gr_s(C^{m-delta}))
/// and L_k the k-th linear strand of the determinantal variety (n, m, m-delta).
CohomologyReport cohomology(const SuperGrassSpec& spec);

struct EulerReport {
    Int formula = 0;
    Int computed = 0;
    bool ok() const { return formula == computed; }
};

/// Closed-form super Euler characteristic vs the alternating sum over the
/// computed report.
EulerReport super_euler(const SuperGrassSpec& spec);

} // namespace sgr
