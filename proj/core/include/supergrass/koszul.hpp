#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergrass/lascoux.hpp"

namespace sgr {

/// Thrown when an oracle job exceeds the desk-scale resource bounds.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleJob {
    DetVarSpec spec;
    int p_max = 0;
    int d_max = 0;
    bool with_characters = false;
};

/// Torus weight of a monomial / chain basis element: row degrees followed by
/// column degrees (n + m entries, all nonnegative).
using TorusWeight = std::vector<int>;

struct TorDims {
    std::map<std::pair<int, int>, Int> dims;                       // (p, d) -> dim
    std::map<std::pair<int, int>, std::map<TorusWeight, Int>> characters;  // optional

    Int at(int p, int d) const;
};

/// Brute-force Tor_p^S(O_Z0, C)_d via Koszul-complex homology with exact
/// arithmetic, block-decomposed by torus weight. Asserts d^2 = 0 and the
/// Tor_0 = graded-quotient-dims cross-check on every run.
TorDims tor_dims(const OracleJob& job);

struct CompareReport {
    struct Mismatch {
        int p, d;
        Int lascoux_dim, oracle_dim;
        std::string note;
    };
    std::vector<Mismatch> mismatches;
    int bidegrees_checked = 0;
    bool ok() const { return mismatches.empty(); }
};

/// Per-bidegree equality between betti_table and the oracle for all p <= d
/// <= d_max; with characters, also compares torus weight multisets against
/// SSYT weights of the RepPairs.
CompareReport compare_with_lascoux(const DetVarSpec& spec, int d_max,
                                   bool with_characters = false);

} // namespace sgr
