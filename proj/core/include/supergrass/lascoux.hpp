#pragma once

#include <vector>

#include "supergrass/partition.hpp"

namespace sgr {

/// The variety of n x m matrices (maps V0 -> V1) of rank <= t.
struct DetVarSpec {
    int n = 0;  // dim V0
    int m = 0;  // dim V1
    int t = 0;  // rank cutoff
    bool valid() const { return n >= 0 && m >= 0 && t >= 0 && t <= std::min(n, m); }
};

/// S_P(V0) (x) S_Q(V1^*) with its dimension. Q is recorded on the dual side.
struct RepPair {
    Partition P;
    Partition Q;
    Int dim;
    auto operator<=>(const RepPair&) const = default;
};

struct BettiEntry {
    int p = 0;       // homological degree
    int d = 0;       // internal degree, d = p + strand
    int strand = 0;  // q = d - p
    RepPair rep;
    // provenance
    int b = 0;
    Partition alpha;
    Partition beta;
};

struct BettiTable {
    DetVarSpec spec;
    std::vector<BettiEntry> entries;  // sorted by (p, d, P, Q)

    Int dim_at(int p, int d) const;
};

/// Closed-form enumeration of Tor_p^S(O_Z0, C)_{p+q}.
BettiTable betti_table(const DetVarSpec& spec);

/// Entries with strand q = k.
std::vector<BettiEntry> linear_strand(const DetVarSpec& spec, int k);

/// True iff no (P, Q) occurs twice across the table.
bool verify_multiplicity_free(const DetVarSpec& spec);

} // namespace sgr
