#include "supergrass/lascoux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgr {

Int BettiTable::dim_at(int p, int d) const {
    Int tot = 0;
    for (const auto& e : entries)
        if (e.p == p && e.d == d) tot += e.rep.dim;
    return tot;
}

namespace {

Partition build_P(int a, int b, const Partition& alpha, const Partition& beta) {
    std::vector<int> parts;
    for (int i = 0; i < b; ++i) parts.push_back(b + alpha.part(i));
    for (int i = 0; i < a; ++i) parts.push_back(b);
    for (int x : beta.parts()) parts.push_back(x);
    return Partition(std::move(parts));
}

Partition build_Q(int a, int b, const Partition& alpha, const Partition& beta) {
    Partition bc = conjugate(beta);
    Partition ac = conjugate(alpha);
    std::vector<int> parts;
    for (int i = 0; i < b; ++i) parts.push_back(b + bc.part(i));
    for (int i = 0; i < a; ++i) parts.push_back(b);
    for (int x : ac.parts()) parts.push_back(x);
    return Partition(std::move(parts));
}

} // namespace

BettiTable betti_table(const DetVarSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid determinantal spec");
    const int a = spec.t;
    const int n = spec.n, m = spec.m;
    BettiTable table;
    table.spec = spec;

    // b = 0 only ever contributes the trivial entry (alpha = beta = empty).
    table.entries.push_back(BettiEntry{0, 0, 0, RepPair{Partition{}, Partition{}, 1},
                                       0, Partition{}, Partition{}});

    // Survival bounds: l(P) = b + a + l(beta) <= n and l(Q) = b + a + alpha_1 <= m.
    for (int b = 1; b + a <= std::min(n, m); ++b) {
        int alpha_max = m - a - b;   // alpha_1 bound, l(alpha) <= b
        int beta_len_max = n - a - b;  // beta_1 <= b
        for (int asz = 0; asz <= b * alpha_max; ++asz) {
            for (const auto& alpha : partitions_of(asz, b, alpha_max)) {
                for (int bsz = 0; bsz <= b * beta_len_max; ++bsz) {
                    for (const auto& beta : partitions_of(bsz, beta_len_max, b)) {
                        Partition P = build_P(a, b, alpha, beta);
                        Partition Q = build_Q(a, b, alpha, beta);
                        Int dP = dim_schur(P, n);
                        Int dQ = dim_schur(Q, m);
                        if (dP == 0 || dQ == 0) continue;
                        BettiEntry e;
                        e.b = b;
                        e.alpha = alpha;
                        e.beta = beta;
                        e.p = b * b + asz + bsz;
                        e.strand = a * b;
                        e.d = e.p + e.strand;
                        e.rep = RepPair{std::move(P), std::move(Q), dP * dQ};
                        table.entries.push_back(std::move(e));
                    }
                }
            }
        }
    }

    std::sort(table.entries.begin(), table.entries.end(),
              [](const BettiEntry& x, const BettiEntry& y) {
                  return std::tie(x.p, x.d, x.rep.P, x.rep.Q) <
                         std::tie(y.p, y.d, y.rep.P, y.rep.Q);
              });
    return table;
}

std::vector<BettiEntry> linear_strand(const DetVarSpec& spec, int k) {
    std::vector<BettiEntry> out;
    for (const auto& e : betti_table(spec).entries)
        if (e.strand == k) out.push_back(e);
    return out;
}

bool verify_multiplicity_free(const DetVarSpec& spec) {
    std::set<std::pair<Partition, Partition>> seen;
    for (const auto& e : betti_table(spec).entries)
        if (!seen.insert({e.rep.P, e.rep.Q}).second) return false;
    return true;
}

} // namespace sgr
