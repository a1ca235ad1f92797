#include "supergrass/supergrass.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sgr {

SuperGrassSpec normalize(const SuperGrassSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("normalize: invalid super Grassmannian");
    if (spec.r >= spec.s) return spec;
    return SuperGrassSpec{spec.m, spec.n, spec.s, spec.r};
}

int delta(const SuperGrassSpec& spec) {
    if (spec.r < spec.s) throw std::invalid_argument("delta: spec must be normalized (r >= s)");
    return (spec.r - spec.s > spec.n - spec.m) ? spec.m - spec.n + spec.r - spec.s : 0;
}

Int CohomologyReport::dim(int i) const {
    if (i < 0 || i >= static_cast<int>(groups.size())) return 0;
    return groups[i].even_dim + groups[i].odd_dim;
}

Int CohomologyReport::total_dim() const {
    Int t = 0;
    for (const auto& g : groups) t += g.even_dim + g.odd_dim;
    return t;
}

CohomologyReport cohomology(const SuperGrassSpec& spec) {
    CohomologyReport rep;
    rep.spec = spec;
    rep.normalized = normalize(spec);
    rep.delta = delta(rep.normalized);
    const int n = rep.normalized.n, m = rep.normalized.m, s = rep.normalized.s;
    const int bigN = m - rep.delta;  // ambient dimension of the reduced Grassmannian
    GradedDims a_dims = gaussian_poincare(s, bigN);

    DetVarSpec det{n, m, m - rep.delta};
    BettiTable table = betti_table(det);
    int max_strand = 0;
    for (const auto& e : table.entries) max_strand = std::max(max_strand, e.strand);
    int max_i = 2 * s * (bigN - s) + max_strand;

    for (int i = 0; i <= max_i; ++i) {
        CohomologyGroup grp;
        grp.i = i;
        for (const auto& [deg, adim] : a_dims.dims) {
            int k = i - deg;  // strand index
            if (k < 0 || adim == 0) continue;
            for (const auto& e : table.entries) {
                if (e.strand != k) continue;
                CohomologyTerm term;
                term.a_degree = deg;
                term.strand = k;
                term.p = e.p;
                term.rep = e.rep;
                term.parity = (e.p + k) % 2;
                Int contrib = adim * e.rep.dim;
                (term.parity == 0 ? grp.even_dim : grp.odd_dim) += contrib;
                grp.terms.push_back(std::move(term));
            }
        }
        std::sort(grp.terms.begin(), grp.terms.end(), [](const auto& a, const auto& b) {
            return std::tie(a.a_degree, a.strand, a.p, a.rep.P, a.rep.Q) <
                   std::tie(b.a_degree, b.strand, b.p, b.rep.P, b.rep.Q);
        });
        rep.groups.push_back(std::move(grp));
    }
    while (!rep.groups.empty() && rep.groups.back().even_dim == 0 &&
           rep.groups.back().odd_dim == 0)
        rep.groups.pop_back();

    // closed-form Euler characteristic (normalized spec)
    const int r = rep.normalized.r;
    if (n - m >= r - s)
        rep.euler_formula = binomial(m, s);
    else if (r == s && m > n)
        rep.euler_formula = binomial(n, s);
    else
        rep.euler_formula = 0;
    Int sum = 0;
    for (const auto& g : rep.groups)
        sum += (g.i % 2 == 0 ? 1 : -1) * (g.even_dim - g.odd_dim);
    rep.euler_computed = sum;
    return rep;
}

EulerReport super_euler(const SuperGrassSpec& spec) {
    CohomologyReport rep = cohomology(spec);
    return EulerReport{rep.euler_formula, rep.euler_computed};
}

} // namespace sgr
