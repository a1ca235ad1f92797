#include "supergrass/koszul.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include "supergrass/linalg.hpp"
#include "supergrass/multipoly.hpp"

namespace sgr {

Int TorDims::at(int p, int d) const {
    auto it = dims.find({p, d});
    return it == dims.end() ? Int(0) : it->second;
}

namespace {

long max_cells() {
    if (const char* env = std::getenv("SUPERGRASS_MAX_CELLS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 4'000'000;
}

// Torus weight of a monomial in the x_ij: row degrees then column degrees.
TorusWeight weight_of(const Expo& e, int n, int m) {
    TorusWeight w(n + m, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            w[i] += e[i * m + j];
            w[n + j] += e[i * m + j];
        }
    return w;
}

std::vector<Expo> monomials_of_degree(int nvars, int d) {
    return monomials_of_weighted_degree(nvars, std::vector<int>(nvars, 1), d);
}

// All (t+1)x(t+1) minors of the generic n x m matrix, by permutation expansion.
std::vector<MultiPoly> minor_ideal(int n, int m, int t) {
    int k = t + 1;
    std::vector<MultiPoly> out;
    if (k > n || k > m) return out;
    std::vector<int> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    auto next_subset = [](std::vector<int>& s, int bound) {
        int k2 = static_cast<int>(s.size());
        int pos = k2 - 1;
        while (pos >= 0 && s[pos] == bound - k2 + pos) --pos;
        if (pos < 0) return false;
        ++s[pos];
        for (int i = pos + 1; i < k2; ++i) s[i] = s[i - 1] + 1;
        return true;
    };
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            MultiPoly minor = MultiPoly::zero(n * m);
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                int inv = 0;
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b)
                        if (perm[a] > perm[b]) ++inv;
                Expo e(n * m, 0);
                for (int a = 0; a < k; ++a) e[rows[a] * m + cols[perm[a]]] += 1;
                minor.add_term(e, (inv % 2 == 0) ? 1 : -1);
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(std::move(minor));
        } while (next_subset(cols, m));
    } while (next_subset(rows, n));
    return out;
}

// Normal-form data for (S/I)_e, block by torus weight.
struct QuotientDegree {
    std::vector<Expo> basis;                 // non-pivot monomials
    std::vector<TorusWeight> basis_weight;   // parallel to basis
    std::map<Expo, int> basis_index;
    // pivot monomial -> combination of basis indices
    std::map<Expo, std::vector<std::pair<int, Rat>>> pivot_nf;
};

} // namespace

TorDims tor_dims(const OracleJob& job) {
    const auto& [n, m, t] = job.spec;
    if (!job.spec.valid() || job.p_max < 0 || job.d_max < 0)
        throw std::invalid_argument("tor_dims: invalid job");
    if (n * m > 12 || job.d_max > 10)
        throw ResourceError("tor_dims: job exceeds desk-scale bounds (n*m <= 12, d_max <= 10)");
    const int nv = n * m;
    const long cell_budget = max_cells();
    long cells_used = 0;
    auto charge = [&](long cells) {
        cells_used += cells;
        if (cells_used > cell_budget)
            throw ResourceError("tor_dims: cell budget exceeded (set SUPERGRASS_MAX_CELLS)");
    };

    std::vector<MultiPoly> minors = minor_ideal(n, m, t);
    const int mdeg = t + 1;

    // monomials per degree, grouped by weight
    std::vector<std::map<TorusWeight, std::vector<Expo>>> mons_by_weight(job.d_max + 1);
    for (int e = 0; e <= job.d_max; ++e)
        for (auto& mon : monomials_of_degree(nv, e))
            mons_by_weight[e][weight_of(mon, n, m)].push_back(std::move(mon));

    // quotient normal forms per degree
    std::vector<QuotientDegree> quot(job.d_max + 1);
    for (int e = 0; e <= job.d_max; ++e) {
        QuotientDegree& qd = quot[e];
        for (const auto& [w, mons] : mons_by_weight[e]) {
            // relation rows: multiplier * minor with matching weight
            std::vector<std::pair<const MultiPoly*, const Expo*>> gens;
            if (e >= mdeg && !minors.empty()) {
                for (const auto& minor : minors) {
                    TorusWeight wm = weight_of(minor.terms.begin()->first, n, m);
                    TorusWeight need(n + m);
                    bool ok = true;
                    for (int i = 0; i < n + m; ++i) {
                        need[i] = w[i] - wm[i];
                        if (need[i] < 0) { ok = false; break; }
                    }
                    if (!ok) continue;
                    auto it = mons_by_weight[e - mdeg].find(need);
                    if (it == mons_by_weight[e - mdeg].end()) continue;
                    for (const auto& mult : it->second) gens.emplace_back(&minor, &mult);
                }
            }
            std::map<Expo, int> col_of;
            for (size_t i = 0; i < mons.size(); ++i) col_of[mons[i]] = static_cast<int>(i);
            charge(static_cast<long>(gens.size()) * static_cast<long>(mons.size()));
            QMat rel(static_cast<int>(gens.size()), static_cast<int>(mons.size()));
            for (size_t r = 0; r < gens.size(); ++r)
                for (const auto& [me, c] : gens[r].first->terms) {
                    Expo prod(nv);
                    for (int i = 0; i < nv; ++i) prod[i] = me[i] + (*gens[r].second)[i];
                    rel.at(static_cast<int>(r), col_of.at(prod)) += c;
                }
            std::vector<int> pivots = rref_in_place(rel);
            std::vector<bool> is_pivot(mons.size(), false);
            for (int p : pivots) is_pivot[p] = true;
            std::vector<int> global(mons.size(), -1);
            for (size_t c = 0; c < mons.size(); ++c) {
                if (is_pivot[c]) continue;
                global[c] = static_cast<int>(qd.basis.size());
                qd.basis.push_back(mons[c]);
                qd.basis_weight.push_back(w);
                qd.basis_index[mons[c]] = global[c];
            }
            for (size_t pi = 0; pi < pivots.size(); ++pi) {
                std::vector<std::pair<int, Rat>> comb;
                for (size_t c = 0; c < mons.size(); ++c)
                    if (!is_pivot[c] && rel.at(static_cast<int>(pi), static_cast<int>(c)) != 0)
                        comb.emplace_back(global[c],
                                          -rel.at(static_cast<int>(pi), static_cast<int>(c)));
                qd.pivot_nf[mons[pivots[pi]]] = std::move(comb);
            }
        }
    }

    // independent Tor_0 cross-check: quotient dims by the generic sparse path
    {
        GradedQuotientReport rep =
            graded_quotient_dims(nv, std::vector<int>(nv, 1), minors, job.d_max);
        for (int e = 0; e <= job.d_max; ++e)
            if (rep.dims[e] != Int(static_cast<long>(quot[e].basis.size())))
                throw std::logic_error("tor_dims: Tor_0 cross-check failed");
    }

    TorDims out;
    for (int d = 0; d <= job.d_max; ++d) {
        int p_top = std::min({job.p_max + 1, d, nv});
        // chain bases per weight: (p-subset mask, quotient basis index)
        std::map<TorusWeight, std::vector<std::map<std::pair<unsigned, int>, int>>> chains;
        for (int p = 0; p <= p_top; ++p) {
            for (unsigned mask = 0; mask < (1u << nv); ++mask) {
                if (std::popcount(mask) != p) continue;
                Expo sube(nv, 0);
                for (int v = 0; v < nv; ++v)
                    if (mask & (1u << v)) sube[v] = 1;
                TorusWeight wm = weight_of(sube, n, m);
                const QuotientDegree& qd = quot[d - p];
                for (size_t b = 0; b < qd.basis.size(); ++b) {
                    TorusWeight w = wm;
                    for (int i = 0; i < n + m; ++i) w[i] += qd.basis_weight[b][i];
                    auto& layers = chains[w];
                    if (layers.empty()) layers.resize(p_top + 1);
                    auto& layer = layers[p];
                    int idx = static_cast<int>(layer.size());
                    layer[{mask, static_cast<int>(b)}] = idx;
                }
            }
        }
        for (auto& [w, layers] : chains) {
            if (layers.empty()) layers.resize(p_top + 1);
            // differentials d_p : C_p -> C_{p-1} for p = 1..p_top
            std::vector<QMat> diff(p_top + 2);
            for (int p = 1; p <= p_top; ++p) {
                const auto& src = layers[p];
                const auto& dst = layers[p - 1];
                charge(static_cast<long>(src.size()) * static_cast<long>(dst.size()));
                QMat mtx(static_cast<int>(dst.size()), static_cast<int>(src.size()));
                for (const auto& [key, col] : src) {
                    auto [mask, b] = key;
                    const Expo& mon = quot[d - p].basis[b];
                    int sign = 1;
                    for (int v = 0; v < nv; ++v) {
                        if (!(mask & (1u << v))) continue;
                        Expo prod = mon;
                        prod[v] += 1;
                        unsigned rmask = mask & ~(1u << v);
                        const QuotientDegree& qd1 = quot[d - p + 1];
                        auto emit = [&](int bi, const Rat& c) {
                            auto it = dst.find({rmask, bi});
                            if (it == dst.end())
                                throw std::logic_error("tor_dims: weight bookkeeping error");
                            mtx.at(it->second, col) += Rat(sign) * c;
                        };
                        auto bit = qd1.basis_index.find(prod);
                        if (bit != qd1.basis_index.end()) {
                            emit(bit->second, Rat(1));
                        } else {
                            for (const auto& [bi, c] : qd1.pivot_nf.at(prod)) emit(bi, c);
                        }
                        sign = -sign;
                    }
                }
                diff[p] = std::move(mtx);
            }
            // d^2 = 0
            for (int p = 2; p <= p_top; ++p)
                if (diff[p - 1].cols() > 0 && diff[p].cols() > 0 &&
                    !(diff[p - 1] * diff[p]).is_zero())
                    throw std::logic_error("tor_dims: d^2 != 0");
            std::vector<long> rank(p_top + 2, 0);
            for (int p = 1; p <= p_top; ++p) rank[p] = diff[p].rank();
            // d_{p_top+1} is genuinely zero here: either C_{p_top+1} lives in a
            // negative quotient degree or it exceeds the exterior power.
            for (int p = 0; p <= std::min(job.p_max, p_top); ++p) {
                long h = static_cast<long>(layers[p].size()) - rank[p] - rank[p + 1];
                if (h != 0) {
                    out.dims[{p, d}] += h;
                    if (job.with_characters) out.characters[{p, d}][w] += h;
                }
            }
        }
    }
    return out;
}

CompareReport compare_with_lascoux(const DetVarSpec& spec, int d_max, bool with_characters) {
    BettiTable table = betti_table(spec);
    OracleJob job{spec, d_max, d_max, with_characters};
    TorDims oracle = tor_dims(job);
    CompareReport rep;
    for (int d = 0; d <= d_max; ++d)
        for (int p = 0; p <= d; ++p) {
            ++rep.bidegrees_checked;
            Int ld = table.dim_at(p, d);
            Int od = oracle.at(p, d);
            if (ld != od) rep.mismatches.push_back({p, d, ld, od, "dimension"});
        }
    if (with_characters) {
        const auto& [n, m, t] = spec;
        for (int d = 0; d <= d_max; ++d)
            for (int p = 0; p <= d; ++p) {
                std::map<TorusWeight, Int> expected;
                for (const auto& e : table.entries) {
                    if (e.p != p || e.d != d) continue;
                    auto wps = ssyt_weights(e.rep.P, n);
                    auto wqs = ssyt_weights(e.rep.Q, m);
                    for (const auto& wp : wps)
                        for (const auto& wq : wqs) {
                            TorusWeight w = wp;
                            w.insert(w.end(), wq.begin(), wq.end());
                            expected[w] += 1;
                        }
                }
                auto it = oracle.characters.find({p, d});
                std::map<TorusWeight, Int> got =
                    it == oracle.characters.end() ? std::map<TorusWeight, Int>{} : it->second;
                if (expected != got)
                    rep.mismatches.push_back(
                        {p, d, table.dim_at(p, d), oracle.at(p, d), "character"});
            }
    }
    return rep;
}

} // namespace sgr
