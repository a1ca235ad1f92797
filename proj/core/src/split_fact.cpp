#include "supergrass/split_fact.hpp"

#include <algorithm>
#include <stdexcept>

#include "supergrass/linalg.hpp"

namespace sgr {

namespace {

// Synthetic division of a monic tower polynomial by (u - xi).
UniPoly tower_quotient(const UniPoly& fi, const MultiPoly& xi) {
    int d = fi.degree();
    UniPoly q;
    q.c.assign(d, MultiPoly::zero(xi.nvars));
    q.c[d - 1] = fi.c[d];  // monic lead carries straight down
    for (int j = d - 1; j >= 1; --j) q.c[j - 1] = fi.c[j] + xi * q.c[j];
    // remainder fi(xi) is the defining relation; dropped here
    return q;
}

MultiPoly eval_at(const UniPoly& f, const MultiPoly& x) {
    MultiPoly acc = MultiPoly::zero(x.nvars);
    for (int j = f.degree(); j >= 0; --j) acc = acc * x + f.c[j];
    return acc;
}

void finish_split_ring(SplitRing& ring) {
    ring.tower.clear();
    ring.xi_reductions.clear();
    UniPoly cur = ring.f;
    for (int i = 0; i < ring.n; ++i) {
        ring.tower.push_back(cur);
        MultiPoly xi = MultiPoly::var(ring.nvars(), ring.xi_index(i));
        // xi_i^{n-i+1} - f_i(xi_i): the rewrite target for xi_i^{n-i}
        MultiPoly lead = MultiPoly::var(ring.nvars(), ring.xi_index(i), cur.degree());
        ring.xi_reductions.push_back(lead - eval_at(cur, xi));
        if (i + 1 < ring.n) cur = tower_quotient(cur, xi);
    }
}

} // namespace

std::vector<int> SplitRing::weights() const {
    std::vector<int> w;
    if (universal)
        for (int i = 1; i <= n; ++i) w.push_back(i);
    for (int i = 0; i < n; ++i) w.push_back(1);
    return w;
}

std::vector<std::string> SplitRing::var_names() const {
    std::vector<std::string> names;
    if (universal)
        for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("xi" + std::to_string(i));
    return names;
}

std::vector<MultiPoly> SplitRing::defining_relations() const {
    // elementary symmetric polynomials via sequential expansion of prod (u + xi_i)
    int nv = nvars();
    std::vector<MultiPoly> e(n + 1, MultiPoly::zero(nv));
    e[0] = MultiPoly::constant(nv, 1);
    for (int i = 0; i < n; ++i) {
        MultiPoly xi = MultiPoly::var(nv, xi_index(i));
        for (int k = std::min(i + 1, n); k >= 1; --k) e[k] = e[k] + e[k - 1] * xi;
    }
    std::vector<MultiPoly> rels;
    for (int i = 1; i <= n; ++i) {
        Rat sign = (i % 2 == 0) ? 1 : -1;
        // a_i - (-1)^i e_i  ==  (-1)^i e_i - a_i up to sign; store e_i - (-1)^i a_i
        MultiPoly ai = universal ? MultiPoly::var(nv, i - 1)
                                 : MultiPoly::constant(nv, f.c[n - i].constant_value());
        rels.push_back(e[i] - ai * sign);
    }
    return rels;
}

SplitRing make_split_ring_universal(int n) {
    SplitRing ring;
    ring.n = n;
    ring.universal = true;
    int nv = 2 * n;
    ring.f.c.assign(n + 1, MultiPoly::zero(nv));
    ring.f.c[n] = MultiPoly::constant(nv, 1);
    for (int i = 1; i <= n; ++i) ring.f.c[n - i] = MultiPoly::var(nv, i - 1);
    finish_split_ring(ring);
    return ring;
}

SplitRing make_split_ring(const std::vector<Rat>& f_ascending) {
    int n = static_cast<int>(f_ascending.size()) - 1;
    if (n < 0 || f_ascending.back() != 1)
        throw std::invalid_argument("make_split_ring: f must be monic");
    SplitRing ring;
    ring.n = n;
    ring.universal = false;
    ring.f.c.reserve(n + 1);
    for (const auto& c : f_ascending) ring.f.c.push_back(MultiPoly::constant(n, c));
    finish_split_ring(ring);
    return ring;
}

MultiPoly split_normal_form(const SplitRing& ring, const MultiPoly& elem) {
    MultiPoly pending = elem;
    MultiPoly done = MultiPoly::zero(ring.nvars());
    // Each pass rewrites every off-staircase term at once; a term rewritten at
    // xi_i drops in xi_i-degree and only picks up earlier xi's, so the passes
    // terminate.
    while (!pending.terms.empty()) {
        MultiPoly next = MultiPoly::zero(ring.nvars());
        for (const auto& [e, coef] : pending.terms) {
            int hit = -1;  // reduce the latest xi first: its reduction only
            for (int i = ring.n - 1; i >= 0; --i)  // reintroduces earlier ones
                if (e[ring.xi_index(i)] >= ring.n - i) {
                    hit = i;
                    break;
                }
            if (hit < 0) {
                done.add_term(e, coef);
                continue;
            }
            // rewrite xi^deg -> xi^deg - f_i(xi), a polynomial of lower degree
            Expo rest = e;
            rest[ring.xi_index(hit)] -= ring.n - hit;
            MultiPoly restp = MultiPoly::zero(ring.nvars());
            restp.terms[rest] = coef;
            next = next + restp * ring.xi_reductions[hit];
        }
        pending = std::move(next);
    }
    return done;
}

std::vector<int> FactRing::weights() const {
    std::vector<int> w;
    if (universal)
        for (int i = 1; i <= n; ++i) w.push_back(i);
    for (int i = 1; i <= p; ++i) w.push_back(i);
    return w;
}

std::vector<std::string> FactRing::var_names() const {
    std::vector<std::string> names;
    if (universal)
        for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= p; ++i) names.push_back("b" + std::to_string(i));
    return names;
}

namespace {

FactRing fact_presentation_impl(const UniPoly& f, int n, int p, bool universal) {
    FactRing ring;
    ring.n = n;
    ring.p = p;
    ring.universal = universal;
    int nv = (universal ? n : 0) + p;
    UniPoly g;
    g.c.assign(p + 1, MultiPoly::zero(nv));
    g.c[p] = MultiPoly::constant(nv, 1);
    for (int i = 1; i <= p; ++i) g.c[p - i] = MultiPoly::var(nv, (universal ? n : 0) + i - 1);
    auto [h, r] = monic_divmod(f, g);
    ring.g = std::move(g);
    ring.h = std::move(h);
    ring.relations.reserve(p);
    for (int i = 0; i < p; ++i)
        ring.relations.push_back(i <= r.degree() ? r.c[i] : MultiPoly::zero(nv));
    return ring;
}

} // namespace

FactRing fact_presentation_universal(int n, int p) {
    if (p < 0 || p > n) throw std::invalid_argument("fact: need 0 <= p <= n");
    int nv = n + p;
    UniPoly f;
    f.c.assign(n + 1, MultiPoly::zero(nv));
    f.c[n] = MultiPoly::constant(nv, 1);
    for (int i = 1; i <= n; ++i) f.c[n - i] = MultiPoly::var(nv, i - 1);
    return fact_presentation_impl(f, n, p, true);
}

FactRing fact_presentation(const std::vector<Rat>& f_ascending, int p) {
    int n = static_cast<int>(f_ascending.size()) - 1;
    if (n < 0 || f_ascending.back() != 1)
        throw std::invalid_argument("fact_presentation: f must be monic");
    if (p < 0 || p > n) throw std::invalid_argument("fact: need 0 <= p <= n");
    UniPoly f;
    f.c.reserve(n + 1);
    for (const auto& c : f_ascending) f.c.push_back(MultiPoly::constant(p, c));
    return fact_presentation_impl(f, n, p, false);
}

namespace {

bool is_power_specialization(const std::vector<Rat>& f_ascending) {
    for (size_t i = 0; i + 1 < f_ascending.size(); ++i)
        if (f_ascending[i] != 0) return false;
    return true;
}

} // namespace

RankReport verify_free_rank_split(const std::vector<Rat>& f_ascending) {
    int n = static_cast<int>(f_ascending.size()) - 1;
    SplitRing ring = make_split_ring(f_ascending);
    auto rels = ring.defining_relations();
    RankReport rep;
    rep.expected = factorial(n);
    if (is_power_specialization(f_ascending)) {
        rep.computed = graded_quotient_dims(n, std::vector<int>(n, 1), rels,
                                            n * (n - 1) / 2).total();
    } else {
        int cap = n * (n - 1) / 2 + 2 * n + 2;
        auto dim = filtered_quotient_dim(n, rels, cap);
        rep.computed = dim ? *dim : Int(-1);
    }
    return rep;
}

RankReport verify_free_rank_fact(const std::vector<Rat>& f_ascending, int p) {
    int n = static_cast<int>(f_ascending.size()) - 1;
    FactRing ring = fact_presentation(f_ascending, p);
    RankReport rep;
    rep.expected = binomial(n, p);
    if (is_power_specialization(f_ascending)) {
        rep.computed = graded_quotient_dims(p, ring.weights(), ring.relations,
                                            p * (n - p)).total();
    } else {
        int cap = p * (n - p) + 2 * n + 2;
        auto dim = filtered_quotient_dim(p, ring.relations, cap);
        rep.computed = dim ? *dim : Int(-1);
    }
    return rep;
}

GradedQuotientReport split_graded_dims(int n) {
    std::vector<Rat> f(n + 1, Rat(0));
    f[n] = 1;
    SplitRing ring = make_split_ring(f);
    return graded_quotient_dims(n, std::vector<int>(n, 1), ring.defining_relations(),
                                n * (n - 1) / 2);
}

GradedQuotientReport fact_graded_dims(int n, int p) {
    std::vector<Rat> f(n + 1, Rat(0));
    f[n] = 1;
    FactRing ring = fact_presentation(f, p);
    return graded_quotient_dims(p, ring.weights(), ring.relations, p * (n - p));
}

SylvesterMatrix sylvester(const std::vector<MultiPoly>& a_desc,
                          const std::vector<MultiPoly>& b_desc, int n, int m) {
    if (static_cast<int>(a_desc.size()) != n + 1 || static_cast<int>(b_desc.size()) != m + 1)
        throw std::invalid_argument("sylvester: coefficient list sizes must be n+1, m+1");
    if (a_desc[0].is_zero()) throw std::invalid_argument("sylvester: a0 must be nonzero");
    int nv = a_desc[0].nvars;
    int size = n + m;
    SylvesterMatrix syl;
    syl.n = n;
    syl.m = m;
    syl.entries.assign(size_t(size) * size, MultiPoly::zero(nv));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            syl.entries[size_t(i) * size + i + j] = a_desc[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            syl.entries[size_t(m + i) * size + i + j] = b_desc[j];
    return syl;
}

namespace {

// Laplace expansion with memoization on the set of free columns.
MultiPoly det_memo(const SylvesterMatrix& syl, int row, unsigned mask,
                   std::map<unsigned, MultiPoly>& memo, int size, int nv) {
    if (row == size) return MultiPoly::constant(nv, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly acc = MultiPoly::zero(nv);
    int parity = 0;
    for (int col = 0; col < size; ++col) {
        if (!(mask & (1u << col))) continue;
        const MultiPoly& e = syl.at(row, col);
        if (!e.is_zero()) {
            MultiPoly sub = det_memo(syl, row + 1, mask & ~(1u << col), memo, size, nv);
            MultiPoly term = e * sub;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
        }
        ++parity;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

MultiPoly sylvester_det(const SylvesterMatrix& syl) {
    int size = syl.n + syl.m;
    if (size > 20) throw std::invalid_argument("sylvester_det: matrix too large");
    if (size == 0) return MultiPoly::constant(0, 1);
    int nv = syl.entries[0].nvars;
    std::map<unsigned, MultiPoly> memo;
    return det_memo(syl, 0, (1u << size) - 1, memo, size, nv);
}

long sylvester_nullity(const std::vector<Rat>& a_desc, const std::vector<Rat>& b_desc,
                       int n, int m) {
    if (a_desc.empty() || a_desc[0] == 0)
        throw std::invalid_argument("sylvester: a0 must be nonzero");
    int size = n + m;
    QMat mat(size, size);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat.at(i, i + j) = a_desc[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat.at(m + i, i + j) = b_desc[j];
    return mat.nullity();
}

MultiPoly discriminant(const UniPoly& f) {
    if (!f.monic()) throw std::invalid_argument("discriminant: f must be monic");
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree >= 1 required");
    int nv = f.c[0].nvars;
    std::vector<MultiPoly> a_desc, b_desc;
    for (int j = n; j >= 0; --j) a_desc.push_back(f.c[j]);
    for (int j = n; j >= 1; --j) b_desc.push_back(f.c[j] * Rat(j));
    if (n == 1) return MultiPoly::constant(nv, 1);
    MultiPoly det = sylvester_det(sylvester(a_desc, b_desc, n, n - 1));
    Rat sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    return det * sign;
}

Rat discriminant(const std::vector<Rat>& f_ascending) {
    UniPoly f;
    int nv = 0;
    for (const auto& c : f_ascending) f.c.push_back(MultiPoly::constant(nv, c));
    return discriminant(f).constant_value();
}

} // namespace sgr
