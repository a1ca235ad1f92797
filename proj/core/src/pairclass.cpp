#include "supergrass/pairclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgr {

int IndecompTag::dim_v0() const {
    switch (type) {
        case Type::A: return at_infinity ? k : k * qp_degree(poly);
        case Type::B: return k + 1;
        case Type::Bshift: return k;
    }
    return 0;
}

int IndecompTag::dim_v1() const {
    switch (type) {
        case Type::A: return at_infinity ? k : k * qp_degree(poly);
        case Type::B: return k;
        case Type::Bshift: return k + 1;
    }
    return 0;
}

std::strong_ordering IndecompTag::operator<=>(const IndecompTag& o) const {
    if (auto c = static_cast<int>(type) <=> static_cast<int>(o.type); c != 0) return c;
    if (auto c = k <=> o.k; c != 0) return c;
    if (auto c = (at_infinity ? 1 : 0) <=> (o.at_infinity ? 1 : 0); c != 0) return c;
    if (auto c = poly.size() <=> o.poly.size(); c != 0) return c;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] < o.poly[i]) return std::strong_ordering::less;
        if (o.poly[i] < poly[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

void IndecompMultiset::add(IndecompTag tag, int count) {
    for (int i = 0; i < count; ++i) tags.push_back(tag);
}

void IndecompMultiset::normalize() { std::sort(tags.begin(), tags.end()); }

int IndecompMultiset::dim_v0() const {
    int d = 0;
    for (const auto& t : tags) d += t.dim_v0();
    return d;
}

int IndecompMultiset::dim_v1() const {
    int d = 0;
    for (const auto& t : tags) d += t.dim_v1();
    return d;
}

namespace {

QMat companion(const QPoly& p) {
    int d = qp_degree(p);
    QMat c(d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -p[i];
    return c;
}

QPoly qp_pow(const QPoly& p, int k) {
    QPoly acc{Rat(1)};
    for (int i = 0; i < k; ++i) acc = qp_mul(acc, p);
    return acc;
}

// One indecomposable as a concrete pair.
MatrixPair block_for(const IndecompTag& t) {
    MatrixPair b;
    switch (t.type) {
        case IndecompTag::Type::A: {
            if (t.at_infinity) {
                b.f = QMat(t.k, t.k);
                for (int i = 0; i + 1 < t.k; ++i) b.f.at(i, i + 1) = 1;
                b.g = QMat::identity(t.k);
            } else {
                int d = t.k * qp_degree(t.poly);
                b.f = QMat::identity(d);
                b.g = companion(qp_pow(t.poly, t.k));
            }
            break;
        }
        case IndecompTag::Type::B: {
            b.f = QMat(t.k, t.k + 1);
            for (int i = 0; i < t.k; ++i) b.f.at(i, i) = 1;
            b.g = QMat(t.k + 1, t.k);
            for (int i = 0; i < t.k; ++i) b.g.at(i + 1, i) = 1;
            break;
        }
        case IndecompTag::Type::Bshift: {
            b.f = QMat(t.k + 1, t.k);
            for (int i = 0; i < t.k; ++i) b.f.at(i + 1, i) = 1;
            b.g = QMat(t.k, t.k + 1);
            for (int i = 0; i < t.k; ++i) b.g.at(i, i) = 1;
            break;
        }
    }
    return b;
}

QMat direct_sum(const QMat& a, const QMat& b) {
    QMat out(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

QMat eval_matrix_poly(const QPoly& p, const QMat& t) {
    QMat acc(t.rows(), t.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * t;
        for (int i = 0; i < t.rows(); ++i) acc.at(i, i) += *it;
    }
    return acc;
}

} // namespace

MatrixPair synthesize(const IndecompMultiset& ms) {
    MatrixPair out{QMat(0, 0), QMat(0, 0)};
    for (const auto& t : ms.tags) {
        MatrixPair b = block_for(t);
        out.f = direct_sum(out.f, b.f);
        out.g = direct_sum(out.g, b.g);
    }
    return out;
}

std::vector<Int> word_ranks(const MatrixPair& pair, int max_len) {
    std::vector<Int> out;
    QMat wf = pair.f, wg = pair.g;
    for (int len = 1; len <= max_len; ++len) {
        out.push_back(wf.rank());
        out.push_back(wg.rank());
        // extend on the left with the alternating letter
        wf = (len % 2 == 1 ? pair.g : pair.f) * wf;
        wg = (len % 2 == 1 ? pair.f : pair.g) * wg;
    }
    return out;
}

namespace {

// A(k, pi) multiplicities from nullity jumps of pi(T)^k; T invertible.
void classify_invertible(const QMat& t, IndecompMultiset& out) {
    if (t.rows() == 0) return;
    QPoly chi;
    for (const auto& c : t.charpoly()) chi.push_back(c);
    for (const auto& [pi, mult] : qp_factor(chi)) {
        int dpi = qp_degree(pi);
        QMat base = eval_matrix_poly(pi, t);
        std::vector<long> nu{0};
        QMat power = QMat::identity(t.rows());
        while (true) {
            power = power * base;
            nu.push_back(power.nullity());
            size_t s = nu.size();
            if (s >= 2 && nu[s - 1] == nu[s - 2]) break;
        }
        nu.push_back(nu.back());
        for (size_t k = 1; k + 1 < nu.size(); ++k) {
            long m = (2 * nu[k] - nu[k - 1] - nu[k + 1]) / dpi;
            if (m > 0)
                out.add({IndecompTag::Type::A, static_cast<int>(k), pi, false}, static_cast<int>(m));
        }
    }
}

void classify_nilpotent(const MatrixPair& pair, IndecompMultiset& out) {
    int n0 = pair.dim_v0(), m0 = pair.dim_v1();
    if (n0 == 0 && m0 == 0) return;
    std::vector<IndecompTag> cands;
    QPoly u{Rat(0), Rat(1)};
    for (int k = 1; k <= std::min(n0, m0); ++k) {
        cands.push_back({IndecompTag::Type::A, k, u, false});
        cands.push_back({IndecompTag::Type::A, k, {}, true});
    }
    for (int k = 0; k <= std::min(n0 - 1, m0); ++k)
        cands.push_back({IndecompTag::Type::B, k, {}, false});
    for (int k = 0; k <= std::min(n0, m0 - 1); ++k)
        cands.push_back({IndecompTag::Type::Bshift, k, {}, false});
    int max_len = n0 + m0 + 1;
    std::vector<Int> rhs{Int(n0), Int(m0)};
    for (const auto& r : word_ranks(pair, max_len)) rhs.push_back(r);
    QMat m(static_cast<int>(rhs.size()), static_cast<int>(cands.size()));
    QMat b(static_cast<int>(rhs.size()), 1);
    for (size_t i = 0; i < rhs.size(); ++i) b.at(static_cast<int>(i), 0) = Rat(rhs[i]);
    for (size_t j = 0; j < cands.size(); ++j) {
        MatrixPair blk = block_for(cands[j]);
        m.at(0, static_cast<int>(j)) = cands[j].dim_v0();
        m.at(1, static_cast<int>(j)) = cands[j].dim_v1();
        auto wr = word_ranks(blk, max_len);
        for (size_t i = 0; i < wr.size(); ++i)
            m.at(static_cast<int>(i) + 2, static_cast<int>(j)) = Rat(wr[i]);
    }
    QMat x = m.solve(b);
    for (size_t j = 0; j < cands.size(); ++j) {
        Rat v = x.at(static_cast<int>(j), 0);
        if (v.get_den() != 1 || v < 0)
            throw std::logic_error("classify: non-integral nilpotent multiplicity");
        long cnt = v.get_num().get_si();
        if (cnt > 0) out.add(cands[j], static_cast<int>(cnt));
    }
}

} // namespace

IndecompMultiset classify(const MatrixPair& pair) {
    int n = pair.dim_v0(), m = pair.dim_v1();
    if (pair.g.rows() != n || pair.g.cols() != m)
        throw std::invalid_argument("classify: incompatible shapes");
    int bign = n + m + 1;
    QMat h0 = pair.g * pair.f;   // on V0
    QMat h1 = pair.f * pair.g;   // on V1
    QMat h0n = h0.pow(bign), h1n = h1.pow(bign);
    QMat u0 = h0n.column_space_basis(), k0 = h0n.kernel_basis();
    QMat u1 = h1n.column_space_basis(), k1 = h1n.kernel_basis();

    IndecompMultiset out;
    // invertible part: gf restricted to its stable image
    if (u0.cols() > 0) classify_invertible(u0.solve(h0 * u0), out);
    // nilpotent part: f, g restricted to the stable kernels
    MatrixPair nil;
    nil.f = k1.cols() > 0 ? k1.solve(pair.f * k0) : QMat(0, k0.cols());
    nil.g = k0.cols() > 0 ? k0.solve(pair.g * k1) : QMat(0, k1.cols());
    classify_nilpotent(nil, out);
    out.normalize();
    return out;
}

QPoly reduced_charpoly(const MatrixPair& pair, int delta) {
    QMat h = pair.f * pair.g;
    std::vector<Rat> chi = h.charpoly();
    for (int i = 0; i < delta; ++i) {
        if (i >= static_cast<int>(chi.size()) || chi[i] != 0)
            throw std::invalid_argument("reduced_charpoly: u^delta does not divide chi");
    }
    QPoly out(chi.begin() + delta, chi.end());
    return out;
}

MatrixPair conjugate(const MatrixPair& pair, const QMat& P, const QMat& Q) {
    MatrixPair out;
    out.f = Q * pair.f * P.inverse();
    out.g = P * pair.g * Q.inverse();
    return out;
}

} // namespace sgr
