#include "supergrass/linalg.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>
#include <unordered_map>

namespace sgr {

namespace {

using IRow = std::vector<std::pair<int, Int>>;  // sorted by column

IRow clear_denominators(const SparseRow& row) {
    Int lcm = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) out.emplace_back(c, Int(v.get_num() * (lcm / v.get_den())));
    return out;
}

void reduce_content(IRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

const Int* row_coeff(const IRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

// dst = a*dst - b*src, dropping column `col`.
void combine(IRow& dst, const IRow& src, const Int& a, const Int& b, int col) {
    IRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        int ci = i < dst.size() ? dst[i].first : INT32_MAX;
        int cj = j < src.size() ? src[j].first : INT32_MAX;
        if (ci == col) { ++i; continue; }
        if (cj == col) { ++j; continue; }
        if (ci < cj) {
            out.emplace_back(ci, a * dst[i].second);
            ++i;
        } else if (cj < ci) {
            out.emplace_back(cj, -b * src[j].second);
            ++j;
        } else {
            Int v = a * dst[i].second - b * src[j].second;
            if (v != 0) out.emplace_back(ci, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

long exact_rank(std::vector<SparseRow> rows) {
    std::list<IRow> active;
    for (auto& r : rows) {
        if (r.empty()) continue;
        IRow ir = clear_denominators(r);
        reduce_content(ir);
        active.push_back(std::move(ir));
    }
    long rank = 0;
    while (!active.empty()) {
        // pivot row: fewest nonzeros
        auto pit = active.begin();
        for (auto it = active.begin(); it != active.end(); ++it)
            if (it->size() < pit->size()) pit = it;
        IRow pivot = std::move(*pit);
        active.erase(pit);
        ++rank;
        // pivot column: the one in `pivot` hit by the fewest other rows
        std::unordered_map<int, int> hits;
        for (const auto& [c, v] : pivot) hits[c] = 0;
        for (const auto& row : active)
            for (const auto& [c, v] : row) {
                auto it = hits.find(c);
                if (it != hits.end()) ++it->second;
            }
        int pcol = pivot.front().first;
        int best = INT32_MAX;
        for (const auto& [c, v] : pivot) {
            int h = hits[c];
            if (h < best || (h == best && c < pcol)) {
                best = h;
                pcol = c;
            }
        }
        const Int& pval = *row_coeff(pivot, pcol);
        for (auto it = active.begin(); it != active.end();) {
            const Int* v = row_coeff(*it, pcol);
            if (v) {
                combine(*it, pivot, pval, *v, pcol);
                reduce_content(*it);
                if (it->empty()) {
                    it = active.erase(it);
                    continue;
                }
            }
            ++it;
        }
    }
    return rank;
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

long modular_rank(const std::vector<SparseRow>& rows, std::uint64_t p) {
    std::vector<std::unordered_map<int, std::uint64_t>> mat;
    for (const auto& r : rows) {
        std::unordered_map<int, std::uint64_t> row;
        for (const auto& [c, v] : r) {
            Int num = v.get_num() % Int(static_cast<unsigned long>(p));
            Int den = v.get_den() % Int(static_cast<unsigned long>(p));
            std::uint64_t nu = (num.get_si() % (long)p + (long)p) % p;
            std::uint64_t de = (den.get_si() % (long)p + (long)p) % p;
            if (de == 0) throw std::runtime_error("modular_rank: denominator divisible by p");
            std::uint64_t val = (unsigned __int128)nu * mod_pow(de, p - 2, p) % p;
            if (val) row[c] = val;
        }
        if (!row.empty()) mat.push_back(std::move(row));
    }
    long rank = 0;
    while (!mat.empty()) {
        auto row = std::move(mat.back());
        mat.pop_back();
        if (row.empty()) continue;
        ++rank;
        int pcol = row.begin()->first;
        std::uint64_t inv = mod_pow(row.at(pcol), p - 2, p);
        for (auto& other : mat) {
            auto it = other.find(pcol);
            if (it == other.end()) continue;
            std::uint64_t f = (unsigned __int128)it->second * inv % p;
            other.erase(it);
            for (const auto& [c, v] : row) {
                if (c == pcol) continue;
                std::uint64_t sub = (unsigned __int128)f * v % p;
                auto jt = other.find(c);
                std::uint64_t nv = ((jt == other.end() ? 0 : jt->second) + p - sub) % p;
                if (nv)
                    other[c] = nv;
                else if (jt != other.end())
                    other.erase(jt);
            }
        }
    }
    return rank;
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("QMat: shape mismatch");
    QMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j)
                if (o.at(k, j) != 0) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

QMat QMat::operator+(const QMat& o) const {
    QMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

QMat QMat::operator-(const QMat& o) const {
    QMat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

bool QMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

QMat QMat::transpose() const {
    QMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMat QMat::pow(int k) const {
    QMat acc = identity(r_), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

namespace {

// Row echelon reduction in place. Returns pivot columns.
std::vector<int> row_echelon(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

long QMat::rank() const {
    QMat m = *this;
    return static_cast<long>(row_echelon(m).size());
}

std::vector<int> rref_in_place(QMat& m) { return row_echelon(m); }

QMat QMat::kernel_basis() const {
    QMat m = *this;
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    int free_count = c_ - static_cast<int>(pivots.size());
    QMat out(c_, free_count);
    int k = 0;
    for (int col = 0; col < c_; ++col) {
        if (is_pivot[col]) continue;
        out.at(col, k) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.at(pivots[pi], k) = -m.at(static_cast<int>(pi), col);
        ++k;
    }
    return out;
}

QMat QMat::column_space_basis() const {
    QMat m = *this;
    std::vector<int> pivots = row_echelon(m);
    QMat out(r_, static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < r_; ++i) out.at(i, static_cast<int>(k)) = at(i, pivots[k]);
    return out;
}

QMat QMat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("QMat::inverse: not square");
    if (r_ == 0) return QMat(0, 0);
    QMat aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = 1;
    }
    auto pivots = row_echelon(aug);
    if (static_cast<int>(pivots.size()) != r_ || pivots.back() >= c_)
        throw std::runtime_error("QMat::inverse: singular matrix");
    QMat out(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
}

QMat QMat::solve(const QMat& b) const {
    if (b.rows() != r_) throw std::invalid_argument("QMat::solve: shape mismatch");
    QMat aug(r_, c_ + b.cols());
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, c_ + j) = b.at(i, j);
    }
    auto pivots = row_echelon(aug);
    QMat x(c_, b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] >= c_) throw std::runtime_error("QMat::solve: inconsistent system");
        for (int j = 0; j < b.cols(); ++j)
            x.at(pivots[pi], j) = aug.at(static_cast<int>(pi), c_ + j);
    }
    if (static_cast<int>(pivots.size()) < c_) {
        // verify the solution is genuine despite free columns
        if (!((*this) * x == b)) throw std::runtime_error("QMat::solve: underdetermined");
    }
    return x;
}

std::vector<Rat> QMat::charpoly() const {
    if (r_ != c_) throw std::invalid_argument("QMat::charpoly: not square");
    // Faddeev-LeVerrier
    int n = r_;
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    QMat M = QMat(n, n);
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} * I
        QMat AM = (*this) * M;
        for (int i = 0; i < n; ++i) AM.at(i, i) += c[n - k + 1];
        M = std::move(AM);
        QMat AMk = (*this) * M;
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += AMk.at(i, i);
        c[n - k] = -tr / k;
    }
    return c;  // det(uI - A), ascending
}

} // namespace sgr
