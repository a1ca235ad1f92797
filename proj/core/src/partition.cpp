#include "supergrass/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("not a partition");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Int GradedDims::total() const {
    Int t = 0;
    for (const auto& [d, v] : dims) t += v;
    return t;
}

Int GradedDims::at(int d) const {
    auto it = dims.find(d);
    return it == dims.end() ? Int(0) : it->second;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c;
    for (int j = 0; j < p.part(0); ++j) {
        int cnt = 0;
        for (int x : p.parts())
            if (x > j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

Int dim_schur(const Partition& p, int n) {
    if (p.length() > n) return 0;
    Int num = 1, den = 1;
    Partition pc = conjugate(p);
    for (int i = 0; i < p.length(); ++i) {
        for (int j = 0; j < p.parts()[i]; ++j) {
            num *= n + j - i;                                  // content
            den *= p.parts()[i] - j + pc.parts()[j] - i - 1;   // hook
        }
    }
    Rat q(num, den);
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("hook content not integral");
    return q.get_num();
}

GradedDims gaussian_poincare(int s, int N) {
    if (s < 0 || N < 0 || s > N) throw std::invalid_argument("require 0 <= s <= N");
    int rows = s, cols = N - s;
    int top = rows * cols;
    // f[j][k] = #partitions of k into exactly j parts, parts <= current size cap
    std::vector<std::vector<Int>> f(rows + 1, std::vector<Int>(top + 1, 0));
    f[0][0] = 1;
    for (int part = 1; part <= cols; ++part) {
        auto g = f;
        for (int j = 0; j <= rows; ++j)
            for (int k = 0; k <= top; ++k) {
                if (f[j][k] == 0) continue;
                for (int c = 1; j + c <= rows && k + c * part <= top; ++c)
                    g[j + c][k + c * part] += f[j][k];
            }
        f = std::move(g);
    }
    GradedDims out;
    for (int k = 0; k <= top; ++k) {
        Int tot = 0;
        for (int j = 0; j <= rows; ++j) tot += f[j][k];
        if (tot != 0) out.dims[2 * k] = tot;
    }
    return out;
}

std::vector<Partition> partitions_of(int k, int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(rec, k, max_part);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int k = 0; k <= rows * cols; ++k) {
        auto ps = partitions_of(k, rows, cols);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

namespace {

// Cells of lambda/p in reverse reading order (top to bottom, right to left
// within a row), so the lattice condition can be checked incrementally.
struct LrCounter {
    const Partition& lam;
    const Partition& p;
    const Partition& q;
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> fill;   // fill[r][c], 0 = empty
    std::vector<int> counts;
    Int total = 0;

    LrCounter(const Partition& lam_, const Partition& p_, const Partition& q_)
        : lam(lam_), p(p_), q(q_) {
        fill.resize(lam.length());
        for (int r = 0; r < lam.length(); ++r) {
            fill[r].assign(lam.parts()[r], 0);
            for (int c = lam.parts()[r] - 1; c >= p.part(r); --c)
                cells.emplace_back(r, c);
        }
        counts.assign(q.length() + 1, 0);
    }

    void run(size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= q.length(); ++v) {
            if (counts[v] >= q.parts()[v - 1]) continue;
            if (v >= 2 && counts[v] >= counts[v - 1]) continue;  // lattice word
            // weakly increasing along rows
            if (c + 1 < lam.parts()[r] && fill[r][c + 1] != 0 && v > fill[r][c + 1])
                continue;
            // strictly increasing down columns
            if (r > 0 && c < lam.parts()[r - 1] && c >= p.part(r - 1) &&
                v <= fill[r - 1][c])
                continue;
            fill[r][c] = v;
            ++counts[v];
            run(idx + 1);
            --counts[v];
            fill[r][c] = 0;
        }
    }
};

Int lr_coefficient(const Partition& lam, const Partition& p, const Partition& q) {
    // lambda must contain p
    for (int i = 0; i < p.length(); ++i)
        if (lam.part(i) < p.parts()[i]) return 0;
    LrCounter ctr(lam, p, q);
    ctr.run(0);
    return ctr.total;
}

std::map<Partition, Int> lr_expand_impl(const Partition& p, const Partition& q,
                                        int rows, int cols) {
    std::map<Partition, Int> out;
    int tot = p.size() + q.size();
    auto lams = partitions_of(tot, rows, cols);
    for (const auto& lam : lams) {
        Int c = lr_coefficient(lam, p, q);
        if (c != 0) out[lam] = c;
    }
    return out;
}

} // namespace

std::map<Partition, Int> lr_expand_in_box(const Partition& p, const Partition& q,
                                          const BoxBound& box) {
    if (!box.fits(p) || !box.fits(q))
        throw std::invalid_argument("lr_expand_in_box: input outside box");
    return lr_expand_impl(p, q, box.rows, box.cols);
}

std::map<Partition, Int> lr_expand(const Partition& p, const Partition& q) {
    int tot = p.size() + q.size();
    return lr_expand_impl(p, q, tot, tot);
}

namespace {

void ssyt_rec(const Partition& p, int n, std::vector<std::vector<int>>& tab,
              int r, int c, const std::function<void()>& emit) {
    if (r == p.length()) {
        emit();
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= p.parts()[r]) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0 && c < p.parts()[r - 1]) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
        tab[r][c] = v;
        ssyt_rec(p, n, tab, nr, nc, emit);
    }
}

} // namespace

Int count_ssyt(const Partition& p, int n) {
    if (p.empty()) return 1;
    if (p.length() > n) return 0;
    std::vector<std::vector<int>> tab(p.length());
    for (int r = 0; r < p.length(); ++r) tab[r].assign(p.parts()[r], 0);
    Int total = 0;
    ssyt_rec(p, n, tab, 0, 0, [&] { ++total; });
    return total;
}

std::vector<std::vector<int>> ssyt_weights(const Partition& p, int n) {
    std::vector<std::vector<int>> out;
    if (p.length() > n) return out;
    if (p.empty()) { out.push_back(std::vector<int>(n, 0)); return out; }
    std::vector<std::vector<int>> tab(p.length());
    for (int r = 0; r < p.length(); ++r) tab[r].assign(p.parts()[r], 0);
    ssyt_rec(p, n, tab, 0, 0, [&] {
        std::vector<int> w(n, 0);
        for (const auto& row : tab)
            for (int v : row) ++w[v - 1];
        out.push_back(std::move(w));
    });
    return out;
}

} // namespace sgr
