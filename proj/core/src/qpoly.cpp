#include "supergrass/qpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sgr {

int qp_degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    qp_trim(out);
    return out;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    qp_trim(out);
    return out;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    qp_trim(out);
    return out;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::invalid_argument("qp_divmod: division by zero");
    QPoly rem = a, quot;
    int db = qp_degree(b);
    if (qp_degree(a) >= db) quot.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (qp_degree(rem) >= db) {
        int k = qp_degree(rem) - db;
        Rat c = rem.back() / lead;
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
        qp_trim(rem);
    }
    return {std::move(quot), std::move(rem)};
}

bool qp_divides(const QPoly& d, const QPoly& f) {
    if (f.empty()) return true;
    if (d.empty()) return false;
    return qp_divmod(f, d).second.empty();
}

QPoly qp_derivative(const QPoly& f) {
    QPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * Rat(static_cast<long>(i)));
    qp_trim(out);
    return out;
}

QPoly qp_monic(const QPoly& f) {
    if (f.empty()) return f;
    QPoly out = f;
    Rat inv = 1 / f.back();
    for (auto& c : out) c *= inv;
    return out;
}

QPoly qp_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.empty()) {
        QPoly r = qp_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return qp_monic(x);
}

Rat qp_eval(const QPoly& f, const Rat& x) {
    Rat acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly qp_reverse(const QPoly& f) {
    if (f.empty() || f.front() == 0)
        throw std::invalid_argument("qp_reverse: constant term must be nonzero");
    QPoly out(f.rbegin(), f.rend());
    return out;
}

std::string qp_str(const QPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = qp_degree(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i].get_str();
        if (i > 0) {
            if (f[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Factorization over Q: primitive integer form, squarefree split, then
// Berlekamp mod a small prime + linear Hensel lifting + subset recombination.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Int>;  // ascending

int z_degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division test for monic-over-Z trial divisors.
bool z_monic_divides(const ZPoly& d, const ZPoly& f) {
    ZPoly rem = f;
    int dd = z_degree(d);
    while (z_degree(rem) >= dd) {
        Int c = rem.back();
        int k = z_degree(rem) - dd;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= c * d[j];
        z_trim(rem);
    }
    return rem.empty();
}

// Clear denominators of a monic QPoly f via x -> x/c to get a monic ZPoly:
// returns (F, c) with F(x) = c^n f(x/c) monic over Z.
std::pair<ZPoly, Int> monic_to_integer(const QPoly& f) {
    int n = qp_degree(f);
    Int c = 1;
    for (const auto& q : f) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den().get_mpz_t());
    ZPoly F(n + 1);
    Int pw = 1;  // c^{n-i}
    for (int i = n; i >= 0; --i) {
        Rat scaled = f[i] * Rat(pw);
        if (scaled.get_den() != 1) throw std::logic_error("monic_to_integer: scaling failed");
        F[i] = scaled.get_num();
        if (i > 0) pw *= c;
    }
    return {F, c};
}

// --- arithmetic mod a small prime -----------------------------------------

using PPoly = std::vector<long>;  // ascending, entries in [0, p)

long p_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % p) + p) % p;
}

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_mul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(out);
    return out;
}

PPoly pp_mod(PPoly a, const PPoly& m, long p) {
    int dm = static_cast<int>(m.size()) - 1;
    long linv = p_inv(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        long c = a.back() * linv % p;
        int k = static_cast<int>(a.size()) - 1 - dm;
        for (int j = 0; j <= dm; ++j) a[k + j] = ((a[k + j] - c * m[j]) % p + p) % p;
        pp_trim(a);
    }
    return a;
}

std::pair<PPoly, PPoly> pp_divmod(const PPoly& a, const PPoly& b, long p) {
    PPoly rem = a, quot;
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) > static_cast<int>(b.size()) - 1)
        quot.assign(a.size() - b.size() + 1, 0);
    long linv = p_inv(b.back(), p);
    while (static_cast<int>(rem.size()) - 1 >= db) {
        long c = rem.back() * linv % p;
        int k = static_cast<int>(rem.size()) - 1 - db;
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] = ((rem[k + j] - c * b[j]) % p + p) % p;
        pp_trim(rem);
    }
    pp_trim(quot);
    return {std::move(quot), std::move(rem)};
}

PPoly pp_gcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = pp_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = p_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PPoly pp_derivative(const PPoly& f, long p) {
    PPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(static_cast<long>(i % p) * f[i] % p);
    pp_trim(out);
    return out;
}

PPoly pp_sub_const(PPoly f, long c, long p) {
    if (f.empty()) {
        if (c % p) f.push_back((p - c % p) % p);
        return f;
    }
    f[0] = ((f[0] - c) % p + p) % p;
    pp_trim(f);
    return f;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<PPoly> berlekamp(const PPoly& f, long p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // rows of Q: x^{ip} mod f
    std::vector<PPoly> rows(n);
    PPoly xp{0, 1};  // will become x^p mod f
    {
        // x^p mod f by square-and-multiply on exponents
        PPoly acc{1};
        PPoly base{0, 1};
        long e = p;
        while (e) {
            if (e & 1) acc = pp_mod(pp_mul(acc, base, p), f, p);
            base = pp_mod(pp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
    }
    PPoly cur{1};
    for (int i = 0; i < n; ++i) {
        rows[i] = cur;
        cur = pp_mod(pp_mul(cur, xp, p), f, p);
    }
    // kernel of (Q - I): vectors v with v(x)^p = v(x) mod f
    std::vector<std::vector<long>> mat(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) mat[i][j] = rows[i][j];
        mat[i][i] = ((mat[i][i] - 1) % p + p) % p;
    }
    // row-reduce the transpose: kernel of v -> v * (Q - I)
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = mat[j][i];
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        long inv = p_inv(m[row][col], p);
        for (int j = 0; j < n; ++j) m[row][j] = m[row][j] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == row || !m[i][col]) continue;
            long fct = m[i][col];
            for (int j = 0; j < n; ++j)
                m[i][j] = ((m[i][j] - fct * m[row][j]) % p + p) % p;
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<PPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        PPoly v(n, 0);
        v[col] = 1;
        for (int c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - m[pivot_of_col[c2]][col]) % p;
        pp_trim(v);
        basis.push_back(std::move(v));
    }
    size_t r = basis.size();  // number of irreducible factors
    std::vector<PPoly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() >= r) break;
        if (static_cast<int>(v.size()) <= 1) continue;  // constant vector
        std::vector<PPoly> next;
        for (auto& u : factors) {
            if (static_cast<int>(u.size()) <= 2) {
                next.push_back(std::move(u));
                continue;
            }
            PPoly restu = u;
            for (long c = 0; c < p && static_cast<int>(restu.size()) > 2; ++c) {
                PPoly g = pp_gcd(restu, pp_sub_const(v, c, p), p);
                if (g.size() > 1 && g.size() < restu.size()) {
                    next.push_back(g);
                    restu = pp_divmod(restu, g, p).first;
                }
            }
            next.push_back(std::move(restu));
        }
        factors = std::move(next);
    }
    return factors;
}

Int z_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int z_smod(const Int& a, const Int& m) {  // symmetric representative
    Int r = z_mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

// Linear multifactor Hensel lifting of a monic squarefree factorization
// F = prod factors (mod p) up to modulus >= target.
std::vector<ZPoly> hensel_lift(const ZPoly& F, std::vector<PPoly> pfactors, long p,
                               const Int& target) {
    size_t r = pfactors.size();
    // Bezout data mod p: s_i * prod_{j != i} g_j = 1 mod (g_i, p)
    std::vector<PPoly> svec(r);
    for (size_t i = 0; i < r; ++i) {
        PPoly prod{1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = pp_mod(pp_mul(prod, pfactors[j], p), pfactors[i], p);
        // invert prod mod g_i via extended Euclid in F_p[x]
        PPoly a = pfactors[i], b = prod;
        PPoly t0, t1{1};
        while (!b.empty()) {
            auto [q, rr] = pp_divmod(a, b, p);
            // t_new = t0 - q * t1
            PPoly qt = pp_mul(q, t1, p);
            PPoly tn(std::max(t0.size(), qt.size()), 0);
            for (size_t k = 0; k < t0.size(); ++k) tn[k] = t0[k];
            for (size_t k = 0; k < qt.size(); ++k) tn[k] = ((tn[k] - qt[k]) % p + p) % p;
            pp_trim(tn);
            t0 = std::move(t1);
            t1 = std::move(tn);
            a = std::move(b);
            b = std::move(rr);
        }
        if (a.size() != 1) throw std::logic_error("hensel: factors not coprime mod p");
        long inv = p_inv(a[0], p);
        for (auto& c : t0) c = c * inv % p;
        svec[i] = pp_mod(t0, pfactors[i], p);
    }
    // integer lifts with symmetric coefficients
    std::vector<ZPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i].assign(pfactors[i].size(), Int(0));
        for (size_t k = 0; k < pfactors[i].size(); ++k) lifted[i][k] = pfactors[i][k];
    }
    Int modulus = p;
    while (modulus < target) {
        // error e = (F - prod lifted) / modulus  (mod p)
        ZPoly prod{Int(1)};
        for (const auto& g : lifted) prod = z_mul(prod, g);
        ZPoly err(F.size(), Int(0));
        for (size_t k = 0; k < F.size(); ++k) {
            Int d = F[k] - (k < prod.size() ? prod[k] : Int(0));
            if (d % modulus != 0) throw std::logic_error("hensel: drift");
            err[k] = z_mod(d / modulus, Int(p));
        }
        for (size_t i = 0; i < r; ++i) {
            // delta_i = s_i * e mod (g_i, p)
            PPoly e;
            e.reserve(err.size());
            for (const auto& c : err) e.push_back(c.get_si());
            pp_trim(e);
            PPoly gi;
            for (const auto& c : pfactors[i]) gi.push_back(c);
            PPoly delta = pp_mod(pp_mul(svec[i], e, p), gi, p);
            for (size_t k = 0; k < delta.size(); ++k) lifted[i][k] += modulus * delta[k];
        }
        modulus *= p;
        // keep symmetric representatives to bound growth
        for (auto& g : lifted)
            for (size_t k = 0; k + 1 < g.size(); ++k) g[k] = z_smod(g[k], modulus);
    }
    return lifted;
}

// Factor a monic squarefree ZPoly into monic irreducible ZPolys.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& F) {
    int n = z_degree(F);
    if (n <= 1) return {F};
    static const long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    long p = 0;
    PPoly fp;
    for (long q : primes) {
        PPoly cand;
        for (const auto& c : F) cand.push_back(z_mod(c, Int(q)).get_si());
        pp_trim(cand);
        if (static_cast<int>(cand.size()) - 1 != n) continue;  // lc vanished (can't: monic)
        if (pp_gcd(cand, pp_derivative(cand, q), q).size() == 1) {
            p = q;
            fp = std::move(cand);
            break;
        }
    }
    if (p == 0) throw std::runtime_error("factor: no suitable prime found");
    std::vector<PPoly> pfactors = berlekamp(fp, p);
    if (pfactors.size() == 1) return {F};
    // coefficient bound for monic factors (Mignotte-style, generous)
    Int norm = 0;
    for (const auto& c : F) norm += abs(c);
    Int target = (Int(1) << (n + 1)) * (norm + 1) * 2;
    std::vector<ZPoly> lifted = hensel_lift(F, pfactors, p, target);
    Int modulus = p;
    while (modulus < target) modulus *= p;
    // subset recombination
    std::vector<ZPoly> result;
    ZPoly rest = F;
    std::vector<ZPoly> pool = lifted;
    size_t subset_size = 1;
    while (pool.size() > 0) {
        if (subset_size > pool.size() / 2) {
            result.push_back(rest);
            break;
        }
        bool found = false;
        // iterate subsets of the pool of the current size
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Int(1)};
            for (size_t i : idx) cand = z_mul(cand, pool[i]);
            for (auto& c : cand) c = z_smod(c, modulus);
            if (z_monic_divides(cand, rest)) {
                result.push_back(cand);
                // divide rest and shrink pool
                ZPoly q;
                {
                    ZPoly rem = rest;
                    int dd = z_degree(cand);
                    q.assign(rest.size() - cand.size() + 1, Int(0));
                    while (z_degree(rem) >= dd) {
                        Int c = rem.back();
                        int k = z_degree(rem) - dd;
                        q[k] = c;
                        for (int j = 0; j <= dd; ++j) rem[k + j] -= c * cand[j];
                        z_trim(rem);
                    }
                }
                rest = std::move(q);
                std::vector<ZPoly> np;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        np.push_back(std::move(pool[i]));
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - subset_size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    return result;
}

QPoly z_to_q(const ZPoly& F) {
    QPoly out;
    for (const auto& c : F) out.push_back(Rat(c));
    return out;
}

} // namespace

std::vector<QFactor> qp_squarefree_decomposition(const QPoly& f) {
    if (f.empty()) throw std::invalid_argument("squarefree: zero polynomial");
    QPoly g = qp_monic(f);
    std::vector<QFactor> out;
    if (qp_degree(g) == 0) return out;
    // Yun's algorithm
    QPoly d = qp_derivative(g);
    QPoly a = qp_gcd(g, d);
    QPoly b = qp_divmod(g, a).first;
    QPoly c = qp_sub(qp_divmod(d, a).first, qp_derivative(b));
    int i = 1;
    while (qp_degree(b) > 0) {
        QPoly pi = qp_gcd(b, c);
        if (qp_degree(pi) > 0) out.push_back({qp_monic(pi), i});
        b = qp_divmod(b, pi).first;
        c = qp_sub(qp_divmod(c, pi).first, qp_derivative(b));
        ++i;
    }
    return out;
}

std::vector<QFactor> qp_factor(const QPoly& f) {
    std::vector<QFactor> out;
    for (const auto& [sq, mult] : qp_squarefree_decomposition(f)) {
        auto [F, scale] = monic_to_integer(sq);
        for (const auto& zf : factor_monic_squarefree(F)) {
            // undo x -> x/scale: factor of sq is monic(zf(scale * x))... inverse
            // substitution: zf corresponds to factor h with h(x) = zf(c x)/c^deg
            QPoly h;
            Int pw = 1;
            int dh = z_degree(zf);
            for (int k = 0; k <= dh; ++k) {
                h.push_back(Rat(zf[k]) * Rat(pw));
                pw *= scale;
            }
            h = qp_monic(h);
            out.push_back({std::move(h), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const QFactor& x, const QFactor& y) {
        if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
        if (x.poly != y.poly) return x.poly < y.poly;
        return x.mult < y.mult;
    });
    return out;
}

bool qp_is_irreducible(const QPoly& f) {
    if (qp_degree(f) <= 0) return false;
    auto factors = qp_factor(f);
    return factors.size() == 1 && factors[0].mult == 1 &&
           qp_degree(factors[0].poly) == qp_degree(f);
}

} // namespace sgr
