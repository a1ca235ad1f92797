#include "supergrass/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "supergrass/linalg.hpp"

namespace sgr {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p{nvars, {}};
    if (c != 0) p.terms[Expo(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i, int power) {
    MultiPoly p{nvars, {}};
    Expo e(nvars, 0);
    e[i] = power;
    p.terms[e] = 1;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Expo(nvars, 0);
}

Rat MultiPoly::constant_value() const {
    if (terms.empty()) return 0;
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms.begin()->second;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out = zero(nvars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            Expo e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out = zero(nvars);
    if (c == 0) return out;
    for (const auto& [e, v] : terms) out.terms[e] = v * c;
    return out;
}

MultiPoly MultiPoly::operator-() const { return *this * Rat(-1); }

int weighted_degree(const Expo& e, const std::vector<int>& weights) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    return d;
}

std::optional<int> MultiPoly::homogeneous_degree(const std::vector<int>& weights) const {
    if (terms.empty()) return 0;
    int d = weighted_degree(terms.begin()->first, weights);
    for (const auto& [e, c] : terms)
        if (weighted_degree(e, weights) != d) return std::nullopt;
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

bool UniPoly::monic() const {
    return !c.empty() && c.back().is_constant() && c.back().constant_value() == 1;
}

void UniPoly::trim() {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

std::pair<UniPoly, UniPoly> monic_divmod(const UniPoly& f, const UniPoly& g) {
    if (!g.monic()) throw std::invalid_argument("monic_divmod: divisor not monic");
    int nvars = g.c.front().nvars;
    int df = f.degree(), dg = g.degree();
    std::vector<MultiPoly> rem = f.c;
    std::vector<MultiPoly> quot(std::max(df - dg + 1, 1), MultiPoly::zero(nvars));
    for (int k = df - dg; k >= 0; --k) {
        MultiPoly coef = rem[k + dg];
        if (coef.is_zero()) continue;
        quot[k] = coef;
        for (int j = 0; j <= dg; ++j) rem[k + j] = rem[k + j] - coef * g.c[j];
    }
    UniPoly q{std::move(quot)}, r;
    r.c.assign(rem.begin(), rem.begin() + std::min<int>(dg, df + 1));
    if (r.c.empty()) r.c.push_back(MultiPoly::zero(nvars));
    q.trim();
    r.trim();
    return {std::move(q), std::move(r)};
}

std::vector<Expo> monomials_of_weighted_degree(int nvars, const std::vector<int>& weights,
                                               int d) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == nvars) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (weights[idx] == 0) throw std::invalid_argument("zero weight in graded enumeration");
        for (int e = 0; e * weights[idx] <= rem; ++e) {
            cur[idx] = e;
            self(self, idx + 1, rem - e * weights[idx]);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    return out;
}

Int GradedQuotientReport::total() const {
    Int t = 0;
    for (const auto& d : dims) t += d;
    return t;
}

GradedQuotientReport graded_quotient_dims(int nvars, const std::vector<int>& weights,
                                          const std::vector<MultiPoly>& relations,
                                          int up_to) {
    std::vector<int> rel_degs;
    for (const auto& r : relations) {
        auto d = r.homogeneous_degree(weights);
        if (!d) throw std::invalid_argument("graded_quotient_dims: inhomogeneous relation");
        rel_degs.push_back(*d);
    }
    GradedQuotientReport rep;
    for (int d = 0; d <= up_to; ++d) {
        auto mons = monomials_of_weighted_degree(nvars, weights, d);
        std::map<Expo, int> index;
        for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
        std::vector<SparseRow> rows;
        for (size_t ri = 0; ri < relations.size(); ++ri) {
            if (relations[ri].is_zero()) continue;
            int shift = d - rel_degs[ri];
            if (shift < 0) continue;
            for (const auto& m : monomials_of_weighted_degree(nvars, weights, shift)) {
                SparseRow row;
                for (const auto& [e, c] : relations[ri].terms) {
                    Expo prod(nvars);
                    for (int i = 0; i < nvars; ++i) prod[i] = e[i] + m[i];
                    row.emplace_back(index.at(prod), c);
                }
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
        }
        rep.dims.push_back(Int(static_cast<long>(mons.size())) - exact_rank(std::move(rows)));
    }
    return rep;
}

namespace {

std::vector<Expo> monomials_up_to_total_degree(int nvars, int d) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[idx] = e;
            self(self, idx + 1, rem - e);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    return out;
}

Int filtered_dim_at(int nvars, const std::vector<MultiPoly>& relations, int D) {
    auto mons = monomials_up_to_total_degree(nvars, D);
    std::map<Expo, int> index;
    for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
    std::vector<SparseRow> rows;
    for (const auto& rel : relations) {
        if (rel.is_zero()) continue;
        int rd = rel.total_degree();
        for (const auto& m : monomials_up_to_total_degree(nvars, D - rd)) {
            SparseRow row;
            for (const auto& [e, c] : rel.terms) {
                Expo prod(nvars);
                for (int i = 0; i < nvars; ++i) prod[i] = e[i] + m[i];
                row.emplace_back(index.at(prod), c);
            }
            std::sort(row.begin(), row.end());
            rows.push_back(std::move(row));
        }
    }
    return Int(static_cast<long>(mons.size())) - exact_rank(std::move(rows));
}

} // namespace

std::optional<Int> filtered_quotient_dim(int nvars,
                                         const std::vector<MultiPoly>& relations,
                                         int degree_cap) {
    Int prev = -1;
    int stable = 0;
    for (int D = 0; D <= degree_cap; ++D) {
        Int cur = filtered_dim_at(nvars, relations, D);
        if (cur == prev) {
            if (++stable >= 2) return cur;
        } else {
            stable = 0;
        }
        prev = cur;
    }
    return std::nullopt;
}

} // namespace sgr
