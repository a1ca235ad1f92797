#include <doctest.h>

#include <random>

#include "supergrass/linalg.hpp"
#include "supergrass/multipoly.hpp"
#include "supergrass/qpoly.hpp"

using namespace sgr;

namespace {

MultiPoly rand_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
    MultiPoly out = MultiPoly::zero(nvars);
    for (int i = 0; i < terms; ++i) {
        Expo e(nvars);
        for (int v = 0; v < nvars; ++v) e[v] = deg(rng);
        out.add_term(e, coef(rng));
    }
    return out;
}

} // namespace

TEST_CASE("monic_divmod on the quadratic example") {
    // (u^2 + a1 u + a2) / (u + b1): quotient u + (a1 - b1), remainder a2 - b1(a1 - b1)
    int nv = 3;  // a1, a2, b1
    MultiPoly a1 = MultiPoly::var(nv, 0), a2 = MultiPoly::var(nv, 1), b1 = MultiPoly::var(nv, 2);
    UniPoly f{{a2, a1, MultiPoly::constant(nv, 1)}};
    UniPoly g{{b1, MultiPoly::constant(nv, 1)}};
    auto [q, r] = monic_divmod(f, g);
    CHECK(q.degree() == 1);
    CHECK(q.c[0] == a1 - b1);
    CHECK(r.degree() == 0);
    CHECK(r.c[0] == a2 - b1 * (a1 - b1));
}

TEST_CASE("monic_divmod round trips on random symbolic inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int nv = 1 + static_cast<int>(rng() % 4);
        int dg = 1 + static_cast<int>(rng() % 3);
        int df = dg + static_cast<int>(rng() % 3);
        UniPoly f, g;
        for (int i = 0; i < df; ++i) f.c.push_back(rand_poly(rng, nv, 2, 3));
        f.c.push_back(MultiPoly::constant(nv, 1));
        for (int i = 0; i < dg; ++i) g.c.push_back(rand_poly(rng, nv, 2, 3));
        g.c.push_back(MultiPoly::constant(nv, 1));
        auto [q, r] = monic_divmod(f, g);
        CHECK(r.degree() < g.degree());
        // rebuild g*q + r and compare coefficient-wise
        std::vector<MultiPoly> prod(f.c.size(), MultiPoly::zero(nv));
        for (int i = 0; i <= g.degree(); ++i)
            for (int j = 0; j <= q.degree(); ++j) prod[i + j] = prod[i + j] + g.c[i] * q.c[j];
        for (int i = 0; i <= r.degree(); ++i) prod[i] = prod[i] + r.c[i];
        for (size_t i = 0; i < f.c.size(); ++i) CHECK(prod[i] == f.c[i]);
    }
}

TEST_CASE("graded quotient dims of monomial complete intersections") {
    MultiPoly x2 = MultiPoly::var(1, 0, 2);
    auto rep1 = graded_quotient_dims(1, {1}, {x2}, 4);
    CHECK(rep1.dims == std::vector<Int>{1, 1, 0, 0, 0});

    MultiPoly x2b = MultiPoly::var(2, 0, 2), y2 = MultiPoly::var(2, 1, 2);
    auto rep2 = graded_quotient_dims(2, {1, 1}, {x2b, y2}, 5);
    CHECK(rep2.dims == std::vector<Int>{1, 2, 1, 0, 0, 0});
    CHECK(rep2.total() == 4);

    auto zero_ideal = graded_quotient_dims(3, {1, 1, 1}, {}, 4);
    for (int d = 0; d <= 4; ++d)
        CHECK(zero_ideal.dims[d] == binomial(d + 2, 2));

    CHECK_THROWS(graded_quotient_dims(1, {1}, {MultiPoly::var(1, 0) +
                                               MultiPoly::var(1, 0, 2)}, 3));
}

TEST_CASE("exact rank agrees with modular rank") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7), size(4, 12);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = size(rng), cols = size(rng);
        std::vector<SparseRow> mat;
        for (int i = 0; i < rows; ++i) {
            SparseRow row;
            for (int j = 0; j < cols; ++j)
                if (rng() % 3 == 0) {
                    Rat v(num(rng), den(rng));
                    v.canonicalize();
                    if (v != 0) row.emplace_back(j, v);
                }
            mat.push_back(std::move(row));
        }
        long exact = exact_rank(mat);
        CHECK(exact == modular_rank(mat, 32003));
        CHECK(exact == modular_rank(mat, 65537));
    }
}

TEST_CASE("QMat charpoly of a companion matrix recovers the polynomial") {
    // u^3 - 2u + 5
    QMat c(3, 3);
    c.at(1, 0) = 1;
    c.at(2, 1) = 1;
    c.at(0, 2) = -5;
    c.at(1, 2) = 2;
    c.at(2, 2) = 0;
    auto chi = c.charpoly();
    CHECK(chi == std::vector<Rat>{5, -2, 0, 1});
}

TEST_CASE("QMat inverse and solve") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        QMat m(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = v(rng);
        } while (m.rank() < 4);
        CHECK(m * m.inverse() == QMat::identity(4));
        QMat b(4, 2);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) b.at(i, j) = v(rng);
        CHECK(m * m.solve(b) == b);
    }
}

TEST_CASE("qp_factor splits known products") {
    QPoly q{-2, 0, 1};   // u^2 - 2
    QPoly l{1, 1};       // u + 1
    auto f = qp_factor(qp_mul(q, qp_mul(l, l)));
    REQUIRE(f.size() == 2);
    CHECK(f[0].poly == l);
    CHECK(f[0].mult == 2);
    CHECK(f[1].poly == q);
    CHECK(f[1].mult == 1);

    // u^6 - 1 = (u-1)(u+1)(u^2+u+1)(u^2-u+1)
    QPoly u6{-1, 0, 0, 0, 0, 0, 1};
    auto f6 = qp_factor(u6);
    REQUIRE(f6.size() == 4);
    for (const auto& fac : f6) CHECK(fac.mult == 1);
    CHECK(f6[0].poly == QPoly{-1, 1});
    CHECK(f6[1].poly == QPoly{1, 1});
    CHECK(f6[2].poly == QPoly{1, -1, 1});
    CHECK(f6[3].poly == QPoly{1, 1, 1});

    CHECK(qp_is_irreducible(QPoly{1, 0, 0, 0, 1}));   // u^4 + 1
    CHECK(qp_is_irreducible(QPoly{-2, 0, 0, 0, 0, 1}));  // u^5 - 2
    CHECK_FALSE(qp_is_irreducible(QPoly{-1, 0, 0, 0, 1}));  // u^4 - 1
}

TEST_CASE("qp_factor round trips on random products") {
    std::mt19937_64 rng(19);
    std::vector<QPoly> pool = {{1, 1}, {-1, 1}, {-2, 1}, {3, 1}, {-2, 0, 1},
                               {1, 1, 1}, {1, -1, 1}, {2, 0, 1}, {1, 0, 0, 1}};
    for (int trial = 0; trial < 30; ++trial) {
        QPoly prod{Rat(1)};
        int pieces = 1 + static_cast<int>(rng() % 4);
        std::map<QPoly, int> used;
        for (int i = 0; i < pieces; ++i) {
            const QPoly& pick = pool[rng() % pool.size()];
            prod = qp_mul(prod, pick);
            used[pick] += 1;
        }
        // u^3+1 = (u+1)(u^2-u+1) etc.: recombine expected factors irreducibly
        std::map<QPoly, int> expected;
        for (const auto& [p, k] : used)
            for (const auto& fac : qp_factor(p)) expected[fac.poly] += fac.mult * k;
        std::map<QPoly, int> got;
        for (const auto& fac : qp_factor(prod)) got[fac.poly] += fac.mult;
        CHECK(got == expected);
    }
}

TEST_CASE("qp_gcd and reversal") {
    QPoly a = qp_mul({1, 1}, {-2, 1});
    QPoly b = qp_mul({1, 1}, {5, 1});
    CHECK(qp_gcd(a, b) == QPoly{1, 1});
    CHECK(qp_reverse(QPoly{2, 3, 1}) == QPoly{1, 3, 2});
}
