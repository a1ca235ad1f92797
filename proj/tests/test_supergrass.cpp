#include <doctest.h>

#include "supergrass/partition.hpp"
#include "supergrass/supergrass.hpp"

using namespace sgr;

TEST_CASE("normalization swaps to the r >= s representative") {
    SuperGrassSpec spec{2, 3, 1, 2};
    SuperGrassSpec norm = normalize(spec);
    CHECK(norm.n == 3);
    CHECK(norm.m == 2);
    CHECK(norm.r == 2);
    CHECK(norm.s == 1);
    SuperGrassSpec again = normalize(norm);
    CHECK(again.n == norm.n);
    CHECK(again.r == norm.r);
}

TEST_CASE("delta") {
    CHECK(delta({2, 2, 2, 1}) == 1);
    CHECK(delta({2, 1, 1, 1}) == 0);
    CHECK(delta({1, 1, 1, 0}) == 1);
    CHECK(delta({3, 3, 2, 2}) == 0);
    CHECK_THROWS(delta({2, 3, 1, 2}));  // not normalized
}

TEST_CASE("Gr_{1|1}(C^{2|2}) has cohomology in degrees 0 and 2") {
    CohomologyReport rep = cohomology({2, 2, 1, 1});
    CHECK(rep.delta == 0);
    CHECK(rep.dim(0) == 1);
    CHECK(rep.dim(1) == 0);
    CHECK(rep.dim(2) == 1);
    CHECK(rep.total_dim() == 2);
    for (const auto& g : rep.groups) CHECK(g.odd_dim == 0);
}

TEST_CASE("Gr_{2|1}(C^{2|2}) concentrates S11 x S11 in H^1") {
    CohomologyReport rep = cohomology({2, 2, 2, 1});
    CHECK(rep.delta == 1);
    CHECK(rep.dim(0) == 1);
    CHECK(rep.dim(1) == 1);
    REQUIRE(rep.groups.size() >= 2);
    REQUIRE(rep.groups[1].terms.size() == 1);
    const auto& t = rep.groups[1].terms[0];
    CHECK(t.rep.P == Partition({1, 1}));
    CHECK(t.rep.Q == Partition({1, 1}));
    CHECK(t.parity == 0);
    CHECK(rep.groups[1].even_dim == 1);
    CHECK(rep.groups[1].odd_dim == 0);
}

TEST_CASE("Gr_{1|0}(C^{1|1}) is a point with one odd function") {
    CohomologyReport rep = cohomology({1, 1, 1, 0});
    CHECK(rep.groups.size() == 1);
    CHECK(rep.groups[0].even_dim == 1);
    CHECK(rep.groups[0].odd_dim == 1);
    CHECK(rep.total_dim() == 2);
}

TEST_CASE("the super point Gr_{n|0}(C^{n|m}) has 2^{nm} functions") {
    for (auto [n, m] : {std::pair{1, 3}, {2, 2}, {3, 2}}) {
        CohomologyReport rep = cohomology({n, m, n, 0});
        CHECK(rep.groups.size() == 1);
        Int expect = Int(1) << (n * m);
        CHECK(rep.groups[0].even_dim + rep.groups[0].odd_dim == expect);
        CHECK(rep.groups[0].even_dim - rep.groups[0].odd_dim ==
              (n * m == 0 ? 1 : 0));
    }
}

TEST_CASE("super Euler characteristics") {
    EulerReport e1 = super_euler({2, 1, 1, 1});
    CHECK(e1.formula == 1);
    CHECK(e1.ok());

    EulerReport e2 = super_euler({1, 2, 1, 1});
    CHECK(e2.formula == 1);
    CHECK(e2.ok());

    EulerReport e3 = super_euler({2, 2, 2, 1});
    CHECK(e3.formula == 0);
    CHECK(e3.ok());
}

TEST_CASE("normalization does not change cohomology dimensions") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int r = 0; r <= n; ++r)
                for (int s = 0; s <= m; ++s) {
                    CohomologyReport a = cohomology({n, m, r, s});
                    CohomologyReport b = cohomology({m, n, s, r});
                    CHECK(a.groups.size() == b.groups.size());
                    for (size_t i = 0; i < a.groups.size(); ++i) {
                        CHECK(a.groups[i].even_dim == b.groups[i].even_dim);
                        CHECK(a.groups[i].odd_dim == b.groups[i].odd_dim);
                    }
                    CHECK(a.euler_formula == a.euler_computed);
                }
}

TEST_CASE("delta = 0 gives the classical Grassmannian Chow dims, all even") {
    for (int m = 1; m <= 4; ++m)
        for (int s = 0; s <= m; ++s) {
            SuperGrassSpec spec{m, m, s, s};  // r - s = n - m, so delta = 0
            REQUIRE(delta(normalize(spec)) == 0);
            CohomologyReport rep = cohomology(spec);
            GradedDims gp = gaussian_poincare(s, m);
            for (size_t i = 0; i < rep.groups.size(); ++i) {
                CHECK(rep.groups[i].odd_dim == 0);
                CHECK(rep.groups[i].even_dim == gp.at(static_cast<int>(i)));
            }
            CHECK(rep.total_dim() == binomial(m, s));
        }
}
