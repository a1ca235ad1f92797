#include <doctest.h>

#include "supergrass/partition.hpp"

using namespace sgr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("conjugate on small shapes") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(P({2, 2})) == P({2, 2}));
    CHECK(conjugate(P({})) == P({}));
}

TEST_CASE("conjugate is an involution up to size 12") {
    for (int k = 0; k <= 12; ++k)
        for (const auto& p : partitions_of(k, k, k)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dim_schur basics") {
    CHECK(dim_schur(P({}), 5) == 1);
    CHECK(dim_schur(P({1}), 4) == 4);
    CHECK(dim_schur(P({2, 1}), 3) == 8);
    CHECK(dim_schur(P({1, 1, 1}), 2) == 0);
}

TEST_CASE("dim_schur row and column shapes match binomials") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 8; ++k) {
            CHECK(dim_schur(P({k}), n) == binomial(n + k - 1, k));
            CHECK(dim_schur(P(std::vector<int>(k, 1)), n) == binomial(n, k));
        }
}

TEST_CASE("dim_schur agrees with tableau enumeration") {
    for (int k = 0; k <= 5; ++k)
        for (const auto& p : partitions_of(k, k, k))
            for (int n = 1; n <= 5; ++n) CHECK(dim_schur(p, n) == count_ssyt(p, n));
}

TEST_CASE("ssyt weight multiset sums to the dimension") {
    auto ws = ssyt_weights(P({2, 1}), 3);
    CHECK(Int(static_cast<long>(ws.size())) == dim_schur(P({2, 1}), 3));
}

TEST_CASE("gaussian_poincare small Grassmannians") {
    auto p12 = gaussian_poincare(1, 2);
    CHECK(p12.at(0) == 1);
    CHECK(p12.at(2) == 1);
    CHECK(p12.dims.size() == 2);

    auto p13 = gaussian_poincare(1, 3);
    CHECK(p13.at(0) == 1);
    CHECK(p13.at(2) == 1);
    CHECK(p13.at(4) == 1);

    auto p24 = gaussian_poincare(2, 4);
    CHECK(p24.at(0) == 1);
    CHECK(p24.at(2) == 1);
    CHECK(p24.at(4) == 2);
    CHECK(p24.at(6) == 1);
    CHECK(p24.at(8) == 1);
}

TEST_CASE("gaussian_poincare totals and palindromy") {
    for (int N = 0; N <= 10; ++N)
        for (int s = 0; s <= N; ++s) {
            auto gp = gaussian_poincare(s, N);
            CHECK(gp.total() == binomial(N, s));
            int top = 2 * s * (N - s);
            for (const auto& [d, v] : gp.dims) CHECK(v == gp.at(top - d));
        }
    CHECK_THROWS(gaussian_poincare(3, 2));
}

TEST_CASE("lr_expand_in_box Pieri cases") {
    auto in22 = lr_expand_in_box(P({1}), P({1}), {2, 2});
    CHECK(in22.size() == 2);
    CHECK(in22.at(P({2})) == 1);
    CHECK(in22.at(P({1, 1})) == 1);

    CHECK(lr_expand_in_box(P({1}), P({1}), {1, 1}).empty());

    auto in12 = lr_expand_in_box(P({1}), P({1}), {1, 2});
    CHECK(in12.size() == 1);
    CHECK(in12.at(P({2})) == 1);
}

TEST_CASE("lr_expand tensor dimension identity") {
    for (int a = 0; a <= 4; ++a)
        for (const auto& p : partitions_of(a, a, a))
            for (int b = 0; b <= 4; ++b)
                for (const auto& q : partitions_of(b, b, b))
                    for (int n = 1; n <= 4; ++n) {
                        Int lhs = 0;
                        for (const auto& [lam, c] : lr_expand(p, q))
                            lhs += c * dim_schur(lam, n);
                        CHECK(lhs == dim_schur(p, n) * dim_schur(q, n));
                    }
}

TEST_CASE("lr_expand_in_box is symmetric") {
    BoxBound box{3, 3};
    for (int a = 0; a <= 3; ++a)
        for (const auto& p : partitions_of(a, 3, 3))
            for (int b = 0; b <= 3; ++b)
                for (const auto& q : partitions_of(b, 3, 3))
                    CHECK(lr_expand_in_box(p, q, box) == lr_expand_in_box(q, p, box));
}
