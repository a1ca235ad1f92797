#include <doctest.h>

#include "supergrass/grassmann.hpp"

using namespace sgr;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

CohomologyClass sigma(const Partition& p) {
    CohomologyClass c;
    c.add(p, 1);
    return c;
}

} // namespace

TEST_CASE("basis by degree") {
    CHECK(grass_basis({1, 2}, 2) == std::vector<Partition>{P({1})});
    CHECK(grass_basis({2, 4}, 4) == std::vector<Partition>{P({2}), P({1, 1})});
    CHECK(grass_basis({1, 3}, 6).empty());
    CHECK_THROWS(grass_basis({1, 3}, 3));
}

TEST_CASE("cup products on small Grassmannians") {
    GrassSpec p1{1, 2};
    CHECK(cup(p1, sigma(P({1})), sigma(P({1}))).is_zero());

    GrassSpec g24{2, 4};
    auto prod = cup(g24, sigma(P({1})), sigma(P({1})));
    CHECK(prod.terms.size() == 2);
    CHECK(prod.terms.at(P({2})) == 1);
    CHECK(prod.terms.at(P({1, 1})) == 1);

    auto prod2 = cup(g24, sigma(P({1})), sigma(P({2, 1})));
    CHECK(prod2.terms.size() == 1);
    CHECK(prod2.terms.at(P({2, 2})) == 1);
}

TEST_CASE("total dimension") {
    CHECK(grass_total_dim({1, 2}) == 2);
    CHECK(grass_total_dim({2, 4}) == 6);
    CHECK(grass_total_dim({0, 7}) == 1);
}

TEST_CASE("graded basis counts match the Poincare polynomial") {
    for (int N = 0; N <= 6; ++N)
        for (int s = 0; s <= N; ++s) {
            auto gp = gaussian_poincare(s, N);
            for (int d = 0; d <= 2 * s * (N - s); d += 2)
                CHECK(Int(static_cast<long>(grass_basis({s, N}, d).size())) == gp.at(d));
        }
}

TEST_CASE("cup is commutative and associative") {
    for (int N = 2; N <= 4; ++N)
        for (int s = 1; s < N; ++s) {
            GrassSpec spec{s, N};
            auto all = partitions_in_box(s, N - s);
            for (const auto& a : all)
                for (const auto& b : all) {
                    CHECK(cup(spec, sigma(a), sigma(b)).terms ==
                          cup(spec, sigma(b), sigma(a)).terms);
                    for (const auto& c : all) {
                        auto left = cup(spec, cup(spec, sigma(a), sigma(b)), sigma(c));
                        auto right = cup(spec, sigma(a), cup(spec, sigma(b), sigma(c)));
                        CHECK(left.terms == right.terms);
                    }
                }
        }
}

TEST_CASE("Poincare pairing singles out the complementary partition") {
    for (int N = 2; N <= 4; ++N)
        for (int s = 1; s < N; ++s) {
            GrassSpec spec{s, N};
            std::vector<int> full(s, N - s);
            Partition box_class(full);
            auto all = partitions_in_box(s, N - s);
            for (const auto& a : all) {
                int partners = 0;
                for (const auto& b : all) {
                    if (a.size() + b.size() != s * (N - s)) continue;
                    auto prod = cup(spec, sigma(a), sigma(b));
                    if (prod.terms.size() == 1 && prod.terms.count(box_class) &&
                        prod.terms.at(box_class) == 1)
                        ++partners;
                    else
                        CHECK(prod.is_zero());
                }
                CHECK(partners == 1);
            }
        }
}
