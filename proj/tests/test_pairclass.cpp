#include <doctest.h>

#include <random>

#include "supergrass/pairclass.hpp"

using namespace sgr;

namespace {

QMat rand_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> v(-3, 3);
    while (true) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v(rng);
        if (m.rank() == n) return m;
    }
}

IndecompTag A(int k, QPoly poly) { return {IndecompTag::Type::A, k, std::move(poly), false}; }
IndecompTag Ainf(int k) { return {IndecompTag::Type::A, k, {}, true}; }
IndecompTag B(int k) { return {IndecompTag::Type::B, k, {}, false}; }
IndecompTag Bshift(int k) { return {IndecompTag::Type::Bshift, k, {}, false}; }

IndecompMultiset MS(std::vector<IndecompTag> tags) {
    IndecompMultiset ms;
    ms.tags = std::move(tags);
    ms.normalize();
    return ms;
}

} // namespace

TEST_CASE("one-dimensional pairs") {
    MatrixPair p1;
    p1.f = QMat(1, 1);
    p1.f.at(0, 0) = 1;
    p1.g = QMat(1, 1);
    p1.g.at(0, 0) = 7;
    CHECK(classify(p1) == MS({A(1, {-7, 1})}));

    MatrixPair p2;
    p2.f = QMat(1, 1);
    p2.g = QMat(1, 1);
    p2.g.at(0, 0) = 1;
    CHECK(classify(p2) == MS({Ainf(1)}));

    MatrixPair p3;  // V0 one-dimensional, V1 zero
    p3.f = QMat(0, 1);
    p3.g = QMat(1, 0);
    CHECK(classify(p3) == MS({B(0)}));
}

TEST_CASE("synthesize realizes the advertised dimensions") {
    CHECK(synthesize(MS({})).dim_v0() == 0);
    auto b1 = synthesize(MS({B(1)}));
    CHECK(b1.dim_v0() == 2);
    CHECK(b1.dim_v1() == 1);
    CHECK(b1.f.at(0, 0) == 1);
    CHECK(b1.f.at(0, 1) == 0);
    CHECK(b1.g.at(0, 0) == 0);
    CHECK(b1.g.at(1, 0) == 1);

    for (const auto& tag : {A(2, {-3, 1}), A(1, {1, 1, 1}), Ainf(3), B(2), Bshift(2)}) {
        auto pair = synthesize(MS({tag}));
        CHECK(pair.dim_v0() == tag.dim_v0());
        CHECK(pair.dim_v1() == tag.dim_v1());
        CHECK(classify(pair) == MS({tag}));
    }
}

TEST_CASE("deterministic round trips with base change") {
    std::mt19937_64 rng(5);
    std::vector<IndecompMultiset> cases = {
        MS({A(2, {-3, 1}), B(1), Bshift(2)}),
        MS({A(1, {-2, 0, 1}), Ainf(2), B(0)}),
        MS({A(1, {1, 1}), A(1, {1, 1}), A(2, {0, 1})}),
        MS({B(0), B(0), Bshift(0), Ainf(1)}),
        MS({A(2, {1, 1, 1})}),
    };
    for (const auto& ms : cases) {
        MatrixPair pair = synthesize(ms);
        for (int rep = 0; rep < 3; ++rep) {
            MatrixPair conj = conjugate(pair, rand_invertible(rng, pair.dim_v0()),
                                        rand_invertible(rng, pair.dim_v1()));
            CHECK(classify(conj) == ms);
        }
    }
}

TEST_CASE("swapping f and g fixes invertible blocks and flips B types") {
    auto swap_pair = [](const MatrixPair& p) { return MatrixPair{p.g, p.f}; };

    // fg and gf share their nonzero spectrum, so A(k, pi) is self-dual when
    // pi(0) != 0; only the B's and the two nilpotent families trade places.
    auto ms = MS({A(2, {-3, 1}), B(1)});
    auto swapped = classify(swap_pair(synthesize(ms)));
    CHECK(swapped == MS({A(2, {-3, 1}), Bshift(1)}));

    // a reducible polynomial splits into its irreducible pieces either way
    auto ms2 = MS({A(1, {2, 3, 1})});  // (u+1)(u+2)
    auto swapped2 = classify(swap_pair(synthesize(ms2)));
    CHECK(swapped2 == MS({A(1, {1, 1}), A(1, {2, 1})}));

    CHECK(classify(swap_pair(synthesize(MS({Ainf(2)})))) == MS({A(2, {0, 1})}));
    CHECK(classify(swap_pair(synthesize(MS({Bshift(2)})))) == MS({B(2)}));
}

TEST_CASE("rank profile from the classification matches direct ranks") {
    std::mt19937_64 rng(9);
    auto ms = MS({A(2, {-1, 1}), Ainf(1), B(1)});
    MatrixPair base = synthesize(ms);
    MatrixPair pair = conjugate(base, rand_invertible(rng, base.dim_v0()),
                                rand_invertible(rng, base.dim_v1()));
    std::vector<Int> direct = word_ranks(pair, 6);
    std::vector<Int> assembled(direct.size(), 0);
    for (const auto& tag : ms.tags) {
        auto wr = word_ranks(synthesize(MS({tag})), 6);
        for (size_t i = 0; i < wr.size(); ++i) assembled[i] += wr[i];
    }
    CHECK(direct == assembled);
}

TEST_CASE("reduced characteristic polynomial") {
    MatrixPair diag;
    diag.f = QMat::identity(3);
    diag.g = QMat(3, 3);
    diag.g.at(0, 0) = 2;
    diag.g.at(1, 1) = 5;
    // third eigenvalue of fg is 0
    CHECK(reduced_charpoly(diag, 1) == QPoly{10, -7, 1});
    CHECK(reduced_charpoly(diag, 0) == QPoly{0, 10, -7, 1});
    CHECK_THROWS(reduced_charpoly(diag, 2));

    MatrixPair zero;
    zero.f = QMat(2, 2);
    zero.g = QMat(2, 2);
    CHECK(reduced_charpoly(zero, 2) == QPoly{1});
}

TEST_CASE("nilpotent pairs have power charpoly") {
    auto ms = MS({Ainf(2), A(1, {0, 1}), B(1)});
    MatrixPair pair = synthesize(ms);
    QPoly chi = reduced_charpoly(pair, pair.dim_v1());
    CHECK(chi == QPoly{1});
}
