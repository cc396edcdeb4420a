#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrcone/exactq.hpp"

using namespace lrcone;
using namespace lrcone::exactq;

TEST_CASE("rank basics") {
    CHECK(rank(QMat::identity(2)) == 2);
    CHECK(rank(QMat(3, 3)) == 0);
    CHECK(rank(QMat::from_int_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(QMat::from_int_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(QMat::identity(3)).dim() == 0);
    Subspace k = kernel_basis(QMat::from_int_rows({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(QVec{Rat(1), Rat(-1)}));
    CHECK(kernel_basis(QMat(2, 3)).dim() == 3);
}

TEST_CASE("rank-nullity on random small rational matrices") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), dims(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        size_t r = dims(rng), c = dims(rng);
        QMat m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = Rat(num(rng), den(rng));
        CHECK(rank(m) + kernel_basis(m).dim() == c);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("span intersection basics") {
    QVec ex{Rat(1), Rat(0), Rat(0)}, ey{Rat(0), Rat(1), Rat(0)}, ez{Rat(0), Rat(0), Rat(1)};
    Subspace xy(3, {ex, ey}), yz(3, {ey, ez});
    Subspace axis = span_intersection(xy, yz);
    CHECK(axis.dim() == 1);
    CHECK(axis.contains(ey));

    Subspace a(2, {QVec{Rat(1), Rat(1)}}), b(2, {QVec{Rat(1), Rat(-1)}});
    CHECK(span_intersection(a, b).dim() == 0);
    CHECK(span_intersection(a, a) == a);
    CHECK_THROWS(span_intersection(a, xy));
}

TEST_CASE("span intersection is commutative and dimension formula holds") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 5;
        auto rnd_space = [&](size_t k) {
            std::vector<QVec> rows;
            for (size_t i = 0; i < k; ++i) {
                QVec v(n);
                for (size_t j = 0; j < n; ++j) v[j] = Rat(num(rng));
                rows.push_back(v);
            }
            return Subspace(n, rows);
        };
        Subspace a = rnd_space(trial % 4 + 1), b = rnd_space((trial + 2) % 4 + 1);
        Subspace i1 = span_intersection(a, b), i2 = span_intersection(b, a);
        CHECK(i1 == i2);
        CHECK(span_intersection(a, i1) == i1);  // idempotent on the result
        CHECK(i1.dim() + span_sum(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("canonical bases are primitive integer vectors with positive lead") {
    Subspace s(3, {QVec{Rat(1, 2), Rat(1, 3), Rat(0)}, QVec{Rat(-2), Rat(0), Rat(4)}});
    for (const auto& v : s.basis()) {
        Int g = 0;
        bool saw = false;
        for (const auto& x : v) {
            CHECK(rat_den(x) == 1);
            g = gcd(g, rat_num(x));
            if (!saw && x != 0) {
                CHECK(x > 0);
                saw = true;
            }
        }
        CHECK(g == 1);
    }
    // exactly reproducible across calls
    Subspace t(3, {QVec{Rat(-2), Rat(0), Rat(4)}, QVec{Rat(1, 2), Rat(1, 3), Rat(0)}});
    CHECK(s == t);
}

TEST_CASE("solve and matrix helpers") {
    QMat a = QMat::from_int_rows({{2, 1}, {1, 3}});
    auto x = solve(a, QVec{Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));
    CHECK(!solve(QMat::from_int_rows({{1, 1}, {1, 1}}), QVec{Rat(0), Rat(1)}).has_value());

    QMat n = QMat::from_int_rows({{0, 1}, {0, 0}});
    CHECK(is_nilpotent(n));
    CHECK(!is_nilpotent(QMat::identity(2)));
    CHECK(bracket(n, n.transpose()) == QMat::from_int_rows({{1, 0}, {0, -1}}));
    CHECK(trace_of_product(n, n.transpose()) == Rat(1));
}
