#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrcone/rootsys.hpp"

using namespace lrcone;
using namespace lrcone::rootsys;

TEST_CASE("build_root_system basics") {
    RootSystem a1 = build_root_system("A1");
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.cartan(0, 0) == 2);

    RootSystem a2 = build_root_system("A2");
    CHECK(a2.positive_roots().size() == 3);

    RootSystem prod = build_root_system("A1xA1");
    CHECK(prod.rank() == 2);
    CHECK(prod.positive_roots().size() == 2);

    CHECK_THROWS(build_root_system("E8"));
    CHECK_THROWS(build_root_system("B1"));
    CHECK_THROWS(build_root_system("D2"));
    CHECK_THROWS(build_root_system(""));
}

TEST_CASE("classical positive-root counts") {
    for (auto spec : {"A3", "B2", "B3", "C2", "C3", "D3", "D4", "A2xB2"}) {
        RootSystem rs = build_root_system(spec);
        int64_t expected = 0;
        for (const auto& f : rs.factors()) expected += classical_positive_root_count(f);
        CHECK(static_cast<int64_t>(rs.positive_roots().size()) == expected);
    }
}

TEST_CASE("rho is all ones and positive roots sum to 2 rho") {
    for (auto spec : {"A2", "B2", "C3", "D4", "A1xA2"}) {
        RootSystem rs = build_root_system(spec);
        for (int64_t x : rs.rho()) CHECK(x == 1);
        Weight sum(rs.rank(), 0);
        for (const auto& a : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) sum[i] += a.fund_coords[i];
        for (int i = 0; i < rs.rank(); ++i) CHECK(sum[i] == 2);
    }
}

TEST_CASE("simple reflections permute the other positive roots") {
    for (auto spec : {"A2", "B2", "C3", "D4"}) {
        RootSystem rs = build_root_system(spec);
        for (int j = 0; j < rs.rank(); ++j) {
            std::multiset<Weight> before, after;
            for (const auto& a : rs.positive_roots()) {
                if (a.height == 1 && a.root_coords[j] == 1) continue;  // alpha_j itself
                before.insert(a.fund_coords);
                after.insert(rs.reflect(a.fund_coords, j));
            }
            CHECK(before == after);
        }
    }
}

TEST_CASE("dominant weight enumeration is lexicographic") {
    RootSystem a1 = build_root_system("A1");
    CHECK(dominant_weights_up_to(a1, 2) == std::vector<Weight>{{0}, {1}, {2}});
    RootSystem a2 = build_root_system("A2");
    CHECK(dominant_weights_up_to(a2, 1) ==
          std::vector<Weight>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(dominant_weights_up_to(a2, 0) == std::vector<Weight>{{0, 0}});
}

TEST_CASE("faces of the dominant chamber") {
    RootSystem a1 = build_root_system("A1");
    CHECK(enumerate_faces(a1).size() == 2);
    RootSystem a2 = build_root_system("A2");
    auto faces = enumerate_faces(a2);
    CHECK(faces.size() == 4);

    LeviData l1 = levi_data(a2, Face{{0}});
    CHECK(l1.levi_simple_roots == std::vector<int>{1});
    CHECK(l1.pu_positive_roots.size() == 2);

    LeviData full = levi_data(a2, Face{{0, 1}});
    CHECK(full.levi_simple_roots.empty());
    CHECK(full.pu_positive_roots.size() == 3);
    CHECK(full.semisimple_rank_of_D == 0);

    LeviData zero = levi_data(a2, Face{{}});
    CHECK(zero.levi_simple_roots == std::vector<int>{0, 1});
    CHECK(zero.pu_positive_roots.empty());
    CHECK(zero.semisimple_rank_of_D == 2);
}

TEST_CASE("larger face means smaller unipotent radical") {
    for (auto spec : {"A2", "B2", "A1xA2", "D4"}) {
        RootSystem rs = build_root_system(spec);
        auto faces = enumerate_faces(rs);
        for (const auto& f1 : faces)
            for (const auto& f2 : faces) {
                if (!std::includes(f2.support.begin(), f2.support.end(), f1.support.begin(),
                                   f1.support.end()))
                    continue;
                LeviData l1 = levi_data(rs, f1), l2 = levi_data(rs, f2);
                // f1 subset f2: levi roots shrink, p^u grows downward
                for (int j : l2.levi_simple_roots)
                    CHECK(std::find(l1.levi_simple_roots.begin(), l1.levi_simple_roots.end(), j) !=
                          l1.levi_simple_roots.end());
                std::set<std::vector<int64_t>> pu2;
                for (const auto& r : l2.pu_positive_roots) pu2.insert(r.root_coords);
                for (const auto& r : l1.pu_positive_roots)
                    CHECK(pu2.count(r.root_coords) == 1);
            }
    }
}

TEST_CASE("dominance helpers") {
    RootSystem a2 = build_root_system("A2");
    CHECK(a2.is_dominant({1, 0}));
    CHECK(!a2.is_dominant({-1, 2}));
    CHECK(a2.dominant_representative({-1, 2}) == Weight{1, 1});
    CHECK(a2.dual_weight({1, 0}) == Weight{0, 1});
    CHECK(a2.dual_weight({2, 1}) == Weight{1, 2});
    CHECK(a2.weyl_orbit({1, 1}).size() == 6);
    CHECK(a2.weyl_orbit({1, 0}).size() == 3);
    CHECK(a2.weyl_orbit({0, 0}).size() == 1);

    Weight dom;
    int sign;
    // (-1, 0): shifted by rho lands on a wall
    CHECK(!a2.dominant_conjugate_shifted({-1, 0}, dom, sign));
    // (-2, 1) shifted is regular and needs one sign flip
    CHECK(a2.dominant_conjugate_shifted({-2, 1}, dom, sign));
    CHECK(sign == -1);
    CHECK(dom == Weight{0, 0});
    CHECK(a2.dominant_conjugate_shifted({0, 0}, dom, sign));
    CHECK(dom == Weight{0, 0});
    CHECK(sign == 1);
}
