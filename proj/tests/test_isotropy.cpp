#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrcone/isotropy.hpp"
#include "lrcone/lrsemigroup.hpp"

using namespace lrcone;
using namespace lrcone::isotropy;
using embed::Embedding;
using rootsys::Face;
using rootsys::Weight;

namespace {
const SampleConfig kCfg{5, 7, 20240405};
}

TEST_CASE("torus_kernel_dim basics") {
    CHECK(torus_kernel_dim(2, {}) == 2);
    CHECK(torus_kernel_dim(1, {{2}}) == 0);
    CHECK(torus_kernel_dim(2, {{1, 0}, {2, 0}}) == 1);
    // invariance under change of basis of the weight list
    CHECK(torus_kernel_dim(2, {{1, 0}, {1, 1}}) == torus_kernel_dim(2, {{1, 0}, {0, 1}}));
    CHECK_THROWS(torus_kernel_dim(2, {{1}}));
}

TEST_CASE("dim_c_dual across the desk catalog") {
    // every desk entry spans the full lattice product, so the kernel is zero
    // except for the two determinant directions of the tensor case
    std::map<std::string, size_t> expected{{"diag:A1", 0}, {"diag:A2", 0}, {"sym2:2", 0},
                                           {"sym2:3", 0},  {"wedge2:4", 0}, {"tensor:2x2", 2}};
    for (const auto& [name, want] : expected) {
        CAPTURE(name);
        Embedding e = embed::build_embedding(name);
        CHECK(dim_c_dual(e) == want);
    }
}

TEST_CASE("flag_stabilizer: no conditions gives the whole algebra") {
    Embedding e = embed::build_embedding("sym2:2");
    FlagPoint empty;
    empty.ambient_dim = e.ambient;
    auto rep = flag_stabilizer(e, empty, AmbientAction::G);
    CHECK(rep.dim == 3);  // dim sl2
    CHECK(rep.reductive_dim == 3);
}

TEST_CASE("paper flag for S^2: stabilizer is exactly zero") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        Embedding e = embed::build_embedding("sym2:" + std::to_string(n));
        auto flag = paper_flag(e);
        auto rep = flag_stabilizer(e, flag, AmbientAction::GDual);
        CHECK(rep.dim == 0);
    }
}

TEST_CASE("paper flag for Lambda^2, even case") {
    Embedding e = embed::build_embedding("wedge2:4");
    auto flag = paper_flag(e);
    // members: <w0> in <w0,w1>, the identity block, then H and F
    CHECK(flag.subspaces.size() == 5);
    auto rep = flag_stabilizer(e, flag, AmbientAction::GDual);
    CHECK(rep.dim == 0);

    // the two-member truncation keeps the sp(4)-block stabilizer alive
    FlagPoint two;
    two.ambient_dim = flag.ambient_dim;
    two.subspaces = {flag.subspaces[0], flag.subspaces[1]};
    auto rep2 = flag_stabilizer(e, two, AmbientAction::GDual);
    CHECK(rep2.dim == 6);  // sl(W_1) x sl(W_2)
}

TEST_CASE("paper flag for Lambda^2, odd case") {
    Embedding e = embed::build_embedding("wedge2:5");
    auto flag = paper_flag(e);
    CHECK(flag.subspaces.size() == 4);
    CHECK(flag.subspaces.back().dim() == 9);  // hyperplane
    auto rep = flag_stabilizer(e, flag, AmbientAction::GDual);
    CHECK(rep.dim == 0);
}

TEST_CASE("flag completion keeps the stabilizer at zero") {
    Embedding e = embed::build_embedding("sym2:3");
    auto full = complete_flag(paper_flag(e));
    CHECK(full.subspaces.size() == static_cast<size_t>(e.ambient));
    CHECK(full.subspaces.back().dim() == static_cast<size_t>(e.ambient));
    auto rep = flag_stabilizer(e, full, AmbientAction::GDual);
    CHECK(rep.dim == 0);
}

TEST_CASE("generic stabilizers on diag:A1 at the zero face") {
    Embedding e = embed::build_embedding("diag:A1");
    // D = G acting on G/B x G/B: a maximal torus
    auto repD = generic_stabilizer(e, Face{}, Actor::D, kCfg);
    CHECK(repD.dim == 1);
    CHECK(repD.reductive_dim == 1);
    // the Borel has finite isotropy
    auto repB = generic_stabilizer(e, Face{}, Actor::BL, kCfg);
    CHECK(repB.dim == 0);
    // genericity witness: the minimum is attained at least 3 times out of 5
    int hits = 0;
    for (size_t d : repD.trial_dims)
        if (d == repD.dim) ++hits;
    CHECK(hits >= 3);
}

TEST_CASE("delta_theoretical matches the paper values on the diagonal cases") {
    Embedding a1 = embed::build_embedding("diag:A1");
    auto d0 = delta_theoretical(a1, Face{}, kCfg);
    REQUIRE(d0.value.has_value());
    CHECK(*d0.value == 1);
    auto d1 = delta_theoretical(a1, Face{{0}}, kCfg);
    REQUIRE(d1.value.has_value());
    CHECK(*d1.value == 0);

    Embedding a2 = embed::build_embedding("diag:A2");
    auto e0 = delta_theoretical(a2, Face{}, kCfg);
    REQUIRE(e0.value.has_value());
    CHECK(*e0.value == 2);
    for (const auto& f : rootsys::enumerate_faces(a2.g)) {
        if (f.support.empty()) continue;
        auto dt = delta_theoretical(a2, f, kCfg);
        CAPTURE(f.to_string());
        REQUIRE(dt.value.has_value());
        CHECK(*dt.value == 0);
    }
}

TEST_CASE("delta_theoretical vanishes on both faces of sym2:2") {
    Embedding e = embed::build_embedding("sym2:2");
    for (const auto& f : rootsys::enumerate_faces(e.g)) {
        auto dt = delta_theoretical(e, f, kCfg);
        CAPTURE(f.to_string());
        REQUIRE(dt.value.has_value());
        CHECK(*dt.value == 0);
    }
}

TEST_CASE("stabilizer subalgebras are bracket-closed and reductive parts bounded") {
    Embedding e = embed::build_embedding("diag:A2");
    auto rep = generic_stabilizer(e, Face{}, Actor::D, kCfg);
    CHECK(rep.dim == 2);  // maximal torus of sl3
    REQUIRE(rep.reductive_dim.has_value());
    CHECK(*rep.reductive_dim <= rep.dim);
    // closure is asserted inside the call; re-check here
    for (size_t i = 0; i < rep.basis.size(); ++i)
        for (size_t j = i + 1; j < rep.basis.size(); ++j)
            CHECK(rep.subalgebra.contains(exactq::bracket(rep.basis[i], rep.basis[j]).vectorize()));
}

TEST_CASE("all_faces_full_check across the catalog") {
    std::map<std::string, bool> expected{{"diag:A1", false}, {"diag:A2", false}, {"sym2:2", true},
                                         {"sym2:3", true},   {"wedge2:4", true}, {"tensor:2x2", true}};
    for (const auto& [name, want] : expected) {
        CAPTURE(name);
        Embedding e = embed::build_embedding(name);
        auto rep = all_faces_full_check(e, kCfg);
        CHECK(rep.all_faces_full == want);
        if (want) {
            REQUIRE(rep.witness.has_value());
            validate_flag(*rep.witness);
            if (isotropy::has_paper_flag(name)) CHECK(rep.witness_deterministic);
        }
    }
}

TEST_CASE("theoretical and direct defects agree at saturation (diag:A1 end to end)") {
    Embedding e = embed::build_embedding("diag:A1");
    auto s = lrsg::enumerate_semigroup(e, 4);
    REQUIRE(s.saturated);
    for (const auto& f : rootsys::enumerate_faces(e.g)) {
        auto dd = lrsg::delta_direct(s, f);
        auto dt = delta_theoretical(e, f, kCfg);
        CAPTURE(f.to_string());
        REQUIRE(dt.value.has_value());
        CHECK(*dt.value == dd.delta);
    }
}

TEST_CASE("stabilizer report JSON") {
    Embedding e = embed::build_embedding("diag:A1");
    auto rep = generic_stabilizer(e, Face{}, Actor::D, kCfg);
    auto j = stabilizer_report_to_json(e, Face{}, "D", rep, std::nullopt);
    CHECK(j.find("\"embedding\": \"diag:A1\"") != std::string::npos);
    CHECK(j.find("\"dim\": 1") != std::string::npos);
}
