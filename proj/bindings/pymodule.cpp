#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrcone/checkall.hpp"
#include "lrcone/isotropy.hpp"
#include "lrcone/lrsemigroup.hpp"

namespace py = pybind11;
using namespace lrcone;

namespace {

embed::Embedding build(const std::string& name) { return embed::build_embedding(name); }

rootsys::Face face_of(const embed::Embedding& e, const std::string& spec) {
    return lrsg::parse_face_spec(e, spec);
}

py::dict decomposition_to_dict(const std::map<rootsys::Weight, int64_t>& terms) {
    py::dict out;
    for (const auto& [w, m] : terms) out[py::tuple(py::cast(w))] = m;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations on generalized Littlewood-Richardson semigroups, "
              "face defects, and their geometric cross-checks";

    m.def("catalog", &embed::catalog, "embedding name grammar of the catalog");
    m.def("desk_catalog", &embed::desk_catalog, "concrete desk-scale catalog entries");

    m.def("default_bound", [](const std::string& name) { return embed::default_bound(build(name)); });

    m.def(
        "enumerate_json",
        [](const std::string& name, int64_t bound, int threads) {
            auto e = build(name);
            return lrsg::sample_to_json(lrsg::enumerate_semigroup(e, bound, threads));
        },
        py::arg("embedding"), py::arg("bound"), py::arg("threads") = 0,
        "JSON of the semigroup sample up to the bound");

    m.def(
        "enumerate_points",
        [](const std::string& name, int64_t bound, int threads) {
            auto e = build(name);
            auto s = lrsg::enumerate_semigroup(e, bound, threads);
            py::list out;
            for (const auto& p : s.points)
                out.append(py::make_tuple(py::tuple(py::cast(p.mu)), py::tuple(py::cast(p.nuhat)),
                                          p.mult));
            return py::make_tuple(out, s.saturated);
        },
        py::arg("embedding"), py::arg("bound"), py::arg("threads") = 0,
        "list of (mu, nuhat, mult) plus the saturation flag");

    m.def(
        "dim_c",
        [](const std::string& name, int64_t bound) {
            auto e = build(name);
            return lrsg::dim_C(lrsg::enumerate_semigroup(e, bound));
        },
        py::arg("embedding"), py::arg("bound"));

    m.def(
        "delta_direct",
        [](const std::string& name, const std::string& face, int64_t bound) {
            auto e = build(name);
            auto s = lrsg::enumerate_semigroup(e, bound >= 0 ? bound : embed::default_bound(e));
            auto d = lrsg::delta_direct(s, face_of(e, face));
            py::dict out;
            out["delta"] = d.delta;
            out["saturated"] = d.saturated;
            out["dim_c"] = d.dim_c;
            out["dim_cf"] = d.dim_cf;
            return out;
        },
        py::arg("embedding"), py::arg("face"), py::arg("bound") = -1);

    m.def(
        "delta_theoretical",
        [](const std::string& name, const std::string& face, int trials, int64_t height,
           uint64_t seed) -> py::object {
            auto e = build(name);
            auto d = isotropy::delta_theoretical(e, face_of(e, face), {trials, height, seed});
            if (!d.value) return py::none();
            return py::int_(*d.value);
        },
        py::arg("embedding"), py::arg("face"), py::arg("trials") = 5, py::arg("height") = 7,
        py::arg("seed") = 20240405, "None means the reductive heuristic was inconclusive");

    m.def("dim_c_dual",
          [](const std::string& name) { return isotropy::dim_c_dual(build(name)); });

    m.def(
        "weyl_dim",
        [](const std::string& spec, const rootsys::Weight& lam) {
            return repcalc::weyl_dim(rootsys::build_root_system(spec), lam);
        },
        py::arg("root_system"), py::arg("weight"));

    m.def(
        "tensor_decompose",
        [](const std::string& spec, const rootsys::Weight& lam, const rootsys::Weight& mu) {
            auto rs = rootsys::build_root_system(spec);
            return decomposition_to_dict(repcalc::tensor_decompose(rs, lam, mu).terms);
        },
        py::arg("root_system"), py::arg("lam"), py::arg("mu"));

    m.def(
        "freudenthal_character",
        [](const std::string& spec, const rootsys::Weight& lam) {
            auto rs = rootsys::build_root_system(spec);
            py::dict out;
            for (const auto& [w, mult] : repcalc::freudenthal_character(rs, lam).sorted())
                out[py::tuple(py::cast(w))] = mult;
            return out;
        },
        py::arg("root_system"), py::arg("weight"));

    m.def(
        "branch",
        [](const std::string& name, const rootsys::Weight& nuhat) {
            auto e = build(name);
            return decomposition_to_dict(embed::branch(e, nuhat));
        },
        py::arg("embedding"), py::arg("nuhat"));

    m.def(
        "moment_polytope_slice",
        [](const std::string& name, const rootsys::Weight& nuhat, int64_t nmax) {
            auto e = build(name);
            py::list out;
            for (const auto& q : lrsg::moment_polytope_slice(e, nuhat, nmax)) {
                py::list row;
                for (const auto& x : q) row.append(rat_str(x));
                out.append(row);
            }
            return out;
        },
        py::arg("embedding"), py::arg("nuhat"), py::arg("nmax") = 3,
        "exact rational points mu/n, each coordinate as a fraction string");

    m.def(
        "generic_stabilizer_json",
        [](const std::string& name, const std::string& face, const std::string& actor, int trials,
           int64_t height, uint64_t seed) {
            auto e = build(name);
            auto f = face_of(e, face);
            auto rep = isotropy::generic_stabilizer(e, f, isotropy::actor_from_string(actor),
                                                    {trials, height, seed});
            return isotropy::stabilizer_report_to_json(e, f, actor, rep, std::nullopt);
        },
        py::arg("embedding"), py::arg("face"), py::arg("actor") = "L", py::arg("trials") = 5,
        py::arg("height") = 7, py::arg("seed") = 20240405);

    m.def(
        "all_faces_full",
        [](const std::string& name, int trials, int64_t height, uint64_t seed) {
            auto rep = isotropy::all_faces_full_check(build(name), {trials, height, seed});
            return py::make_tuple(rep.all_faces_full, rep.witness.has_value());
        },
        py::arg("embedding"), py::arg("trials") = 5, py::arg("height") = 7,
        py::arg("seed") = 20240405);

    m.def(
        "paper_flag_stabilizer_dim",
        [](const std::string& name) {
            auto e = build(name);
            auto rep = isotropy::flag_stabilizer(e, isotropy::paper_flag(e),
                                                 isotropy::AmbientAction::GDual);
            return rep.dim;
        },
        py::arg("embedding"));

    m.def(
        "check_all_json",
        [](const std::vector<std::string>& embeddings, int64_t bound, int trials, uint64_t seed) {
            checkall::Config cfg;
            cfg.embeddings = embeddings;
            cfg.bound_override = bound;
            cfg.trials = trials;
            cfg.seed = seed;
            auto rep = checkall::run_check_all(cfg);
            return py::make_tuple(rep.ok, rep.to_json());
        },
        py::arg("embeddings") = std::vector<std::string>{}, py::arg("bound") = -1,
        py::arg("trials") = 5, py::arg("seed") = 20240405);

    m.def("embedding_json",
          [](const std::string& name) { return embed::embedding_to_json(build(name)); });
}
