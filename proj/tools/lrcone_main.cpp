// Command-line front end: reproducible enumeration, defect reports and the
// cross-validation suite.  Exit codes: 0 success, 1 usage error, 2 failed
// invariant or check.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lrcone/checkall.hpp"
#include "lrcone/isotropy.hpp"
#include "lrcone/lrsemigroup.hpp"

using namespace lrcone;

namespace {

constexpr uint64_t kDefaultSeed = 20240405;

std::string resolve_out(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    const char* base = std::getenv("LRCONE_OUT_DIR");
    if (p.is_relative() && base && *base) p = std::filesystem::path(base) / p;
    return p.string();
}

void write_or_print(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::string path = resolve_out(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Littlewood-Richardson semigroups, face defects and "
                 "their geometric cross-checks"};
    app.require_subcommand(1);

    std::string embedding, face_spec, out, format = "json", actor = "L", sample_path,
                nuhat_spec;
    int64_t bound = -1, nmax = 3, height = 7;
    int trials = 5, threads = 0, samples = 3;
    uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* cmd, bool with_embedding = true) {
        if (with_embedding) cmd->add_option("--embedding", embedding, "catalog name")->required();
        cmd->add_option("--out", out, "output file (default: stdout; relative paths use $LRCONE_OUT_DIR)");
        cmd->add_option("--seed", seed, "seed for all randomized sampling");
        cmd->add_option("--h", height, "sampling height: integer coordinates in [-h, h]")
            ->check(CLI::PositiveNumber);
    };

    auto* c_enum = app.add_subcommand("enumerate", "enumerate the semigroup up to a bound");
    add_common(c_enum);
    c_enum->add_option("--bound", bound, "coordinate bound for nuhat")->required();
    c_enum->add_option("--threads", threads, "worker threads (0 = hardware)");
    c_enum->add_option("--format", format, "json or csv");

    auto* c_delta = app.add_subcommand("delta", "face defect, direct and theoretical");
    add_common(c_delta);
    c_delta->add_option("--face", face_spec,
                        "comma-separated 1-based simple-root indices; empty = zero face; 'full'");
    c_delta->add_option("--bound", bound, "enumeration bound (default: per embedding)");
    c_delta->add_option("--trials", trials, "sampling trials")->check(CLI::PositiveNumber);
    c_delta->add_option("--threads", threads, "worker threads");

    auto* c_kernel = app.add_subcommand("kernel-dim", "torus-kernel dimension of uhat/u and the "
                                                      "predicted dim C");
    add_common(c_kernel);

    auto* c_stab = app.add_subcommand("stabilizer", "generic stabilizer on the face model");
    add_common(c_stab);
    c_stab->add_option("--face", face_spec, "face spec");
    c_stab->add_option("--actor", actor, "L, BL or D");
    c_stab->add_option("--trials", trials, "sampling trials")->check(CLI::PositiveNumber);

    auto* c_flags = app.add_subcommand("flags-paper", "stabilizers of the deterministic flag "
                                                      "fixtures");
    add_common(c_flags);

    auto* c_polmom = app.add_subcommand("polmom", "moment-polytope codimension identity");
    add_common(c_polmom);
    c_polmom->add_option("--face", face_spec, "face spec");
    c_polmom->add_option("--samples", samples, "number of interior weights");
    c_polmom->add_option("--bound", bound, "coordinate bound for the sampled weights");
    c_polmom->add_option("--nmax", nmax, "slice depth");

    auto* c_all = app.add_subcommand("check-all", "run the full cross-validation suite");
    add_common(c_all, false);
    c_all->add_option("--embedding", embedding, "restrict to one embedding");
    c_all->add_option("--bound", bound, "override the per-embedding bound");
    c_all->add_option("--trials", trials, "sampling trials");
    c_all->add_option("--threads", threads, "worker threads");
    c_all->add_option("--sample", sample_path, "validate a stored sample file instead");
    c_all->add_option("--format", format, "text or json");

    auto* c_dump = app.add_subcommand("dump-embedding", "JSON view of a catalog embedding");
    add_common(c_dump);

    CLI11_PARSE(app, argc, argv);

    if (c_enum->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        auto s = lrsg::enumerate_semigroup(e, bound, threads);
        write_or_print(out, format == "csv" ? lrsg::sample_to_csv(s) : lrsg::sample_to_json(s));
        return 0;
    }
    if (c_delta->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        rootsys::Face f = lrsg::parse_face_spec(e, face_spec);
        auto s = lrsg::enumerate_semigroup(e, bound >= 0 ? bound : embed::default_bound(e), threads);
        auto dd = lrsg::delta_direct(s, f);
        auto dt = isotropy::delta_theoretical(e, f, {trials, height, seed});
        std::ostringstream os;
        os << "embedding " << e.name << ", face " << f.to_string() << "\n";
        os << "delta_direct      = " << dd.delta
           << (dd.saturated ? "" : "   [warning: not saturated, upper bound only]") << "\n";
        os << "delta_theoretical = ";
        if (dt.value)
            os << *dt.value;
        else
            os << "needs reductive refinement";
        os << "\n";
        os << "saturated = " << (dd.saturated ? "true" : "false") << ", dim C = " << dd.dim_c
           << ", dim C_F = " << dd.dim_cf << "\n";
        write_or_print(out, os.str());
        return 0;
    }
    if (c_kernel->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        size_t ker = isotropy::dim_c_dual(e);
        std::ostringstream os;
        os << "embedding " << e.name << "\n";
        os << "dim Ker_T(uhat/u) = " << ker << "\n";
        os << "predicted dim C   = " << e.g_full_rank() + e.ghat_full_rank() - ker << "\n";
        write_or_print(out, os.str());
        return 0;
    }
    if (c_stab->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        rootsys::Face f = lrsg::parse_face_spec(e, face_spec);
        auto rep = isotropy::generic_stabilizer(e, f, isotropy::actor_from_string(actor),
                                                {trials, height, seed});
        write_or_print(out, isotropy::stabilizer_report_to_json(e, f, actor, rep, std::nullopt));
        return 0;
    }
    if (c_flags->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        if (!isotropy::has_paper_flag(e.name)) {
            std::cerr << "no deterministic flag fixture for " << e.name << "\n";
            return 1;
        }
        auto flag = isotropy::paper_flag(e);
        auto stab = isotropy::flag_stabilizer(e, flag, isotropy::AmbientAction::GDual);
        auto completed = isotropy::complete_flag(flag);
        auto stab_full = isotropy::flag_stabilizer(e, completed, isotropy::AmbientAction::GDual);
        std::ostringstream os;
        os << "embedding " << e.name << "\n";
        os << "paper flag members: " << flag.subspaces.size()
           << ", stabilizer dim = " << stab.dim << "\n";
        os << "completed to a full flag: stabilizer dim = " << stab_full.dim << "\n";
        write_or_print(out, os.str());
        return stab.dim == 0 ? 0 : 2;
    }
    if (c_polmom->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        rootsys::Face f = lrsg::parse_face_spec(e, face_spec);
        auto rep = lrsg::polmom_check(e, f, samples, bound >= 0 ? bound : 2, nmax);
        std::ostringstream os;
        os << "embedding " << e.name << ", face " << f.to_string() << "\n";
        os << "hypothesis <C> = Xi(T) x Xi(That): " << (rep.hypothesis_ok ? "ok" : "violated")
           << "\n";
        if (!rep.message.empty()) os << rep.message << "\n";
        for (const auto& sr : rep.samples) {
            os << "nuhat = [";
            for (size_t i = 0; i < sr.nuhat.size(); ++i) os << (i ? "," : "") << sr.nuhat[i];
            os << "]: dim P = " << sr.dim_p << ", dim P cap F = " << sr.dim_pf << ", "
               << (sr.in_window ? (sr.identity_holds ? "identity holds" : "identity FAILS")
                                : "outside the generic window")
               << "\n";
        }
        write_or_print(out, os.str());
        return rep.hypothesis_ok && rep.ok ? 0 : 2;
    }
    if (c_all->parsed()) {
        if (!sample_path.empty()) {
            std::ifstream in(sample_path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot read sample file " << sample_path << "\n";
                return 1;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            lrsg::SemigroupSample s;
            try {
                s = lrsg::sample_from_json(buf.str());
            } catch (const std::exception& ex) {
                std::cerr << "sample file is not parseable: " << ex.what() << "\n";
                return 2;
            }
            embed::Embedding e = embed::build_embedding(s.embedding);
            std::string msg;
            if (!lrsg::validate_sample(e, s, &msg)) {
                std::cerr << "sample integrity failure: " << msg << "\n";
                return 2;
            }
            std::cout << "sample integrity ok (" << s.points.size() << " points)\n";
            return 0;
        }
        checkall::Config cfg;
        cfg.bound_override = bound;
        cfg.trials = trials;
        cfg.height = height;
        cfg.seed = seed;
        cfg.threads = threads;
        if (!embedding.empty()) cfg.embeddings = {embedding};
        auto rep = checkall::run_check_all(cfg);
        write_or_print(out, format == "json" ? rep.to_json() : rep.to_text());
        return rep.ok ? 0 : 2;
    }
    if (c_dump->parsed()) {
        embed::Embedding e = embed::build_embedding(embedding);
        write_or_print(out, embed::embedding_to_json(e));
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
