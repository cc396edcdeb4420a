#pragma once

// Geometric side of the cross-validation: torus-kernel dimensions, exact
// stabilizer subalgebras of flags, and generic reductive-isotropy dimensions
// on the model variety  puhat/pu x Dhat/B_Dhat.  Genericity is reached by
// sampling integer points and exact products of exponentials of nilpotent
// root vectors; every individual solve is exact, and stabilizer dimension is
// upper semicontinuous, so the minimum over trials attains the generic value.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcone/embed.hpp"

namespace lrcone::isotropy {

using embed::Embedding;
using embed::ParabolicData;
using exactq::QMat;
using exactq::Subspace;
using rootsys::Face;
using rootsys::Weight;

struct StabilizerReport {
    std::string point_description;
    std::vector<QMat> basis;  // subalgebra basis, exact matrices
    Subspace subalgebra;      // the same space, vectorized
    size_t dim = 0;
    std::optional<size_t> reductive_dim;  // nullopt = heuristic inconclusive
    int samples_used = 0;
    std::vector<size_t> trial_dims;
};

struct FlagPoint {
    int ambient_dim = 0;
    std::vector<Subspace> subspaces;  // strictly increasing chain
};

FlagPoint make_flag(int ambient_dim, const std::vector<std::vector<QVec>>& generators_per_step);
void validate_flag(const FlagPoint& f);

// dimension of the connected kernel of a torus of the given rank acting with
// the given weights
size_t torus_kernel_dim(int rank, const std::vector<Weight>& weights);

// dim of the kernel of T on uhat/u (parabolic data at the full face); the
// span of C then has dimension rank(T) + rank(That) - this value
size_t dim_c_dual(const Embedding& e);

enum class AmbientAction { G, GDual, Ghat, GhatDual };
enum class Actor { L, BL, D };

const char* actor_name(Actor a);
Actor actor_from_string(const std::string& s);

// {X in the acting Lie algebra : X W_i subset W_i for every chain member}
StabilizerReport flag_stabilizer(const Embedding& e, const FlagPoint& flag, AmbientAction act);

struct SampleConfig {
    int trials = 5;
    int64_t height = 7;  // integer coordinates drawn from [-height, height]
    uint64_t seed = 20240405;
};

StabilizerReport generic_stabilizer(const Embedding& e, const Face& f, Actor actor,
                                    const SampleConfig& cfg);

struct DeltaTheoreticalResult {
    std::optional<int64_t> value;  // nullopt = needs reductive refinement
    StabilizerReport l_report, bl_report;
};

DeltaTheoreticalResult delta_theoretical(const Embedding& e, const Face& f, const SampleConfig& cfg);

struct FullCheckReport {
    bool all_faces_full = false;
    StabilizerReport generic;               // sampled route at the face {0}
    std::optional<FlagPoint> witness;       // exact witness flag when full
    bool witness_deterministic = false;     // witness is a completed paper flag
    std::optional<size_t> witness_stab_dim;
};

FullCheckReport all_faces_full_check(const Embedding& e, const SampleConfig& cfg);

// Explicit flags with finite isotropy, in the dual of the defining module.
FlagPoint paper_flag_sym2(int n);
FlagPoint paper_flag_wedge2(int n);  // n >= 4, even or odd
bool has_paper_flag(const std::string& embedding_name);
FlagPoint paper_flag(const Embedding& e);

// completion of a partial flag to a full flag by standard basis vectors
FlagPoint complete_flag(const FlagPoint& partial);

std::string stabilizer_report_to_json(const Embedding& e, const Face& f, const std::string& actor,
                                      const StabilizerReport& rep,
                                      const std::optional<FlagPoint>& witness);

}  // namespace lrcone::isotropy
