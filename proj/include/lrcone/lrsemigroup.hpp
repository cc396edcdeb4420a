#pragma once

// Enumeration of the branching semigroup C up to a coordinate bound, exact
// span dimensions, the face defect delta_F computed directly from the
// definition, and moment-polytope slices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcone/embed.hpp"

namespace lrcone::lrsg {

using embed::Embedding;
using rootsys::Face;
using rootsys::Weight;

struct SemigroupPoint {
    Weight mu;     // full G coordinates
    Weight nuhat;  // full Ghat coordinates
    int64_t mult = 0;
    bool operator==(const SemigroupPoint& o) const {
        return mu == o.mu && nuhat == o.nuhat && mult == o.mult;
    }
};

struct SemigroupSample {
    std::string embedding;
    int64_t bound = 0;
    bool saturated = false;
    std::vector<SemigroupPoint> points;  // sorted by (nuhat, mu)

    // lattice bookkeeping carried along so queries need no embedding handle
    int g_classical_rank = 0, g_central = 0;
    int ghat_classical_rank = 0, ghat_central = 0;
    int g_full_rank() const { return g_classical_rank + g_central; }
    int ghat_full_rank() const { return ghat_classical_rank + ghat_central; }
};

// Branch every dominant nuhat with coordinates <= bound; fibers over distinct
// nuhat are independent and run on `threads` workers (0 = hardware default).
SemigroupSample enumerate_semigroup(const Embedding& e, int64_t bound, int threads = 0);

size_t dim_C(const SemigroupSample& s);
std::vector<SemigroupPoint> c_face(const SemigroupSample& s, const Face& f);

struct DeltaDirect {
    int64_t delta = 0;
    bool saturated = false;  // mirrored from the sample; unsaturated => upper bound only
    size_t dim_c = 0, dim_cf = 0, dim_f = 0, dim_xi = 0;
};
DeltaDirect delta_direct(const SemigroupSample& s, const Face& f);

// all mu/n with n <= nmax and (mu, n nuhat) in C, exact rational points
std::vector<QVec> moment_polytope_slice(const Embedding& e, const Weight& nuhat_full, int64_t nmax);

struct PolmomSampleReport {
    Weight nuhat;
    size_t dim_p = 0, dim_pf = 0;
    bool in_window = false;  // slice meets the face
    bool identity_holds = false;
};
struct PolmomReport {
    bool hypothesis_ok = false;  // <C> = Xi(T) x Xi(That), via the torus-kernel route
    bool face_full = false;      // delta_F = 0 at the default bound
    std::vector<PolmomSampleReport> samples;
    bool ok = false;  // identity holds on every in-window sample
    std::string message;
};
PolmomReport polmom_check(const Embedding& e, const Face& f, int samples, int64_t bound,
                          int64_t nmax = 3);

std::string sample_to_json(const SemigroupSample& s);
SemigroupSample sample_from_json(const std::string& text);
std::string sample_to_csv(const SemigroupSample& s);

// recompute every fiber present in the sample and compare; used by the
// integrity checks on files
bool validate_sample(const Embedding& e, const SemigroupSample& s, std::string* message);

Face parse_face_spec(const Embedding& e, const std::string& spec);

}  // namespace lrcone::lrsg
