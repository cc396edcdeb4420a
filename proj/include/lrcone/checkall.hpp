#pragma once

// Cross-validation driver: runs the whole catalog at desk scale and compares
// the combinatorial defect computation against the geometric one, face by
// face.  Used by the command-line front end and by the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "lrcone/isotropy.hpp"
#include "lrcone/lrsemigroup.hpp"

namespace lrcone::checkall {

struct Config {
    int64_t bound_override = -1;  // <0: per-embedding default
    int trials = 5;
    int64_t height = 7;
    uint64_t seed = 20240405;
    int threads = 0;
    std::vector<std::string> embeddings;  // empty: desk catalog
};

struct FaceRow {
    std::string face;
    int64_t delta_direct = 0;
    bool has_theoretical = false;
    int64_t delta_theoretical = 0;  // valid when has_theoretical
    size_t stab_l = 0, stab_bl = 0;
};

struct EmbeddingReport {
    std::string name;
    int64_t bound = 0;
    bool saturated = false;
    size_t dim_c = 0, dim_c_predicted = 0;
    size_t kernel_dim = 0;
    std::vector<FaceRow> faces;
    bool all_faces_full = false;
    bool has_witness = false;
    bool paper_flag_checked = false;
    size_t paper_flag_dim = 0;
    size_t unavailable_count = 0;
    std::vector<std::string> failures;  // empty = all checks passed
    std::vector<std::string> skipped;   // checks skipped for lack of saturation
};

struct Report {
    bool ok = false;
    std::vector<EmbeddingReport> embeddings;
    std::string polmom_summary;
    bool polmom_ok = false;
    std::string to_text() const;
    std::string to_json() const;
};

Report run_check_all(const Config& cfg);

}  // namespace lrcone::checkall
