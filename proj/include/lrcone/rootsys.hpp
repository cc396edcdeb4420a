#pragma once

// Root systems of classical type A/B/C/D and finite products, with the face
// lattice of the dominant chamber and the attached Levi/parabolic
// combinatorics.  Weights are integer vectors in the fundamental-weight basis;
// root coordinates are recovered exactly through the inverse Cartan matrix.

#include <cstdint>
#include <string>
#include <vector>

#include "lrcone/exactq.hpp"

namespace lrcone::rootsys {

using Weight = std::vector<int64_t>;

struct WeightHash {
    size_t operator()(const Weight& w) const noexcept {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int64_t x : w) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct FactorSpec {
    char type;  // 'A', 'B', 'C', 'D'
    int rank;
    bool operator==(const FactorSpec& o) const { return type == o.type && rank == o.rank; }
};

struct PositiveRoot {
    std::vector<int64_t> root_coords;  // coefficients on the simple roots
    Weight fund_coords;                // pairings with the simple coroots
    int64_t height = 0;                // sum of root coordinates
};

class RootSystem {
  public:
    const std::vector<FactorSpec>& factors() const { return factors_; }
    int rank() const { return rank_; }
    const std::string& name() const { return name_; }

    // cartan(i, j) = <alpha_j, alpha_i^vee>
    int64_t cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<PositiveRoot>& positive_roots() const { return posroots_; }
    const Weight& rho() const { return rho_; }

    // simple root alpha_j expressed in fundamental coordinates (column j of
    // the Cartan matrix)
    const Weight& simple_root_fund(int j) const { return simple_fund_[j]; }

    // (alpha_j, alpha_j) up to one global scale; constant 2 on factors of
    // simply-laced type
    int64_t root_length_sq(int j) const { return dsym_[j]; }

    int factor_of_simple(int j) const { return simple_factor_[j]; }

    bool is_dominant(const Weight& w) const;
    Weight reflect(const Weight& w, int j) const;  // simple reflection s_j
    QVec to_root_coords(const Weight& w) const;    // rational in general

    // sum of the root coordinates of w; strictly monotone along the dominance
    // order, used to pick maximal weights
    Rat root_height(const Weight& w) const;

    Weight dominant_representative(const Weight& w) const;
    // dominant representative of w + rho with the sign of the chamber walk;
    // returns false when w + rho lies on a wall
    bool dominant_conjugate_shifted(const Weight& w, Weight& out, int& sign) const;

    Weight dual_weight(const Weight& w) const;  // -w0(w)

    std::vector<Weight> weyl_orbit(const Weight& dominant) const;

  private:
    friend RootSystem build_root_system(const std::vector<FactorSpec>& spec);

    std::vector<FactorSpec> factors_;
    std::string name_;
    int rank_ = 0;
    std::vector<std::vector<int64_t>> cartan_;
    std::vector<Weight> simple_fund_;
    std::vector<int64_t> dsym_;
    std::vector<int> simple_factor_;
    std::vector<PositiveRoot> posroots_;
    Weight rho_;
    exactq::QMat inv_cartan_;  // root coords = inv_cartan * fund coords
};

RootSystem build_root_system(const std::vector<FactorSpec>& spec);
RootSystem build_root_system(const std::string& spec);  // "A2", "A1xA1", "D4"
std::vector<FactorSpec> parse_root_spec(const std::string& spec);

// All dominant weights with every coordinate in [0, bound], in lexicographic
// order.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int64_t bound);

// A face of the dominant chamber: the span of the fundamental weights indexed
// by `support` (0-based).
struct Face {
    std::vector<int> support;  // sorted
    bool operator==(const Face& o) const { return support == o.support; }
    std::string to_string() const;
};

struct LeviData {
    Face face;
    std::vector<int> levi_simple_roots;         // j with <w_i, alpha_j^vee> = 0 for all i in support
    std::vector<PositiveRoot> levi_positive_roots;
    std::vector<PositiveRoot> pu_positive_roots;  // positive roots outside the Levi
    int semisimple_rank_of_D = 0;
};

LeviData levi_data(const RootSystem& rs, const Face& f);
std::vector<Face> enumerate_faces(const RootSystem& rs);

// exact count of positive roots per classical factor type
int64_t classical_positive_root_count(const FactorSpec& f);

}  // namespace lrcone::rootsys
