#pragma once

// Catalog of embeddings G in Ghat: diagonal embeddings of classical groups,
// Sl(V) in Sl(S^2 V), Sl(V) in Sl(Lambda^2 V) and Gl(E) x Gl(F) in
// Gl(E (x) F).  Each entry carries the torus weight-restriction map, exact
// matrix realizations of Lie(G) inside Lie(Ghat) on the defining Ghat-module,
// and the compatible parabolic data attached to a face of the dominant
// chamber of G.
//
// Determinant directions of the Gl cases live as extra rank-1 lattice
// coordinates appended after the fundamental coordinates; matrices stay
// inside the special linear parts throughout.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrcone/exactq.hpp"
#include "lrcone/repcalc.hpp"
#include "lrcone/rootsys.hpp"

namespace lrcone::embed {

using exactq::QMat;
using repcalc::WeightMap;
using rootsys::Face;
using rootsys::RootSystem;
using rootsys::Weight;

struct RootVectorRealization {
    Weight weight;  // full lattice coordinates of the owning group
    QMat mat;       // action on the defining Ghat-module
    size_t posroot_index = 0;
    bool positive = true;
};

struct LieRealization {
    std::vector<RootVectorRealization> pos, neg;  // aligned with positive_roots()
    std::vector<QMat> coroots;                    // one per simple root
};

class Embedding {
  public:
    std::string name;
    RootSystem g, ghat;
    int g_central = 0, ghat_central = 0;
    int ambient = 0;

    LieRealization gre, ghre;
    WeightMap wm;  // full Ghat coordinates -> full G coordinates

    std::vector<Weight> ambient_ghat_weights;  // per basis vector, full Ghat coords
    std::vector<Weight> ambient_g_weights;     // = wm applied

    // functional on full Ghat coordinates that is constant on each
    // irreducible module and has nonzero coefficient on the central
    // coordinate; empty when ghat_central == 0
    std::vector<int64_t> ghat_deg_row;

    // per central coordinate of G: a degree functional on full G coordinates
    // (constant on each irreducible constituent, touching exactly one central
    // coordinate) and the row over full Ghat coordinates giving its value on
    // the restriction of V_nuhat
    std::vector<std::vector<int64_t>> g_deg_rows;
    std::vector<std::vector<int64_t>> g_deg_value_rows;

    // corank of wm: 0 when the embedded maximal torus has full rank, 1 for
    // the tensor case where the two determinant directions meet in Ghat
    int wm_corank = 0;

    int g_full_rank() const { return g.rank() + g_central; }
    int ghat_full_rank() const { return ghat.rank() + ghat_central; }

    Weight g_classical(const Weight& full) const {
        return Weight(full.begin(), full.begin() + g.rank());
    }
    Weight ghat_classical(const Weight& full) const {
        return Weight(full.begin(), full.begin() + ghat.rank());
    }

    bool g_dominant(const Weight& full) const;
    bool ghat_dominant(const Weight& full) const;

    // full coordinates of the positive g-roots (classical coordinates plus
    // their canonical central lift), aligned with g.positive_roots()
    const std::vector<Weight>& g_posroot_full() const { return g_posroot_full_; }

    std::vector<Weight> g_posroot_full_;
};

// instantiator grammar of the catalog
std::vector<std::string> catalog();
// the concrete desk-scale entries exercised by the cross-validation suite
std::vector<std::string> desk_catalog();

Embedding build_embedding(const std::string& name);

// default enumeration bound by the rank of Ghat (spans of the cone stabilize
// quickly at desk scale)
int64_t default_bound(const Embedding& e);

int64_t g_weyl_dim(const Embedding& e, const Weight& mu_full);
int64_t ghat_weyl_dim(const Embedding& e, const Weight& nuhat_full);

// dominant weights of Ghat with every coordinate (central ones included) in
// [0, bound], lexicographic
std::vector<Weight> dominant_nuhat_up_to(const Embedding& e, int64_t bound);

// restriction of V_nuhat to G: full-coordinate dominant weights of G with
// multiplicities; dimension conservation is asserted
std::map<Weight, int64_t> branch(const Embedding& e, const Weight& nuhat_full);

struct ParabolicData {
    Face face;
    rootsys::LeviData levi;
    QVec lambda_row_classical;  // cocharacter functional on classical g coords

    std::vector<QMat> pu, puhat;
    std::vector<Weight> pu_weights, puhat_weights;  // T-weights, full g coords
    std::vector<Weight> t_weights_on_puhat_mod_pu;  // sorted multiset

    std::vector<QMat> levi_l, borel_bl, d_mats;

    // the big Levi Lhat = centralizer of the center of L, its derived part
    // Dhat and the Borel of Dhat containing B_D
    std::vector<QMat> dhat_borel;
    std::vector<RootVectorRealization> dhat_roots;  // all root vectors of Dhat
    std::vector<QMat> shat;                         // Lie(Shat), center of Lie(Lhat)
};

ParabolicData parabolic_data(const Embedding& e, const Face& f);

// Pair-compatible construction for nested faces: the cocharacter of the
// larger face is taken inside the closure of the chamber of the smaller
// face's cocharacter, which forces Phat(large) inside Phat(small), i.e.
// puhat(small) inside puhat(large).
struct CompatiblePair {
    ParabolicData small, large;  // small face, large face
};
CompatiblePair compatible_parabolic_pair(const Embedding& e, const Face& f1, const Face& f2);

std::string embedding_to_json(const Embedding& e);

// defining representation of one classical factor: Chevalley generators as
// exact matrices together with the basis weights read off the (diagonal)
// Cartan generators
struct DefiningRep {
    int dim = 0;
    std::vector<QMat> e, f, h;
};
DefiningRep defining_rep(const rootsys::FactorSpec& f);

}  // namespace lrcone::embed
