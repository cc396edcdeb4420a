#pragma once

// Character-level representation computations: Weyl dimensions, Freudenthal
// weight multiplicities, Klimyk tensor decomposition and decomposition of
// arbitrary module characters by repeated extraction of a maximal dominant
// weight.  Everything is exact; multiplicities are 64-bit (desk-scale modules
// stay far below the limit and dimension checks would catch an overflow).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lrcone/rootsys.hpp"

namespace lrcone::repcalc {

using rootsys::RootSystem;
using rootsys::Weight;
using rootsys::WeightHash;

struct NotModuleCharacter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CharacterMultiset {
  public:
    using Terms = std::unordered_map<Weight, int64_t, WeightHash>;

    CharacterMultiset() = default;

    void add(const Weight& w, int64_t mult);
    const Terms& terms() const { return terms_; }
    int64_t multiplicity(const Weight& w) const;
    int64_t total_dimension() const;
    bool empty() const { return terms_.empty(); }

    // deterministic view
    std::map<Weight, int64_t> sorted() const { return {terms_.begin(), terms_.end()}; }

  private:
    Terms terms_;
};

struct DecompositionResult {
    std::map<Weight, int64_t> terms;  // dominant weight -> multiplicity > 0
    int64_t total_dimension(const RootSystem& rs) const;
};

// Integer matrix from one weight lattice to another, acting on coordinate
// vectors.  Restriction maps Xi(That) -> Xi(T) live here.
struct WeightMap {
    std::vector<std::vector<int64_t>> rows;  // out_dim x in_dim
    size_t out_dim() const { return rows.size(); }
    size_t in_dim() const { return rows.empty() ? 0 : rows[0].size(); }
    Weight apply(const Weight& w) const;
    size_t rank() const;
};

int64_t weyl_dim(const RootSystem& rs, const Weight& lam);

// Full weight multiset of the irreducible with highest weight lam
// (Freudenthal recursion on the dominant weights, then Weyl-orbit spreading).
CharacterMultiset freudenthal_character(const RootSystem& rs, const Weight& lam);

// Freudenthal with a process-wide memo keyed by (rs.name, lam); safe to call
// concurrently.
const CharacterMultiset& freudenthal_character_cached(const RootSystem& rs, const Weight& lam);

// V_lam (x) V_mu via Klimyk's formula.
DecompositionResult tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu);

// Decompose the character of a genuine finite-dimensional module by repeated
// extraction of a maximal dominant weight.  Throws NotModuleCharacter when
// the input is not a module character.
DecompositionResult brauer_decompose(const RootSystem& rs, const CharacterMultiset& ch);

// Pushforward of a character along an integer lattice map.
CharacterMultiset restrict_character(const WeightMap& wm, const CharacterMultiset& ch);

// Pointwise product (character of the tensor product).
CharacterMultiset character_product(const CharacterMultiset& a, const CharacterMultiset& b);

}  // namespace lrcone::repcalc
