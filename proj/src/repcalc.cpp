#include "lrcone/repcalc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace lrcone::repcalc {

void CharacterMultiset::add(const Weight& w, int64_t mult) {
    if (mult == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

int64_t CharacterMultiset::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

int64_t CharacterMultiset::total_dimension() const {
    int64_t t = 0;
    for (const auto& [w, m] : terms_) t += m;
    return t;
}

int64_t DecompositionResult::total_dimension(const RootSystem& rs) const {
    int64_t t = 0;
    for (const auto& [w, m] : terms) t += m * weyl_dim(rs, w);
    return t;
}

Weight WeightMap::apply(const Weight& w) const {
    if (w.size() != in_dim()) throw std::invalid_argument("WeightMap: coordinate size mismatch");
    Weight out(out_dim(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        int64_t s = 0;
        for (size_t j = 0; j < w.size(); ++j) s += rows[i][j] * w[j];
        out[i] = s;
    }
    return out;
}

size_t WeightMap::rank() const { return exactq::rank(exactq::QMat::from_int_rows(rows)); }

namespace {

// 2*(w, beta) for a weight w in fundamental coordinates and a root beta in
// root coordinates, with the W-invariant form normalized so that long roots
// of simply-laced factors have squared length 2.
int64_t ip2(const RootSystem& rs, const Weight& w, const std::vector<int64_t>& root_coords) {
    int64_t s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += rs.root_length_sq(j) * w[j] * root_coords[j];
    return s;
}

void require_dominant(const RootSystem& rs, const Weight& lam, const char* who) {
    if (!rs.is_dominant(lam)) throw std::invalid_argument(std::string(who) + ": weight is not dominant");
}

}  // namespace

int64_t weyl_dim(const RootSystem& rs, const Weight& lam) {
    require_dominant(rs, lam, "weyl_dim");
    Weight lam_rho(lam);
    for (auto& x : lam_rho) x += 1;
    Rat dim = 1;
    for (const auto& a : rs.positive_roots()) {
        int64_t num = ip2(rs, lam_rho, a.root_coords);
        int64_t den = ip2(rs, rs.rho(), a.root_coords);
        dim *= Rat(num, den);
    }
    if (rat_den(dim) != 1) throw std::logic_error("weyl_dim: non-integer result");
    Int n = rat_num(dim);
    if (n > Int(INT64_MAX)) throw std::overflow_error("weyl_dim: dimension exceeds int64 range");
    return static_cast<int64_t>(n);
}

namespace {

// Dominant weights mu with lam - mu in the nonnegative root lattice, together
// with the root coordinates of lam - mu.
struct DominantCandidate {
    Weight mu;
    std::vector<int64_t> drop;  // root coords of lam - mu
    int64_t drop_height;
};

std::vector<DominantCandidate> dominant_candidates(const RootSystem& rs, const Weight& lam) {
    const int n = rs.rank();
    Weight dual = rs.dual_weight(lam);
    Weight span(lam);
    for (int i = 0; i < n; ++i) span[i] += dual[i];  // lam - w0(lam)
    QVec cmax_q = rs.to_root_coords(span);
    std::vector<int64_t> cmax(n);
    for (int i = 0; i < n; ++i) {
        if (rat_den(cmax_q[i]) != 1) throw std::logic_error("dominant_candidates: non-integral bound");
        cmax[i] = static_cast<int64_t>(rat_num(cmax_q[i]));
    }
    std::vector<DominantCandidate> out;
    std::vector<int64_t> c(n, 0);
    Weight mu = lam;
    // odometer over 0 <= c <= cmax with mu = lam - sum c_j alpha_j maintained
    while (true) {
        bool dom = true;
        for (int i = 0; i < n; ++i)
            if (mu[i] < 0) { dom = false; break; }
        if (dom) {
            int64_t h = 0;
            for (int64_t x : c) h += x;
            out.push_back({mu, c, h});
        }
        int i = n - 1;
        while (i >= 0 && c[i] == cmax[i]) {
            for (int k = 0; k < n; ++k) mu[k] += c[i] * rs.cartan(k, i);
            c[i] = 0;
            --i;
        }
        if (i < 0) break;
        c[i] += 1;
        for (int k = 0; k < n; ++k) mu[k] -= rs.cartan(k, i);
    }
    std::sort(out.begin(), out.end(), [](const DominantCandidate& a, const DominantCandidate& b) {
        if (a.drop_height != b.drop_height) return a.drop_height < b.drop_height;
        return a.drop < b.drop;
    });
    return out;
}

}  // namespace

CharacterMultiset freudenthal_character(const RootSystem& rs, const Weight& lam) {
    require_dominant(rs, lam, "freudenthal_character");
    const int n = rs.rank();
    auto cands = dominant_candidates(rs, lam);
    std::unordered_map<Weight, int64_t, WeightHash> dom_mult;
    dom_mult.reserve(cands.size() * 2);

    Weight two_rho_lam(lam);  // lam + mu + 2 rho, updated per candidate
    for (const auto& cand : cands) {
        if (cand.drop_height == 0) {
            dom_mult[cand.mu] = 1;
            continue;
        }
        const Weight& mu = cand.mu;
        __int128 rhs = 0;
        for (const auto& a : rs.positive_roots()) {
            Weight nu = mu;
            for (int k = 1;; ++k) {
                for (int i = 0; i < n; ++i) nu[i] += a.fund_coords[i];
                Weight dom = rs.dominant_representative(nu);
                auto it = dom_mult.find(dom);
                if (it == dom_mult.end()) break;
                rhs += static_cast<__int128>(it->second) * ip2(rs, nu, a.root_coords);
            }
        }
        rhs *= 2;
        for (int i = 0; i < n; ++i) two_rho_lam[i] = lam[i] + mu[i] + 2;
        int64_t denom = ip2(rs, two_rho_lam, cand.drop);
        if (denom <= 0) throw std::logic_error("freudenthal_character: nonpositive denominator");
        if (rhs % denom != 0) throw std::logic_error("freudenthal_character: inexact division");
        __int128 m = rhs / denom;
        if (m < 0 || m > INT64_MAX) throw std::overflow_error("freudenthal_character: multiplicity overflow");
        if (m > 0) dom_mult[mu] = static_cast<int64_t>(m);
    }

    CharacterMultiset ch;
    for (const auto& [mu, m] : dom_mult)
        for (const auto& w : rs.weyl_orbit(mu)) ch.add(w, m);
    return ch;
}

const CharacterMultiset& freudenthal_character_cached(const RootSystem& rs, const Weight& lam) {
    struct Key {
        std::string rs_name;
        Weight lam;
        bool operator==(const Key& o) const { return rs_name == o.rs_name && lam == o.lam; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            return std::hash<std::string>()(k.rs_name) * 31 + WeightHash()(k.lam);
        }
    };
    static std::mutex mu;
    static std::unordered_map<Key, std::unique_ptr<CharacterMultiset>, KeyHash> cache;
    Key key{rs.name(), lam};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto ch = std::make_unique<CharacterMultiset>(freudenthal_character(rs, lam));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(ch));
    return *it->second;
}

DecompositionResult tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu) {
    require_dominant(rs, lam, "tensor_decompose");
    require_dominant(rs, mu, "tensor_decompose");
    const CharacterMultiset& chmu = freudenthal_character_cached(rs, mu);
    std::map<Weight, int64_t> acc;
    for (const auto& [w, m] : chmu.terms()) {
        Weight shifted(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) shifted[i] = lam[i] + w[i];
        Weight dom;
        int sign;
        if (!rs.dominant_conjugate_shifted(shifted, dom, sign)) continue;
        acc[dom] += sign * m;
    }
    DecompositionResult out;
    for (const auto& [w, m] : acc) {
        if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
        if (m > 0) out.terms.emplace(w, m);
    }
    int64_t lhs = weyl_dim(rs, lam) * weyl_dim(rs, mu);
    if (out.total_dimension(rs) != lhs) throw std::logic_error("tensor_decompose: dimension mismatch");
    return out;
}

DecompositionResult brauer_decompose(const RootSystem& rs, const CharacterMultiset& ch) {
    CharacterMultiset::Terms rem = ch.terms();
    // dominant support ordered by (root height, lex); extraction always takes
    // the last entry, which is maximal for the dominance order
    std::map<std::pair<Rat, Weight>, int64_t> dominant;
    for (const auto& [w, m] : rem)
        if (rs.is_dominant(w)) dominant.emplace(std::make_pair(rs.root_height(w), w), m);

    DecompositionResult out;
    while (!rem.empty()) {
        if (dominant.empty())
            throw NotModuleCharacter("brauer_decompose: support lacks a dominant weight");
        auto top = std::prev(dominant.end());
        Weight lam = top->first.second;
        int64_t mult = top->second;
        if (mult < 0) throw NotModuleCharacter("brauer_decompose: negative multiplicity");
        const CharacterMultiset& chl = freudenthal_character_cached(rs, lam);
        for (const auto& [w, m] : chl.terms()) {
            auto it = rem.find(w);
            int64_t cur = (it == rem.end()) ? 0 : it->second;
            int64_t nxt = cur - mult * m;
            bool dom = rs.is_dominant(w);
            if (nxt == 0) {
                if (it != rem.end()) rem.erase(it);
                if (dom) dominant.erase(std::make_pair(rs.root_height(w), w));
            } else {
                rem[w] = nxt;
                if (dom) dominant[std::make_pair(rs.root_height(w), w)] = nxt;
            }
        }
        out.terms.emplace(lam, mult);
    }
    for (const auto& [w, m] : out.terms)
        if (m <= 0) throw NotModuleCharacter("brauer_decompose: nonpositive multiplicity");
    return out;
}

CharacterMultiset restrict_character(const WeightMap& wm, const CharacterMultiset& ch) {
    CharacterMultiset out;
    for (const auto& [w, m] : ch.terms()) out.add(wm.apply(w), m);
    return out;
}

CharacterMultiset character_product(const CharacterMultiset& a, const CharacterMultiset& b) {
    CharacterMultiset out;
    for (const auto& [wa, ma] : a.terms())
        for (const auto& [wb, mb] : b.terms()) {
            Weight w(wa.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out.add(w, ma * mb);
        }
    return out;
}

}  // namespace lrcone::repcalc
