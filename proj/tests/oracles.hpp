#pragma once

// Test-only oracles, kept independent of the library's character pipeline.
// Characters here come from the Weyl character formula evaluated by exact
// sparse Laurent division over the weight lattice; decompositions come from
// greedy subtraction of oracle characters.  Usable at small rank only (the
// whole Weyl group is enumerated).

#include <map>
#include <stdexcept>
#include <vector>

#include "lrcone/repcalc.hpp"
#include "lrcone/rootsys.hpp"

namespace lrcone::oracle {

using rootsys::RootSystem;
using rootsys::Weight;

struct SignedWeylElement {
    std::vector<std::vector<int64_t>> mat;  // action on fundamental coords
    int sign;
};

inline std::vector<SignedWeylElement> enumerate_weyl_group(const RootSystem& rs) {
    const int n = rs.rank();
    auto apply = [&](const std::vector<std::vector<int64_t>>& m, const Weight& w) {
        Weight out(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i] += m[i][j] * w[j];
        return out;
    };
    std::vector<std::vector<std::vector<int64_t>>> refl(n);
    for (int j = 0; j < n; ++j) {
        auto& s = refl[j];
        s.assign(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i) s[i][i] = 1;
        for (int i = 0; i < n; ++i) s[i][j] -= rs.cartan(i, j);
    }
    std::map<std::vector<std::vector<int64_t>>, int> seen;
    std::vector<SignedWeylElement> queue;
    std::vector<std::vector<int64_t>> id(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    seen[id] = 1;
    queue.push_back({id, 1});
    for (size_t q = 0; q < queue.size(); ++q) {
        auto cur = queue[q];
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<int64_t>> prod(n, std::vector<int64_t>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) prod[i][k] += refl[j][i][l] * cur.mat[l][k];
            if (seen.emplace(prod, 1).second) queue.push_back({prod, -cur.sign});
        }
    }
    (void)apply;
    return queue;
}

using Laurent = std::map<Weight, int64_t>;

inline Weight act(const std::vector<std::vector<int64_t>>& m, const Weight& w) {
    Weight out(w.size(), 0);
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j) out[i] += m[i][j] * w[j];
    return out;
}

// Character of V_lam as sum_w sgn(w) e^{w(lam+rho)} divided by the same sum
// for lam = 0, via exact sparse division ordered by (root height, lex).
inline Laurent weyl_character(const RootSystem& rs, const Weight& lam) {
    if (!rs.is_dominant(lam)) throw std::invalid_argument("oracle: non-dominant weight");
    auto weyl = enumerate_weyl_group(rs);
    auto signed_orbit_sum = [&](const Weight& v) {
        Laurent out;
        for (const auto& e : weyl) out[act(e.mat, v)] += e.sign;
        for (auto it = out.begin(); it != out.end();)
            it = (it->second == 0) ? out.erase(it) : std::next(it);
        return out;
    };
    Weight lam_rho = lam, rho = rs.rho();
    for (size_t i = 0; i < lam_rho.size(); ++i) lam_rho[i] += 1;
    Laurent num = signed_orbit_sum(lam_rho);
    Laurent den = signed_orbit_sum(rho);

    auto height_key = [&](const Weight& w) { return rs.root_height(w); };
    auto max_term = [&](const Laurent& p) {
        auto best = p.begin();
        Rat best_h = height_key(best->first);
        for (auto it = std::next(p.begin()); it != p.end(); ++it) {
            Rat h = height_key(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        return best;
    };

    auto den_lead = max_term(den);  // e^rho with coefficient 1
    if (den_lead->first != rho || den_lead->second != 1)
        throw std::logic_error("oracle: unexpected denominator leading term");

    Laurent quot;
    while (!num.empty()) {
        auto lead = max_term(num);
        Weight shift(lead->first.size());
        for (size_t i = 0; i < shift.size(); ++i) shift[i] = lead->first[i] - rho[i];
        int64_t c = lead->second;
        quot[shift] += c;
        for (const auto& [w, m] : den) {
            Weight ww(w.size());
            for (size_t i = 0; i < w.size(); ++i) ww[i] = w[i] + shift[i];
            auto it = num.find(ww);
            int64_t cur = (it == num.end()) ? 0 : it->second;
            int64_t nxt = cur - c * m;
            if (nxt == 0) {
                if (it != num.end()) num.erase(it);
            } else {
                num[ww] = nxt;
            }
        }
    }
    return quot;
}

inline Laurent laurent_product(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            Weight w(wa.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out[w] += ma * mb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// Greedy decomposition of a Weyl-invariant positive character using oracle
// characters only.
inline std::map<Weight, int64_t> decompose_by_oracle(const RootSystem& rs, Laurent ch) {
    std::map<Weight, int64_t> out;
    while (!ch.empty()) {
        Weight best;
        bool found = false;
        Rat best_h = 0;
        for (const auto& [w, m] : ch) {
            if (!rs.is_dominant(w)) continue;
            Rat h = rs.root_height(w);
            if (!found || h > best_h || (h == best_h && w > best)) {
                best = w;
                best_h = h;
                found = true;
            }
        }
        if (!found) throw std::logic_error("oracle decompose: no dominant weight left");
        int64_t c = ch.at(best);
        if (c <= 0) throw std::logic_error("oracle decompose: nonpositive leading multiplicity");
        out[best] = c;
        Laurent vb = weyl_character(rs, best);
        for (const auto& [w, m] : vb) {
            int64_t nxt = ch[w] - c * m;
            if (nxt == 0)
                ch.erase(w);
            else
                ch[w] = nxt;
        }
    }
    return out;
}

}  // namespace lrcone::oracle
