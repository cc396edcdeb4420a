#include "lrcone/embed.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace lrcone::embed {

using exactq::Subspace;
using rootsys::FactorSpec;
using rootsys::WeightHash;

namespace {

QMat elementary(int n, int i, int j, int64_t c = 1) {
    QMat m(n, n);
    m.at(i, j) = c;
    return m;
}

}  // namespace

DefiningRep defining_rep(const FactorSpec& fs) {
    DefiningRep r;
    const int n = fs.rank;
    switch (fs.type) {
        case 'A': {
            r.dim = n + 1;
            for (int k = 0; k < n; ++k) {
                r.e.push_back(elementary(r.dim, k, k + 1));
                r.f.push_back(elementary(r.dim, k + 1, k));
            }
            break;
        }
        case 'B': {
            r.dim = 2 * n + 1;
            for (int k = 0; k + 1 < n; ++k) {
                r.e.push_back(elementary(r.dim, k, k + 1) - elementary(r.dim, 2 * n - 1 - k, 2 * n - k));
                r.f.push_back(elementary(r.dim, k + 1, k) - elementary(r.dim, 2 * n - k, 2 * n - 1 - k));
            }
            r.e.push_back(elementary(r.dim, n - 1, n) - elementary(r.dim, n, n + 1));
            r.f.push_back(elementary(r.dim, n, n - 1, 2) - elementary(r.dim, n + 1, n, 2));
            break;
        }
        case 'C': {
            r.dim = 2 * n;
            for (int k = 0; k + 1 < n; ++k) {
                r.e.push_back(elementary(r.dim, k, k + 1) - elementary(r.dim, 2 * n - 2 - k, 2 * n - 1 - k));
                r.f.push_back(elementary(r.dim, k + 1, k) - elementary(r.dim, 2 * n - 1 - k, 2 * n - 2 - k));
            }
            r.e.push_back(elementary(r.dim, n - 1, n));
            r.f.push_back(elementary(r.dim, n, n - 1));
            break;
        }
        case 'D': {
            r.dim = 2 * n;
            for (int k = 0; k + 1 < n; ++k) {
                r.e.push_back(elementary(r.dim, k, k + 1) - elementary(r.dim, 2 * n - 2 - k, 2 * n - 1 - k));
                r.f.push_back(elementary(r.dim, k + 1, k) - elementary(r.dim, 2 * n - 1 - k, 2 * n - 2 - k));
            }
            r.e.push_back(elementary(r.dim, n - 2, n) - elementary(r.dim, n - 1, n + 1));
            r.f.push_back(elementary(r.dim, n, n - 2) - elementary(r.dim, n + 1, n - 1));
            break;
        }
        default:
            throw std::invalid_argument("defining_rep: unknown type");
    }
    for (size_t k = 0; k < r.e.size(); ++k) r.h.push_back(exactq::bracket(r.e[k], r.f[k]));
    return r;
}

namespace {

// T-weight of a root vector, read off as the common difference of ambient
// weights over its nonzero entries.
Weight weight_of_root_matrix(const QMat& m, const std::vector<Weight>& ambient_weights) {
    bool found = false;
    Weight diff;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            Weight d(ambient_weights[i].size());
            for (size_t k = 0; k < d.size(); ++k) d[k] = ambient_weights[i][k] - ambient_weights[j][k];
            if (!found) {
                diff = d;
                found = true;
            } else if (d != diff) {
                throw std::logic_error("root vector is not a T-eigenvector");
            }
        }
    if (!found) throw std::logic_error("zero root vector");
    return diff;
}

LieRealization generate_realization(const RootSystem& rs, const std::vector<QMat>& e_mats,
                                    const std::vector<QMat>& f_mats,
                                    const std::vector<Weight>& ambient_weights) {
    LieRealization out;
    const auto& pos = rs.positive_roots();
    std::unordered_map<Weight, size_t, WeightHash> index;
    for (size_t k = 0; k < pos.size(); ++k) {
        Weight key(pos[k].root_coords.begin(), pos[k].root_coords.end());
        index.emplace(key, k);
    }
    out.pos.resize(pos.size());
    out.neg.resize(pos.size());
    for (size_t k = 0; k < pos.size(); ++k) {
        const auto& root = pos[k];
        QMat pmat, nmat;
        if (root.height == 1) {
            int j = 0;
            while (root.root_coords[j] == 0) ++j;
            pmat = e_mats[j];
            nmat = f_mats[j];
        } else {
            bool done = false;
            for (int j = 0; j < rs.rank() && !done; ++j) {
                if (root.root_coords[j] == 0) continue;
                Weight gamma(root.root_coords.begin(), root.root_coords.end());
                gamma[j] -= 1;
                auto it = index.find(gamma);
                if (it == index.end()) continue;
                if (out.pos[it->second].mat.rows() == 0) continue;  // not built yet
                QMat cand = exactq::bracket(e_mats[j], out.pos[it->second].mat);
                if (cand.is_zero()) continue;
                pmat = cand;
                nmat = exactq::bracket(f_mats[j], out.neg[it->second].mat);
                if (nmat.is_zero()) throw std::logic_error("negative root vector vanished");
                done = true;
            }
            if (!done) throw std::logic_error("could not generate root vector");
        }
        out.pos[k] = {weight_of_root_matrix(pmat, ambient_weights), pmat, k, true};
        out.neg[k] = {weight_of_root_matrix(nmat, ambient_weights), nmat, k, false};
    }
    for (size_t j = 0; j < e_mats.size(); ++j)
        out.coroots.push_back(exactq::bracket(e_mats[j], f_mats[j]));
    return out;
}

// weight of basis vector 0..N-1 of the defining module of Sl(N)/Gl(N) in
// fundamental coordinates (plus the trailing last-entry coordinate for Gl)
Weight sl_ambient_weight(int N, int k, bool with_central) {
    Weight w(N - 1 + (with_central ? 1 : 0), 0);
    if (k < N - 1) w[k] += 1;
    if (k > 0) w[k - 1] -= 1;
    if (with_central && k == N - 1) w[N - 1] = 1;
    return w;
}

struct PairBasis {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
};

PairBasis sym_pairs(int n) {
    PairBasis b;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            b.index[{i, j}] = static_cast<int>(b.pairs.size());
            b.pairs.push_back({i, j});
        }
    return b;
}

PairBasis wedge_pairs(int n) {
    PairBasis b;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b.index[{i, j}] = static_cast<int>(b.pairs.size());
            b.pairs.push_back({i, j});
        }
    return b;
}

// derivation action of X on S^2(k^n) in the basis e_i e_j, i <= j, lex order
QMat sym2_action(const QMat& x, const PairBasis& b) {
    const int N = static_cast<int>(b.pairs.size());
    const int n = static_cast<int>(x.rows());
    QMat out(N, N);
    for (int col = 0; col < N; ++col) {
        auto [i, j] = b.pairs[col];
        for (int k = 0; k < n; ++k) {
            if (x.at(k, i) != 0) {
                auto key = std::minmax(k, j);
                out.at(b.index.at({key.first, key.second}), col) += x.at(k, i);
            }
            if (x.at(k, j) != 0) {
                auto key = std::minmax(i, k);
                out.at(b.index.at({key.first, key.second}), col) += x.at(k, j);
            }
        }
    }
    return out;
}

// derivation action of X on Lambda^2(k^n) in the basis e_i ^ e_j, i < j
QMat wedge2_action(const QMat& x, const PairBasis& b) {
    const int N = static_cast<int>(b.pairs.size());
    const int n = static_cast<int>(x.rows());
    QMat out(N, N);
    for (int col = 0; col < N; ++col) {
        auto [i, j] = b.pairs[col];
        for (int k = 0; k < n; ++k) {
            if (x.at(k, i) != 0 && k != j) {
                int a = std::min(k, j), c = std::max(k, j);
                Rat sign = (k < j) ? 1 : -1;  // e_k ^ e_j reordered
                out.at(b.index.at({a, c}), col) += sign * x.at(k, i);
            }
            if (x.at(k, j) != 0 && k != i) {
                int a = std::min(i, k), c = std::max(i, k);
                Rat sign = (i < k) ? 1 : -1;
                out.at(b.index.at({a, c}), col) += sign * x.at(k, j);
            }
        }
    }
    return out;
}

QMat kron(const QMat& a, const QMat& b) {
    QMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

void finalize(Embedding& e, const std::vector<QMat>& g_e, const std::vector<QMat>& g_f,
              const std::vector<QMat>& gh_e, const std::vector<QMat>& gh_f) {
    e.ambient_g_weights.clear();
    for (const auto& w : e.ambient_ghat_weights) e.ambient_g_weights.push_back(e.wm.apply(w));
    e.gre = generate_realization(e.g, g_e, g_f, e.ambient_g_weights);
    e.ghre = generate_realization(e.ghat, gh_e, gh_f, e.ambient_ghat_weights);
    e.g_posroot_full_.clear();
    for (size_t k = 0; k < e.g.positive_roots().size(); ++k) {
        const Weight& full = e.gre.pos[k].weight;
        for (int i = 0; i < e.g.rank(); ++i)
            if (full[i] != e.g.positive_roots()[k].fund_coords[i])
                throw std::logic_error("root weight / realization mismatch");
        e.g_posroot_full_.push_back(full);
    }
    // rank of wm = dimension of the embedded maximal torus
    if (e.wm.rank() != static_cast<size_t>(e.g_full_rank() - e.wm_corank))
        throw std::logic_error("weight restriction map has unexpected rank");
}

Embedding build_diag(const std::string& spec) {
    Embedding e;
    e.name = "diag:" + spec;
    e.g = rootsys::build_root_system(spec);
    auto factors = e.g.factors();
    std::vector<FactorSpec> doubled = factors;
    doubled.insert(doubled.end(), factors.begin(), factors.end());
    e.ghat = rootsys::build_root_system(doubled);

    std::vector<DefiningRep> reps;
    int m = 0;
    for (const auto& f : factors) {
        reps.push_back(defining_rep(f));
        m += reps.back().dim;
    }
    e.ambient = 2 * m;

    auto embed_block = [&](const QMat& x, int offset) {
        QMat out(e.ambient, e.ambient);
        for (size_t i = 0; i < x.rows(); ++i)
            for (size_t j = 0; j < x.cols(); ++j) out.at(offset + i, offset + j) = x.at(i, j);
        return out;
    };

    std::vector<QMat> g_e, g_f, gh_e, gh_f;
    int block = 0, simple = 0;
    std::vector<std::pair<int, int>> factor_layout;  // (ambient offset, simple offset)
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        factor_layout.push_back({block, simple});
        for (int k = 0; k < factors[fi].rank; ++k) {
            g_e.push_back(embed_block(reps[fi].e[k], block) + embed_block(reps[fi].e[k], m + block));
            g_f.push_back(embed_block(reps[fi].f[k], block) + embed_block(reps[fi].f[k], m + block));
        }
        block += reps[fi].dim;
        simple += factors[fi].rank;
    }
    for (int copy = 0; copy < 2; ++copy) {
        block = copy * m;
        for (size_t fi = 0; fi < factors.size(); ++fi) {
            for (int k = 0; k < factors[fi].rank; ++k) {
                gh_e.push_back(embed_block(reps[fi].e[k], block));
                gh_f.push_back(embed_block(reps[fi].f[k], block));
            }
            block += reps[fi].dim;
        }
    }

    // ambient Ghat weights from the (diagonal) Cartan generators of each copy
    e.ambient_ghat_weights.assign(e.ambient, Weight(e.ghat.rank(), 0));
    for (int copy = 0; copy < 2; ++copy) {
        block = copy * m;
        simple = copy * e.g.rank();
        for (size_t fi = 0; fi < factors.size(); ++fi) {
            const auto& rep = reps[fi];
            for (int v = 0; v < rep.dim; ++v)
                for (int k = 0; k < factors[fi].rank; ++k) {
                    const Rat& d = rep.h[k].at(v, v);
                    if (rat_den(d) != 1) throw std::logic_error("non-integer Cartan eigenvalue");
                    e.ambient_ghat_weights[block + v][simple + k] = static_cast<int64_t>(rat_num(d));
                }
            block += rep.dim;
            simple += factors[fi].rank;
        }
    }

    // restriction sums the two copies
    e.wm.rows.assign(e.g.rank(), std::vector<int64_t>(e.ghat.rank(), 0));
    for (int i = 0; i < e.g.rank(); ++i) {
        e.wm.rows[i][i] = 1;
        e.wm.rows[i][e.g.rank() + i] = 1;
    }

    finalize(e, g_e, g_f, gh_e, gh_f);
    return e;
}

Embedding build_functor(const std::string& name, int n, bool symmetric) {
    Embedding e;
    e.name = name;
    e.g = rootsys::build_root_system({FactorSpec{'A', n - 1}});
    PairBasis basis = symmetric ? sym_pairs(n) : wedge_pairs(n);
    const int N = static_cast<int>(basis.pairs.size());
    e.ambient = N;
    e.ghat = rootsys::build_root_system({FactorSpec{'A', N - 1}});

    DefiningRep sl = defining_rep({'A', n - 1});
    std::vector<QMat> g_e, g_f, gh_e, gh_f;
    for (int k = 0; k < n - 1; ++k) {
        g_e.push_back(symmetric ? sym2_action(sl.e[k], basis) : wedge2_action(sl.e[k], basis));
        g_f.push_back(symmetric ? sym2_action(sl.f[k], basis) : wedge2_action(sl.f[k], basis));
    }
    for (int k = 0; k + 1 < N; ++k) {
        gh_e.push_back(elementary(N, k, k + 1));
        gh_f.push_back(elementary(N, k + 1, k));
    }

    e.ambient_ghat_weights.clear();
    for (int k = 0; k < N; ++k) e.ambient_ghat_weights.push_back(sl_ambient_weight(N, k, false));

    // G-weight of basis pair (i, j) is eps_i + eps_j; columns of the
    // restriction map are the partial sums over the ambient basis
    auto g_weight_of_pair = [&](int col) {
        Weight w(e.g.rank(), 0);
        auto [i, j] = basis.pairs[col];
        for (int idx : {i, j}) {
            if (idx < n - 1) w[idx] += 1;
            if (idx > 0) w[idx - 1] -= 1;
        }
        return w;
    };
    e.wm.rows.assign(e.g.rank(), std::vector<int64_t>(N - 1, 0));
    Weight partial(e.g.rank(), 0);
    for (int col = 0; col + 1 < N; ++col) {
        Weight w = g_weight_of_pair(col);
        for (int r = 0; r < e.g.rank(); ++r) {
            partial[r] += w[r];
            e.wm.rows[r][col] = partial[r];
        }
    }

    finalize(e, g_e, g_f, gh_e, gh_f);
    return e;
}

Embedding build_tensor(int p, int q) {
    Embedding e;
    e.name = "tensor:" + std::to_string(p) + "x" + std::to_string(q);
    e.g = rootsys::build_root_system({FactorSpec{'A', p - 1}, FactorSpec{'A', q - 1}});
    e.g_central = 2;
    e.wm_corank = 1;  // the two determinant directions coincide inside Ghat
    const int N = p * q;
    e.ghat = rootsys::build_root_system({FactorSpec{'A', N - 1}});
    e.ghat_central = 1;
    e.ambient = N;

    DefiningRep slp = defining_rep({'A', p - 1}), slq = defining_rep({'A', q - 1});
    QMat ip = QMat::identity(p), iq = QMat::identity(q);
    std::vector<QMat> g_e, g_f, gh_e, gh_f;
    for (int k = 0; k < p - 1; ++k) {
        g_e.push_back(kron(slp.e[k], iq));
        g_f.push_back(kron(slp.f[k], iq));
    }
    for (int k = 0; k < q - 1; ++k) {
        g_e.push_back(kron(ip, slq.e[k]));
        g_f.push_back(kron(ip, slq.f[k]));
    }
    for (int k = 0; k + 1 < N; ++k) {
        gh_e.push_back(elementary(N, k, k + 1));
        gh_f.push_back(elementary(N, k + 1, k));
    }

    e.ambient_ghat_weights.clear();
    for (int k = 0; k < N; ++k) e.ambient_ghat_weights.push_back(sl_ambient_weight(N, k, true));

    // deg = sum_j (j+1) f_j + N c, constant on each irreducible
    e.ghat_deg_row.assign(N, 0);
    for (int j = 0; j + 1 < N; ++j) e.ghat_deg_row[j] = j + 1;
    e.ghat_deg_row[N - 1] = N;

    // E- and F-degrees on full G coordinates; both equal the Ghat degree on
    // the restriction of any irreducible
    const int gfull_rank = (p - 1) + (q - 1) + 2;
    std::vector<int64_t> degE(gfull_rank, 0), degF(gfull_rank, 0);
    for (int i = 0; i + 1 < p; ++i) degE[i] = i + 1;
    degE[(p - 1) + (q - 1)] = p;
    for (int j = 0; j + 1 < q; ++j) degF[(p - 1) + j] = j + 1;
    degF[(p - 1) + (q - 1) + 1] = q;
    e.g_deg_rows = {degE, degF};
    e.g_deg_value_rows = {e.ghat_deg_row, e.ghat_deg_row};

    // full Gl(N) coordinates -> full (Gl(p) x Gl(q)) coordinates: (f, c) ->
    // entries lambda_k -> row/column sums over E and F -> successive
    // differences plus the last entry of each block
    auto apply_unit = [&](int unit) {
        std::vector<int64_t> lam(N, 0);
        if (unit < N - 1) {
            for (int k = 0; k <= unit; ++k) lam[k] = 1;
        } else {
            for (int k = 0; k < N; ++k) lam[k] = 1;
        }
        std::vector<int64_t> etaE(p, 0), etaF(q, 0);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                etaE[i] += lam[i * q + j];
                etaF[j] += lam[i * q + j];
            }
        Weight out;
        for (int i = 0; i + 1 < p; ++i) out.push_back(etaE[i] - etaE[i + 1]);
        for (int j = 0; j + 1 < q; ++j) out.push_back(etaF[j] - etaF[j + 1]);
        out.push_back(etaE[p - 1]);
        out.push_back(etaF[q - 1]);
        return out;
    };
    const int gfull = (p - 1) + (q - 1) + 2;
    e.wm.rows.assign(gfull, std::vector<int64_t>(N, 0));
    for (int unit = 0; unit < N; ++unit) {
        Weight col = apply_unit(unit);
        for (int r = 0; r < gfull; ++r) e.wm.rows[r][unit] = col[r];
    }

    finalize(e, g_e, g_f, gh_e, gh_f);
    return e;
}

}  // namespace

std::vector<std::string> catalog() {
    return {"diag:<spec>", "sym2:<n>", "wedge2:<n>", "tensor:<p>x<q>"};
}

std::vector<std::string> desk_catalog() {
    return {"diag:A1", "diag:A2", "sym2:2", "sym2:3", "wedge2:4", "tensor:2x2"};
}

Embedding build_embedding(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown embedding '" + name + "'");
    std::string kind = name.substr(0, colon), arg = name.substr(colon + 1);
    if (kind == "diag") return build_diag(arg);
    if (kind == "sym2") {
        int n = std::stoi(arg);
        if (n < 2) throw std::invalid_argument("sym2 needs n >= 2");
        return build_functor(name, n, true);
    }
    if (kind == "wedge2") {
        int n = std::stoi(arg);
        if (n < 2) throw std::invalid_argument("wedge2 needs n >= 4");
        if (n == 2) throw std::invalid_argument("wedge2:2 is degenerate: the target group is trivial");
        if (n == 3) throw std::invalid_argument("wedge2:3 is degenerate: Lambda^2 V = V* gives G = Ghat");
        return build_functor(name, n, false);
    }
    if (kind == "tensor") {
        auto x = arg.find('x');
        if (x == std::string::npos) throw std::invalid_argument("tensor spec must be <p>x<q>");
        int p = std::stoi(arg.substr(0, x)), q = std::stoi(arg.substr(x + 1));
        if (p < 2 || q < 2) throw std::invalid_argument("tensor needs p, q >= 2");
        return build_tensor(p, q);
    }
    throw std::invalid_argument("unknown embedding '" + name + "'");
}

int64_t default_bound(const Embedding& e) {
    int r = e.ghat_full_rank();
    if (r <= 2) return 4;
    if (r <= 4) return 3;
    return 2;
}

bool Embedding::g_dominant(const Weight& full) const {
    if (static_cast<int>(full.size()) != g_full_rank()) return false;
    for (int i = 0; i < g.rank(); ++i)
        if (full[i] < 0) return false;
    return true;
}

bool Embedding::ghat_dominant(const Weight& full) const {
    if (static_cast<int>(full.size()) != ghat_full_rank()) return false;
    for (int i = 0; i < ghat.rank(); ++i)
        if (full[i] < 0) return false;
    return true;
}

int64_t g_weyl_dim(const Embedding& e, const Weight& mu_full) {
    return repcalc::weyl_dim(e.g, e.g_classical(mu_full));
}

int64_t ghat_weyl_dim(const Embedding& e, const Weight& nuhat_full) {
    return repcalc::weyl_dim(e.ghat, e.ghat_classical(nuhat_full));
}

std::vector<Weight> dominant_nuhat_up_to(const Embedding& e, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    const int n = e.ghat_full_rank();
    std::vector<Weight> out;
    Weight w(n, 0);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == bound) {
            w[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Weight, int64_t> branch(const Embedding& e, const Weight& nuhat_full) {
    if (static_cast<int>(nuhat_full.size()) != e.ghat_full_rank())
        throw std::invalid_argument("branch: nuhat coordinate size mismatch");
    Weight aclass = e.ghat_classical(nuhat_full);
    if (!e.ghat.is_dominant(aclass)) throw std::invalid_argument("branch: nuhat is not dominant");
    const auto& ch = repcalc::freudenthal_character_cached(e.ghat, aclass);

    int64_t deg_value = 0;
    if (e.ghat_central) {
        for (int j = 0; j < e.ghat_full_rank(); ++j) deg_value += e.ghat_deg_row[j] * nuhat_full[j];
    }

    // the central coordinates of a weight vary across a constituent; only the
    // central character (the degree functionals) is constant, so decompose on
    // the classical coordinates and reconstruct the central ones per
    // constituent
    std::vector<int64_t> central_values(e.g_central, 0);
    for (int c = 0; c < e.g_central; ++c)
        for (int j = 0; j < e.ghat_full_rank(); ++j)
            central_values[c] += e.g_deg_value_rows[c][j] * nuhat_full[j];

    repcalc::CharacterMultiset cls;
    for (const auto& [w, m] : ch.terms()) {
        Weight full = w;
        if (e.ghat_central) {
            int64_t partial = 0;
            for (int j = 0; j < e.ghat.rank(); ++j) partial += e.ghat_deg_row[j] * w[j];
            int64_t rem = deg_value - partial;
            int64_t c = e.ghat_deg_row[e.ghat.rank()];
            if (rem % c != 0) throw std::logic_error("branch: non-integral central coordinate");
            full.push_back(rem / c);
        }
        Weight img = e.wm.apply(full);
        for (int c = 0; c < e.g_central; ++c) {
            int64_t v = 0;
            for (int j = 0; j < e.g_full_rank(); ++j) v += e.g_deg_rows[c][j] * img[j];
            if (v != central_values[c])
                throw std::logic_error("branch: central character is not constant");
        }
        cls.add(e.g_classical(img), m);
    }

    auto dec = repcalc::brauer_decompose(e.g, cls);
    std::map<Weight, int64_t> out;
    int64_t total = 0;
    for (const auto& [mu, mult] : dec.terms) {
        Weight full = mu;
        for (int c = 0; c < e.g_central; ++c) {
            int64_t partial = 0;
            for (int j = 0; j < e.g.rank(); ++j) partial += e.g_deg_rows[c][j] * mu[j];
            int64_t rem = central_values[c] - partial;
            int64_t coef = e.g_deg_rows[c][e.g.rank() + c];
            if (rem % coef != 0)
                throw std::logic_error("branch: non-integral central coordinate of a constituent");
            full.push_back(rem / coef);
        }
        out[full] += mult;
        total += mult * repcalc::weyl_dim(e.g, mu);
    }
    if (total != repcalc::weyl_dim(e.ghat, aclass))
        throw std::logic_error("branch: dimension mismatch");
    return out;
}

namespace {

std::vector<QVec> lie_s_coweights(const Embedding& e, const rootsys::LeviData& levi) {
    if (levi.levi_simple_roots.empty()) {
        auto full = Subspace::full(e.g_full_rank());
        return full.basis();
    }
    std::vector<QVec> rows;
    for (int j : levi.levi_simple_roots) {
        // full coordinates of alpha_j
        for (size_t k = 0; k < e.g.positive_roots().size(); ++k) {
            const auto& pr = e.g.positive_roots()[k];
            if (pr.height == 1 && pr.root_coords[j] == 1) {
                rows.push_back(qvec_from_int(e.g_posroot_full_[k]));
                break;
            }
        }
    }
    return exactq::kernel_basis(QMat::from_rows(rows)).basis();
}

Rat dot(const QVec& a, const Weight& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

// value of the cocharacter functional (a row over the classical fundamental
// coordinates) on a full G-weight
Rat lambda_value(const Embedding& e, const QVec& row, const Weight& g_full) {
    Rat s = 0;
    for (int j = 0; j < e.g.rank(); ++j)
        if (row[j] != 0) s += row[j] * g_full[j];
    return s;
}

// row of the canonical cocharacter sum_{i in support} t_i w_i^vee, evaluated
// through the inverse Cartan matrix
QVec lambda_row_for(const Embedding& e, const std::vector<int>& support,
                    const std::vector<int64_t>& t) {
    QVec row(e.g.rank(), Rat(0));
    for (int jc = 0; jc < e.g.rank(); ++jc) {
        Weight unit(e.g.rank(), 0);
        unit[jc] = 1;
        QVec rc = e.g.to_root_coords(unit);
        Rat s = 0;
        for (size_t i = 0; i < support.size(); ++i) s += Rat(t[i]) * rc[support[i]];
        row[jc] = s;
    }
    return row;
}

// Assemble the parabolic data determined by the given cocharacter row.
// Returns false when the cocharacter is not generic inside its chamber (a
// Ghat root vanishes on it without vanishing on Lie(S)) or does not induce
// the parabolic of the face on the G side.
bool assemble_parabolic(const Embedding& e, const Face& f, const QVec& row, ParabolicData& pd) {
    pd = ParabolicData{};
    pd.face = f;
    pd.levi = rootsys::levi_data(e.g, f);
    pd.lambda_row_classical = row;

    std::vector<QVec> lie_s = lie_s_coweights(e, pd.levi);

    // the induced G-parabolic must be exactly P(F)
    std::vector<bool> in_support(e.g.rank(), false);
    for (int i : f.support) in_support[i] = true;
    for (size_t k = 0; k < e.g.positive_roots().size(); ++k) {
        Rat v = lambda_value(e, row, e.g_posroot_full_[k]);
        bool in_pu = false;
        for (int i : f.support)
            if (e.g.positive_roots()[k].root_coords[i] != 0) { in_pu = true; break; }
        if (in_pu ? (v <= 0) : (v != 0)) return false;
    }

    std::vector<const RootVectorRealization*> all_ghat_roots;
    for (const auto& r : e.ghre.pos) all_ghat_roots.push_back(&r);
    for (const auto& r : e.ghre.neg) all_ghat_roots.push_back(&r);

    std::vector<const RootVectorRealization*> lhat_pos;
    for (const auto* rv : all_ghat_roots) {
        Weight restricted = e.wm.apply(rv->weight);
        Rat v = lambda_value(e, row, restricted);
        if (v > 0) {
            pd.puhat.push_back(rv->mat);
            pd.puhat_weights.push_back(restricted);
        } else if (v == 0) {
            for (const auto& s : lie_s)
                if (dot(s, restricted) != 0) return false;  // on a wall
            pd.dhat_roots.push_back(*rv);
            if (rv->positive) lhat_pos.push_back(rv);
        }
    }

    // p^u from the g-side realization
    std::unordered_map<Weight, size_t, WeightHash> posindex;
    for (size_t k = 0; k < e.g.positive_roots().size(); ++k) {
        Weight key(e.g.positive_roots()[k].root_coords.begin(),
                   e.g.positive_roots()[k].root_coords.end());
        posindex.emplace(key, k);
    }
    auto realization_index = [&](const rootsys::PositiveRoot& pr) {
        Weight key(pr.root_coords.begin(), pr.root_coords.end());
        return posindex.at(key);
    };
    for (const auto& pr : pd.levi.pu_positive_roots) {
        size_t k = realization_index(pr);
        pd.pu.push_back(e.gre.pos[k].mat);
        pd.pu_weights.push_back(e.gre.pos[k].weight);
    }

    // multiset of T-weights on puhat / pu
    std::map<Weight, int64_t> counts;
    for (const auto& w : pd.puhat_weights) counts[w] += 1;
    for (const auto& w : pd.pu_weights) counts[w] -= 1;
    for (const auto& [w, c] : counts) {
        if (c < 0) throw std::logic_error("parabolic_data: p^u weights not inside puhat weights");
        for (int64_t i = 0; i < c; ++i) pd.t_weights_on_puhat_mod_pu.push_back(w);
    }

    // Levi-side bases
    for (const auto& h : e.gre.coroots) pd.levi_l.push_back(h);
    for (const auto& h : e.gre.coroots) pd.borel_bl.push_back(h);
    for (int j : pd.levi.levi_simple_roots) {
        // coroots of the Levi simple roots span the toral part of Lie(D)
        pd.d_mats.push_back(e.gre.coroots[j]);
    }
    for (const auto& pr : pd.levi.levi_positive_roots) {
        size_t k = realization_index(pr);
        pd.levi_l.push_back(e.gre.pos[k].mat);
        pd.levi_l.push_back(e.gre.neg[k].mat);
        pd.borel_bl.push_back(e.gre.pos[k].mat);
        pd.d_mats.push_back(e.gre.pos[k].mat);
        pd.d_mats.push_back(e.gre.neg[k].mat);
    }

    // Borel of Dhat: toral part plus the positive root vectors
    for (const auto* rv : lhat_pos) {
        size_t k = rv->posroot_index;
        pd.dhat_borel.push_back(exactq::bracket(e.ghre.pos[k].mat, e.ghre.neg[k].mat));
        pd.dhat_borel.push_back(rv->mat);
    }

    // Lie(Shat): coweights of That vanishing on every root of Lhat
    std::vector<QVec> rows;
    for (const auto* rv : lhat_pos) rows.push_back(qvec_from_int(rv->weight));
    Subspace shat_coweights = rows.empty() ? Subspace::full(e.ghat_full_rank())
                                           : exactq::kernel_basis(QMat::from_rows(rows));
    for (const auto& h : shat_coweights.basis()) {
        QMat m(e.ambient, e.ambient);
        for (int k = 0; k < e.ambient; ++k) m.at(k, k) = dot(h, e.ambient_ghat_weights[k]);
        pd.shat.push_back(m);
    }

    return true;
}

ParabolicData parabolic_data(const Embedding& e, const Face& f) {
    const int64_t primes[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    ParabolicData pd;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<int64_t> t(f.support.size());
        for (size_t i = 0; i < t.size(); ++i)
            t[i] = (attempt == 0) ? 1 : primes[(i + attempt) % 12] + attempt;
        if (assemble_parabolic(e, f, lambda_row_for(e, f.support, t), pd)) return pd;
    }
    throw std::logic_error("parabolic_data: no generic cocharacter found");
}

CompatiblePair compatible_parabolic_pair(const Embedding& e, const Face& f1, const Face& f2) {
    if (!std::includes(f2.support.begin(), f2.support.end(), f1.support.begin(),
                       f1.support.end()))
        throw std::invalid_argument("compatible_parabolic_pair: faces are not nested");
    CompatiblePair pair;
    pair.small = parabolic_data(e, f1);
    if (f1.support == f2.support) {
        pair.large = pair.small;
        return pair;
    }
    std::vector<int> extra_support;
    for (int i : f2.support)
        if (!std::binary_search(f1.support.begin(), f1.support.end(), i))
            extra_support.push_back(i);

    // lambda(large) = N lambda(small) + (face-difference directions); large N
    // keeps every sign of the small cocharacter, so the large chamber closure
    // contains the small one
    const int64_t primes[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<int64_t> t(extra_support.size());
        for (size_t i = 0; i < t.size(); ++i)
            t[i] = (attempt == 0) ? 1 : primes[(i + attempt) % 12] + attempt;
        QVec extra = lambda_row_for(e, extra_support, t);

        // smallest nonzero |pairing| of the small cocharacter and largest of
        // the extra part over every Ghat root
        Rat min_small = 0, max_extra = 0;
        for (const auto& list : {e.ghre.pos, e.ghre.neg})
            for (const auto& rv : list) {
                Weight restricted = e.wm.apply(rv.weight);
                Rat a = lambda_value(e, pair.small.lambda_row_classical, restricted);
                Rat b = lambda_value(e, extra, restricted);
                if (a < 0) a = -a;
                if (b < 0) b = -b;
                if (a != 0 && (min_small == 0 || a < min_small)) min_small = a;
                if (b > max_extra) max_extra = b;
            }
        Rat nrat = (min_small == 0) ? Rat(1) : Rat(1) + max_extra / min_small;
        Int nint = rat_num(nrat) / rat_den(nrat) + 1;
        QVec row(e.g.rank());
        for (int j = 0; j < e.g.rank(); ++j)
            row[j] = Rat(nint) * pair.small.lambda_row_classical[j] + extra[j];
        if (assemble_parabolic(e, f2, row, pair.large)) return pair;
    }
    throw std::logic_error("compatible_parabolic_pair: no generic compatible cocharacter");
}

std::string embedding_to_json(const Embedding& e) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["g"] = e.g.name();
    j["ghat"] = e.ghat.name();
    j["g_central_rank"] = e.g_central;
    j["ghat_central_rank"] = e.ghat_central;
    j["ambient_dim"] = e.ambient;
    j["wm"] = e.wm.rows;
    auto mat_json = [](const QMat& m) {
        std::vector<std::vector<std::pair<std::string, std::string>>> out;
        for (size_t i = 0; i < m.rows(); ++i) {
            std::vector<std::pair<std::string, std::string>> row;
            for (size_t k = 0; k < m.cols(); ++k)
                row.push_back({rat_num(m.at(i, k)).str(), rat_den(m.at(i, k)).str()});
            out.push_back(row);
        }
        return out;
    };
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (size_t k = 0; k < e.gre.coroots.size(); ++k) {
        nlohmann::ordered_json g;
        g["simple_root"] = k + 1;
        g["e"] = mat_json(e.gre.pos[k].mat);
        g["f"] = mat_json(e.gre.neg[k].mat);
        g["h"] = mat_json(e.gre.coroots[k]);
        gens.push_back(g);
    }
    // non-simple positive root vectors as well
    for (size_t k = 0; k < e.gre.pos.size(); ++k) {
        if (e.g.positive_roots()[k].height == 1) continue;
        nlohmann::ordered_json g;
        g["positive_root"] = e.g.positive_roots()[k].root_coords;
        g["e"] = mat_json(e.gre.pos[k].mat);
        g["f"] = mat_json(e.gre.neg[k].mat);
        gens.push_back(g);
    }
    j["lie_g_basis"] = gens;
    return j.dump(2);
}

}  // namespace lrcone::embed
