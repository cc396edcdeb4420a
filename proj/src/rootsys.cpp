#include "lrcone/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lrcone::rootsys {

namespace {

// Cartan matrix of one classical factor, entry (i, j) = <alpha_j, alpha_i^vee>.
// B_n has the short simple root last, C_n the long one, Bourbaki numbering.
std::vector<std::vector<int64_t>> factor_cartan(const FactorSpec& f) {
    int n = f.rank;
    std::vector<std::vector<int64_t>> c(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j, int64_t down, int64_t up) {
        c[i][j] = down;  // <alpha_j, alpha_i^vee>
        c[j][i] = up;
    };
    switch (f.type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            if (n >= 2) link(n - 2, n - 1, -1, -2);
            break;
        case 'C':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            if (n >= 2) link(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            if (n >= 3) link(n - 3, n - 1, -1, -1);
            break;
        default:
            throw std::invalid_argument("unknown factor type");
    }
    return c;
}

std::vector<int64_t> factor_dsym(const FactorSpec& f) {
    int n = f.rank;
    std::vector<int64_t> d(n, 2);
    if (f.type == 'B') d[n - 1] = 1;  // short root
    if (f.type == 'C') d[n - 1] = 4;  // long root
    return d;
}

void validate_factor(const FactorSpec& f) {
    int lo;
    switch (f.type) {
        case 'A': lo = 1; break;
        case 'B':
        case 'C': lo = 2; break;
        case 'D': lo = 3; break;
        default: throw std::invalid_argument(std::string("invalid root-system type '") + f.type + "'");
    }
    if (f.rank < lo)
        throw std::invalid_argument(std::string("rank out of range for type ") + f.type);
}

}  // namespace

int64_t classical_positive_root_count(const FactorSpec& f) {
    int64_t n = f.rank;
    switch (f.type) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
    }
    throw std::invalid_argument("unknown factor type");
}

RootSystem build_root_system(const std::vector<FactorSpec>& spec) {
    if (spec.empty()) throw std::invalid_argument("empty root-system spec");
    RootSystem rs;
    rs.factors_ = spec;
    for (const auto& f : spec) validate_factor(f);
    int rank = 0;
    for (const auto& f : spec) rank += f.rank;
    rs.rank_ = rank;
    rs.cartan_.assign(rank, std::vector<int64_t>(rank, 0));
    rs.dsym_.assign(rank, 2);
    rs.simple_factor_.assign(rank, 0);
    std::ostringstream nm;
    int off = 0;
    for (size_t fi = 0; fi < spec.size(); ++fi) {
        const auto& f = spec[fi];
        auto c = factor_cartan(f);
        auto d = factor_dsym(f);
        for (int i = 0; i < f.rank; ++i) {
            rs.dsym_[off + i] = d[i];
            rs.simple_factor_[off + i] = static_cast<int>(fi);
            for (int j = 0; j < f.rank; ++j) rs.cartan_[off + i][off + j] = c[i][j];
        }
        if (fi) nm << "x";
        nm << f.type << f.rank;
        off += f.rank;
    }
    rs.name_ = nm.str();

    rs.simple_fund_.resize(rank);
    for (int j = 0; j < rank; ++j) {
        Weight w(rank, 0);
        for (int i = 0; i < rank; ++i) w[i] = rs.cartan_[i][j];
        rs.simple_fund_[j] = w;
    }

    rs.rho_.assign(rank, 1);

    // positive roots: reflection closure of the simple roots inside the
    // positive cone
    std::set<std::vector<int64_t>> seen;
    std::vector<std::vector<int64_t>> queue;
    for (int j = 0; j < rank; ++j) {
        std::vector<int64_t> e(rank, 0);
        e[j] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        auto c = queue[q];
        for (int i = 0; i < rank; ++i) {
            int64_t pairing = 0;
            for (int j = 0; j < rank; ++j) pairing += rs.cartan_[i][j] * c[j];
            auto cc = c;
            cc[i] -= pairing;
            bool nonneg = true;
            for (int64_t x : cc)
                if (x < 0) { nonneg = false; break; }
            if (nonneg && seen.insert(cc).second) queue.push_back(cc);
        }
    }
    for (const auto& c : seen) {
        PositiveRoot pr;
        pr.root_coords = c;
        Weight fund(rank, 0);
        int64_t h = 0;
        for (int i = 0; i < rank; ++i) {
            int64_t a = 0;
            for (int j = 0; j < rank; ++j) a += rs.cartan_[i][j] * c[j];
            fund[i] = a;
            h += c[i];
        }
        pr.fund_coords = fund;
        pr.height = h;
        rs.posroots_.push_back(std::move(pr));
    }
    std::sort(rs.posroots_.begin(), rs.posroots_.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) {
                  if (a.height != b.height) return a.height < b.height;
                  return a.root_coords < b.root_coords;
              });

    int64_t expected = 0;
    for (const auto& f : spec) expected += classical_positive_root_count(f);
    if (static_cast<int64_t>(rs.posroots_.size()) != expected)
        throw std::logic_error("positive-root count mismatch for " + rs.name_);

    exactq::QMat cart(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cart.at(i, j) = Rat(rs.cartan_[i][j]);
    // invert by solving C X = I column by column
    exactq::QMat inv(rank, rank);
    for (int j = 0; j < rank; ++j) {
        QVec rhs(rank, Rat(0));
        rhs[j] = 1;
        auto x = exactq::solve(cart, rhs);
        if (!x) throw std::logic_error("singular Cartan matrix");
        for (int i = 0; i < rank; ++i) inv.at(i, j) = (*x)[i];
    }
    rs.inv_cartan_ = inv;
    return rs;
}

std::vector<FactorSpec> parse_root_spec(const std::string& spec) {
    std::vector<FactorSpec> out;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t next = spec.find('x', pos);
        std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.size() < 2) throw std::invalid_argument("bad root-system token '" + tok + "'");
        char t = tok[0];
        int r;
        try {
            size_t used = 0;
            r = std::stoi(tok.substr(1), &used);
            if (used + 1 != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad root-system token '" + tok + "'");
        }
        out.push_back({t, r});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty root-system spec '" + spec + "'");
    return out;
}

RootSystem build_root_system(const std::string& spec) {
    return build_root_system(parse_root_spec(spec));
}

bool RootSystem::is_dominant(const Weight& w) const {
    if (static_cast<int>(w.size()) != rank_) throw std::invalid_argument("weight rank mismatch");
    for (int64_t x : w)
        if (x < 0) return false;
    return true;
}

Weight RootSystem::reflect(const Weight& w, int j) const {
    Weight out = w;
    int64_t c = w[j];
    for (int i = 0; i < rank_; ++i) out[i] -= c * cartan_[i][j];
    return out;
}

QVec RootSystem::to_root_coords(const Weight& w) const {
    return inv_cartan_.apply(qvec_from_int(w));
}

Rat RootSystem::root_height(const Weight& w) const {
    QVec c = to_root_coords(w);
    Rat h = 0;
    for (const auto& x : c) h += x;
    return h;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    Weight v = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank_; ++j) {
            if (v[j] < 0) {
                v = reflect(v, j);
                moved = true;
            }
        }
    }
    return v;
}

bool RootSystem::dominant_conjugate_shifted(const Weight& w, Weight& out, int& sign) const {
    Weight v = w;
    for (int i = 0; i < rank_; ++i) v[i] += 1;  // shift by rho
    sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank_; ++j) {
            if (v[j] == 0) return false;  // on a wall
            if (v[j] < 0) {
                v = reflect(v, j);
                sign = -sign;
                moved = true;
            }
        }
    }
    out = v;
    for (int i = 0; i < rank_; ++i) out[i] -= 1;
    return true;
}

Weight RootSystem::dual_weight(const Weight& w) const {
    Weight neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    return dominant_representative(neg);
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& dominant) const {
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> queue{dominant};
    seen.insert(dominant);
    for (size_t q = 0; q < queue.size(); ++q) {
        Weight w = queue[q];
        for (int j = 0; j < rank_; ++j) {
            if (w[j] == 0) continue;
            Weight r = reflect(w, j);
            if (seen.insert(r).second) queue.push_back(r);
        }
    }
    return queue;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    std::vector<Weight> out;
    Weight w(rs.rank(), 0);
    while (true) {
        out.push_back(w);
        int i = rs.rank() - 1;
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

std::string Face::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(support[i] + 1);
    }
    return s + "}";
}

LeviData levi_data(const RootSystem& rs, const Face& f) {
    for (int i : f.support)
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("face support out of range");
    LeviData out;
    out.face = f;
    std::vector<bool> in_support(rs.rank(), false);
    for (int i : f.support) in_support[i] = true;
    for (int j = 0; j < rs.rank(); ++j)
        if (!in_support[j]) out.levi_simple_roots.push_back(j);
    out.semisimple_rank_of_D = static_cast<int>(out.levi_simple_roots.size());
    for (const auto& pr : rs.positive_roots()) {
        bool in_levi = true;
        for (int i : f.support)
            if (pr.root_coords[i] != 0) { in_levi = false; break; }
        if (in_levi)
            out.levi_positive_roots.push_back(pr);
        else
            out.pu_positive_roots.push_back(pr);
    }
    return out;
}

std::vector<Face> enumerate_faces(const RootSystem& rs) {
    int n = rs.rank();
    std::vector<Face> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        Face f;
        for (int i = 0; i < n; ++i)
            if (mask & (uint64_t(1) << i)) f.support.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace lrcone::rootsys
