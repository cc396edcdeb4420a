#include "lrcone/lrsemigroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "lrcone/isotropy.hpp"

namespace lrcone::lrsg {

SemigroupSample enumerate_semigroup(const Embedding& e, int64_t bound, int threads) {
    if (bound < 0) throw std::invalid_argument("enumerate: bound must be >= 0");
    SemigroupSample s;
    s.embedding = e.name;
    s.bound = bound;
    s.g_classical_rank = e.g.rank();
    s.g_central = e.g_central;
    s.ghat_classical_rank = e.ghat.rank();
    s.ghat_central = e.ghat_central;

    std::vector<Weight> nuhats = embed::dominant_nuhat_up_to(e, bound);
    std::vector<std::map<Weight, int64_t>> fibers(nuhats.size());

    unsigned workers = threads > 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, nuhats.size() ? nuhats.size() : 1);
    std::atomic<size_t> next{0};
    auto run = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= nuhats.size()) break;
            fibers[i] = embed::branch(e, nuhats[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < nuhats.size(); ++i)
        for (const auto& [mu, mult] : fibers[i]) s.points.push_back({mu, nuhats[i], mult});
    std::sort(s.points.begin(), s.points.end(), [](const SemigroupPoint& a, const SemigroupPoint& b) {
        if (a.nuhat != b.nuhat) return a.nuhat < b.nuhat;
        return a.mu < b.mu;
    });

    // saturation: the span of C and the span of every face slice must already
    // be stable from bound-1 to bound
    if (bound == 0) {
        s.saturated = false;
    } else {
        SemigroupSample prev = s;
        prev.bound = bound - 1;
        prev.points.clear();
        for (const auto& p : s.points) {
            bool inside = true;
            for (int64_t x : p.nuhat)
                if (x > bound - 1 || x < 0) { inside = false; break; }
            if (inside) prev.points.push_back(p);
        }
        s.saturated = true;
        for (const auto& f : rootsys::enumerate_faces(e.g)) {
            auto span_dim = [&](const SemigroupSample& smp) {
                auto pts = c_face(smp, f);
                if (pts.empty()) return size_t(0);
                std::vector<std::vector<int64_t>> rows;
                for (const auto& p : pts) {
                    std::vector<int64_t> row = p.mu;
                    row.insert(row.end(), p.nuhat.begin(), p.nuhat.end());
                    rows.push_back(row);
                }
                return exactq::rank(exactq::QMat::from_int_rows(rows));
            };
            if (span_dim(s) != span_dim(prev)) {
                s.saturated = false;
                break;
            }
        }
    }
    return s;
}

size_t dim_C(const SemigroupSample& s) {
    if (s.points.empty()) return 0;
    std::vector<std::vector<int64_t>> rows;
    for (const auto& p : s.points) {
        std::vector<int64_t> row = p.mu;
        row.insert(row.end(), p.nuhat.begin(), p.nuhat.end());
        rows.push_back(row);
    }
    return exactq::rank(exactq::QMat::from_int_rows(rows));
}

std::vector<SemigroupPoint> c_face(const SemigroupSample& s, const Face& f) {
    std::vector<bool> in_support(s.g_classical_rank, false);
    for (int i : f.support) {
        if (i < 0 || i >= s.g_classical_rank)
            throw std::invalid_argument("c_face: face support out of range");
        in_support[i] = true;
    }
    std::vector<SemigroupPoint> out;
    for (const auto& p : s.points) {
        bool ok = true;
        for (int i = 0; i < s.g_classical_rank; ++i)
            if (!in_support[i] && p.mu[i] != 0) { ok = false; break; }
        if (ok) out.push_back(p);
    }
    return out;
}

DeltaDirect delta_direct(const SemigroupSample& s, const Face& f) {
    DeltaDirect d;
    d.saturated = s.saturated;
    d.dim_c = dim_C(s);
    auto pts = c_face(s, f);
    if (!pts.empty()) {
        std::vector<std::vector<int64_t>> rows;
        for (const auto& p : pts) {
            std::vector<int64_t> row = p.mu;
            row.insert(row.end(), p.nuhat.begin(), p.nuhat.end());
            rows.push_back(row);
        }
        d.dim_cf = exactq::rank(exactq::QMat::from_int_rows(rows));
    }
    d.dim_f = f.support.size() + s.g_central;  // central directions lie in every face span
    d.dim_xi = s.g_full_rank();
    d.delta = static_cast<int64_t>(d.dim_c) - static_cast<int64_t>(d.dim_cf) +
              static_cast<int64_t>(d.dim_f) - static_cast<int64_t>(d.dim_xi);
    return d;
}

std::vector<QVec> moment_polytope_slice(const Embedding& e, const Weight& nuhat_full, int64_t nmax) {
    if (nmax < 1) throw std::invalid_argument("moment_polytope_slice: nmax must be >= 1");
    if (!e.ghat_dominant(nuhat_full))
        throw std::invalid_argument("moment_polytope_slice: nuhat must be dominant");
    std::set<QVec> pts;
    for (int64_t n = 1; n <= nmax; ++n) {
        Weight scaled(nuhat_full);
        for (auto& x : scaled) x *= n;
        for (const auto& [mu, mult] : embed::branch(e, scaled)) {
            QVec q(mu.size());
            for (size_t i = 0; i < mu.size(); ++i) q[i] = Rat(mu[i], n);
            pts.insert(q);
        }
    }
    return {pts.begin(), pts.end()};
}

namespace {

size_t affine_dim(const std::vector<QVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<QVec> rows;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        rows.push_back(d);
    }
    return exactq::rank(exactq::QMat::from_rows(rows));
}

}  // namespace

PolmomReport polmom_check(const Embedding& e, const Face& f, int samples, int64_t bound,
                          int64_t nmax) {
    PolmomReport rep;
    rep.hypothesis_ok = (isotropy::dim_c_dual(e) == 0);
    if (!rep.hypothesis_ok) {
        rep.message = "<C> is a proper subspace of Xi(T) x Xi(That); the codimension identity "
                      "does not apply";
        return rep;
    }
    SemigroupSample s = enumerate_semigroup(e, embed::default_bound(e));
    rep.face_full = (delta_direct(s, f).delta == 0);
    if (!rep.face_full)
        rep.message = "face is not full; the identity is evaluated empirically only";

    std::vector<bool> in_support(e.g.rank(), false);
    for (int i : f.support) in_support[i] = true;

    int taken = 0;
    for (const auto& nuhat : embed::dominant_nuhat_up_to(e, bound)) {
        bool interior = true;
        for (int i = 0; i < e.ghat.rank(); ++i)
            if (nuhat[i] < 1) { interior = false; break; }
        if (!interior) continue;
        if (taken++ >= samples) break;

        PolmomSampleReport sr;
        sr.nuhat = nuhat;
        auto slice = moment_polytope_slice(e, nuhat, nmax);
        sr.dim_p = affine_dim(slice);
        std::vector<QVec> in_face;
        for (const auto& q : slice) {
            bool ok = true;
            for (int i = 0; i < e.g.rank(); ++i)
                if (!in_support[i] && q[i] != 0) { ok = false; break; }
            if (ok) in_face.push_back(q);
        }
        sr.in_window = !in_face.empty();
        sr.dim_pf = affine_dim(in_face);
        int64_t lhs = static_cast<int64_t>(sr.dim_p) - static_cast<int64_t>(sr.dim_pf);
        int64_t rhs = e.g.rank() - static_cast<int64_t>(f.support.size());
        sr.identity_holds = sr.in_window && (lhs == rhs);
        rep.samples.push_back(std::move(sr));
    }
    rep.ok = true;
    for (const auto& sr : rep.samples)
        if (sr.in_window && !sr.identity_holds) rep.ok = false;
    if (rep.samples.empty()) {
        rep.ok = false;
        rep.message = "no interior weights within the bound";
    }
    return rep;
}

std::string sample_to_json(const SemigroupSample& s) {
    nlohmann::ordered_json j;
    j["embedding"] = s.embedding;
    j["bound"] = s.bound;
    j["saturated"] = s.saturated;
    j["g_classical_rank"] = s.g_classical_rank;
    j["g_central"] = s.g_central;
    j["ghat_classical_rank"] = s.ghat_classical_rank;
    j["ghat_central"] = s.ghat_central;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : s.points) {
        nlohmann::ordered_json q;
        q["mu"] = p.mu;
        q["nuhat"] = p.nuhat;
        q["mult"] = p.mult;
        pts.push_back(q);
    }
    j["points"] = pts;
    return j.dump(2);
}

SemigroupSample sample_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SemigroupSample s;
    s.embedding = j.at("embedding").get<std::string>();
    s.bound = j.at("bound").get<int64_t>();
    s.saturated = j.at("saturated").get<bool>();
    s.g_classical_rank = j.at("g_classical_rank").get<int>();
    s.g_central = j.at("g_central").get<int>();
    s.ghat_classical_rank = j.at("ghat_classical_rank").get<int>();
    s.ghat_central = j.at("ghat_central").get<int>();
    for (const auto& q : j.at("points")) {
        SemigroupPoint p;
        p.mu = q.at("mu").get<Weight>();
        p.nuhat = q.at("nuhat").get<Weight>();
        p.mult = q.at("mult").get<int64_t>();
        s.points.push_back(std::move(p));
    }
    return s;
}

std::string sample_to_csv(const SemigroupSample& s) {
    std::ostringstream out;
    for (int i = 0; i < s.g_full_rank(); ++i) out << "mu_" << i + 1 << ",";
    for (int i = 0; i < s.ghat_full_rank(); ++i) out << "nuhat_" << i + 1 << ",";
    out << "mult\n";
    for (const auto& p : s.points) {
        for (int64_t x : p.mu) out << x << ",";
        for (int64_t x : p.nuhat) out << x << ",";
        out << p.mult << "\n";
    }
    return out.str();
}

bool validate_sample(const Embedding& e, const SemigroupSample& s, std::string* message) {
    auto fail = [&](const std::string& m) {
        if (message) *message = m;
        return false;
    };
    if (s.embedding != e.name) return fail("sample embedding name mismatch");
    if (s.g_classical_rank != e.g.rank() || s.g_central != e.g_central ||
        s.ghat_classical_rank != e.ghat.rank() || s.ghat_central != e.ghat_central)
        return fail("sample lattice ranks do not match the embedding");
    std::map<Weight, std::map<Weight, int64_t>> fibers;
    for (const auto& p : s.points) {
        if (p.mult < 1) return fail("multiplicity below 1");
        if (!fibers[p.nuhat].emplace(p.mu, p.mult).second) return fail("duplicate point");
    }
    Weight zero_nu(e.ghat_full_rank(), 0), zero_mu(e.g_full_rank(), 0);
    auto it0 = fibers.find(zero_nu);
    if (it0 == fibers.end() || !it0->second.count(zero_mu))
        return fail("the origin (0, 0) is missing");
    for (const auto& [nuhat, fiber] : fibers) {
        auto recomputed = embed::branch(e, nuhat);
        if (recomputed != fiber)
            return fail("fiber over a stored nuhat disagrees with a fresh branching");
    }
    // every dominant nuhat within the bound must be present (complete fibers)
    for (const auto& nuhat : embed::dominant_nuhat_up_to(e, s.bound))
        if (!fibers.count(nuhat)) return fail("missing fiber inside the stated bound");
    if (message) *message = "ok";
    return true;
}

Face parse_face_spec(const Embedding& e, const std::string& spec) {
    Face f;
    if (spec == "full") {
        for (int i = 0; i < e.g.rank(); ++i) f.support.push_back(i);
        return f;
    }
    if (spec.empty()) return f;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int idx;
        try {
            size_t used = 0;
            idx = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad face spec token '" + tok + "'");
        }
        if (idx < 1 || idx > e.g.rank())
            throw std::invalid_argument("face index out of range: " + tok);
        f.support.push_back(idx - 1);
    }
    std::sort(f.support.begin(), f.support.end());
    f.support.erase(std::unique(f.support.begin(), f.support.end()), f.support.end());
    return f;
}

}  // namespace lrcone::lrsg
