// Generalized toric codes: generator matrix construction, dimension,
// witness-codeword evaluation, and exact minimum distance via two engines
// (plain/orbit-reduced exhaustive enumeration and Brouwer-Zimmermann).

#ifndef TORIC_CODE_HPP
#define TORIC_CODE_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "toric/gf.hpp"
#include "toric/lattice.hpp"

namespace toric {

using Exponent = std::vector<long>;

struct ToricCode {
    Field field;
    int m = 0;
    std::vector<Exponent> S;  // sorted lexicographically
    long n = 0;
    int k = 0;
    std::vector<felt> G;  // k x n, row-major; columns in lex order of f

    const felt* row(int i) const { return G.data() + static_cast<std::size_t>(i) * n; }
};

// C_S(F_q): row e, column f, entry alpha^<f,e>.
inline ToricCode build_code(const Field& F, std::vector<Exponent> S, int m) {
    if (S.empty()) throw std::invalid_argument("S must be nonempty");
    if (m < 1 || m > 3) throw std::invalid_argument("dimension m out of range");
    const long q = F.q;
    for (const Exponent& e : S) {
        if (static_cast<int>(e.size()) != m)
            throw std::invalid_argument("exponent vector has wrong dimension");
        for (long c : e)
            if (c < 0 || c > q - 2)
                throw std::invalid_argument("exponent outside [0, q-2]^m (use reduce_exponents)");
    }
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());

    long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q - 1;
        if (n > 10'000'000) throw std::invalid_argument("block length too large");
    }
    ToricCode C;
    C.field = F;
    C.m = m;
    C.S = std::move(S);
    C.n = n;
    C.k = static_cast<int>(C.S.size());
    C.G.assign(static_cast<std::size_t>(C.k) * n, 0);
    // column index j encodes f in lex order, last coordinate fastest
    std::vector<long> f(m, 0);
    for (long j = 0; j < n; ++j) {
        for (int r = 0; r < C.k; ++r) {
            long dot = 0;
            for (int i = 0; i < m; ++i) dot += f[i] * C.S[r][i];
            C.G[static_cast<std::size_t>(r) * n + j] = F.from_dlog(dot);
        }
        for (int i = m - 1; i >= 0; --i) {
            if (++f[i] <= q - 2) break;
            f[i] = 0;
        }
    }
    return C;
}

// rank of G by row reduction; the construction guarantees this equals |S|
inline int dimension(const ToricCode& C) {
    const Field& F = C.field;
    std::vector<felt> M = C.G;
    const long n = C.n;
    int rank = 0;
    for (long c = 0; c < n && rank < C.k; ++c) {
        int piv = -1;
        for (int r = rank; r < C.k; ++r)
            if (M[static_cast<std::size_t>(r) * n + c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (long j = 0; j < n; ++j)
            std::swap(M[static_cast<std::size_t>(rank) * n + j], M[static_cast<std::size_t>(piv) * n + j]);
        felt iv = F.inv(M[static_cast<std::size_t>(rank) * n + c]);
        for (long j = 0; j < n; ++j) {
            auto& x = M[static_cast<std::size_t>(rank) * n + j];
            x = F.mul(x, iv);
        }
        for (int r = 0; r < C.k; ++r) {
            if (r == rank) continue;
            felt factor = M[static_cast<std::size_t>(r) * n + c];
            if (factor == 0) continue;
            for (long j = 0; j < n; ++j) {
                auto& x = M[static_cast<std::size_t>(r) * n + j];
                x = F.sub(x, F.mul(factor, M[static_cast<std::size_t>(rank) * n + j]));
            }
        }
        ++rank;
    }
    return rank;
}

struct Codeword {
    std::vector<felt> v;
    long weight = 0;
};

inline Codeword evaluate(const ToricCode& C, const std::vector<felt>& coeffs) {
    if (static_cast<int>(coeffs.size()) != C.k)
        throw std::invalid_argument("coefficient vector length must be |S|");
    Codeword w;
    w.v.assign(C.n, 0);
    for (int r = 0; r < C.k; ++r) {
        if (coeffs[r] == 0) continue;
        const felt* row = C.row(r);
        for (long j = 0; j < C.n; ++j)
            w.v[j] = C.field.add(w.v[j], C.field.mul(coeffs[r], row[j]));
    }
    for (felt x : w.v)
        if (x != 0) ++w.weight;
    return w;
}

// A formal product  x^prefix * (u - roots[0]) * ... with u = x^sub.
struct MonomialProduct {
    Exponent prefix;          // length m
    Exponent sub;             // substitution exponent of u, length m
    std::vector<felt> roots;  // linear factors u - root
};

// Expands the product, reduces all exponents mod q-1 and returns the
// coefficient vector indexed by the sorted S.  Fails if the reduced support
// is not contained in S.
inline std::vector<felt> reduce_exponents(const ToricCode& C, const MonomialProduct& P) {
    const Field& F = C.field;
    if (static_cast<int>(P.prefix.size()) != C.m || static_cast<int>(P.sub.size()) != C.m)
        throw std::invalid_argument("exponent vectors must have dimension m");
    // univariate expansion of prod (u - root_i), low-degree-first
    std::vector<felt> poly{1};
    for (felt r : P.roots) {
        std::vector<felt> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], poly[i]);
            next[i] = F.sub(next[i], F.mul(r, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<felt> coeffs(C.k, 0);
    const long qm1 = F.q - 1;
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        Exponent e(C.m);
        for (int i = 0; i < C.m; ++i) {
            long v = (P.prefix[i] + static_cast<long>(j) * P.sub[i]) % qm1;
            if (v < 0) v += qm1;
            e[i] = v;
        }
        auto it = std::lower_bound(C.S.begin(), C.S.end(), e);
        if (it == C.S.end() || *it != e)
            throw std::invalid_argument("reduced support is not contained in S");
        int idx = static_cast<int>(it - C.S.begin());
        coeffs[idx] = F.add(coeffs[idx], poly[j]);
    }
    return coeffs;
}

struct EngineOptions {
    bool orbits = false;
    int workers = 1;
};

namespace detail {

// Scaled generator rows: scaled[r][a] = a * row_r, as one flat array.
struct ScaledRows {
    long n;
    int q;
    std::vector<felt> data;  // k * q * n

    ScaledRows(const ToricCode& C) : n(C.n), q(C.field.q) {
        data.assign(static_cast<std::size_t>(C.k) * q * n, 0);
        for (int r = 0; r < C.k; ++r) {
            const felt* row = C.row(r);
            for (int a = 1; a < q; ++a) {
                felt* dst = at(r, a);
                for (long j = 0; j < n; ++j) dst[j] = C.field.mul(static_cast<felt>(a), row[j]);
            }
        }
    }
    felt* at(int r, int a) {
        return data.data() + (static_cast<std::size_t>(r) * q + a) * n;
    }
    const felt* at(int r, int a) const {
        return data.data() + (static_cast<std::size_t>(r) * q + a) * n;
    }
};

// Delta rows for odometer stepping: delta[r][a] = (a' - a) * row_r where a'
// is the value following a in the fixed element order 0,1,...,q-1,0.
struct DeltaRows {
    long n;
    int q;
    std::vector<felt> data;

    DeltaRows(const ToricCode& C) : n(C.n), q(C.field.q) {
        data.assign(static_cast<std::size_t>(C.k) * q * n, 0);
        for (int r = 0; r < C.k; ++r) {
            const felt* row = C.row(r);
            for (int a = 0; a < q; ++a) {
                felt d = C.field.sub(static_cast<felt>((a + 1) % q), static_cast<felt>(a));
                felt* dst = at(r, a);
                for (long j = 0; j < n; ++j) dst[j] = C.field.mul(d, row[j]);
            }
        }
    }
    felt* at(int r, int a) { return data.data() + (static_cast<std::size_t>(r) * q + a) * n; }
    const felt* at(int r, int a) const {
        return data.data() + (static_cast<std::size_t>(r) * q + a) * n;
    }
};

inline long add_count(felt* cw, const felt* delta, const felt* addtab, int q, long n) {
    long w = 0;
    for (long j = 0; j < n; ++j) {
        felt v = addtab[static_cast<std::size_t>(cw[j]) * q + delta[j]];
        cw[j] = v;
        w += v != 0;
    }
    return w;
}

inline void add_plain(felt* cw, const felt* delta, const felt* addtab, int q, long n) {
    for (long j = 0; j < n; ++j)
        cw[j] = addtab[static_cast<std::size_t>(cw[j]) * q + delta[j]];
}

// Enumerate all messages with fixed digits [0, first_free) given by `base`
// (already accumulated into cw) and free digits [first_free, k); returns the
// minimum nonzero-codeword weight seen, including the base message itself.
inline long enumerate_block(const ToricCode& C, const DeltaRows& D, const felt* addtab,
                            std::vector<felt> cw, int first_free) {
    const int q = C.field.q;
    const int k = C.k;
    const long n = C.n;
    long best = 0;
    for (felt x : cw)
        best += x != 0;
    if (first_free >= k) return best;
    std::vector<int> dig(k, 0);
    double total_d = std::pow(static_cast<double>(q), k - first_free);
    long total = static_cast<long>(total_d + 0.5);
    for (long step = 1; step < total; ++step) {
        int pos = k - 1;
        while (dig[pos] == q - 1) {
            add_plain(cw.data(), D.at(pos, q - 1), addtab, q, n);
            dig[pos] = 0;
            --pos;
        }
        long w = add_count(cw.data(), D.at(pos, dig[pos]), addtab, q, n);
        ++dig[pos];
        if (w < best) best = w;
    }
    return best;
}

struct Job {
    int pivot;                 // first support position, coefficient 1
    int second = -1;           // second fixed digit position (-1: none fixed)
    felt second_value = 0;
    int first_free;            // odometer starts here
};

inline long run_jobs(const ToricCode& C, const std::vector<Job>& jobs, int workers) {
    DeltaRows D(C);
    std::vector<felt> addtab = C.field.make_add_table();
    std::atomic<std::size_t> next{0};
    std::vector<long> results(jobs.size(), std::numeric_limits<long>::max());
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const Job& jb = jobs[i];
            std::vector<felt> cw(C.row(jb.pivot), C.row(jb.pivot) + C.n);
            if (jb.second >= 0 && jb.second_value != 0) {
                for (long j = 0; j < C.n; ++j)
                    cw[j] = C.field.add(cw[j], C.field.mul(jb.second_value, C.row(jb.second)[j]));
            }
            results[i] = enumerate_block(C, D, addtab.data(), std::move(cw), jb.first_free);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    long best = std::numeric_limits<long>::max();
    for (long r : results) best = std::min(best, r);
    return best;
}

}  // namespace detail

// Exact minimum distance by enumerating coefficient vectors with the first
// nonzero coordinate normalized to 1.  With orbits enabled, the first nonzero
// coordinate after the pivot is additionally restricted to one representative
// per torus orbit (the torus action permutes codeword coordinates, so weights
// are orbit invariants).
inline long min_distance_exhaustive(const ToricCode& C, EngineOptions opts = {}) {
    const long q = C.field.q;
    const int k = C.k;
    double cost = (std::pow(static_cast<double>(q), k) - 1) / (q - 1);
    double limit = opts.orbits ? 1e8 * (q - 1) * (q - 1) : 1e8;
    if (cost > limit) throw std::invalid_argument("instance too large for exhaustive engine");

    std::vector<detail::Job> jobs;
    const long qm1 = q - 1;
    if (!opts.orbits) {
        for (int i = 0; i < k; ++i) {
            if (i == k - 1) {
                jobs.push_back({i, -1, 0, k});
            } else {
                for (int v = 0; v < q; ++v)
                    jobs.push_back({i, i + 1, static_cast<felt>(v), i + 2});
            }
        }
    } else {
        for (int i = 0; i < k; ++i) {
            jobs.push_back({i, -1, 0, k});  // support {i} alone
            for (int j = i + 1; j < k; ++j) {
                long g = qm1;
                for (int c = 0; c < C.m; ++c) {
                    long d = (C.S[j][c] - C.S[i][c]) % qm1;
                    if (d < 0) d += qm1;
                    g = std::gcd(g, d);
                }
                // c_j ranges over alpha^t, t in [0, g)
                for (long t = 0; t < g; ++t)
                    jobs.push_back({i, j, C.field.from_dlog(t), j + 1});
            }
        }
    }
    return detail::run_jobs(C, jobs, opts.workers);
}

// ---------------------------------------------------------------------------
// Brouwer-Zimmermann

namespace detail {

struct BZMatrix {
    std::vector<felt> rows;  // k x n
    int redundancy = 0;      // k - (pivots drawn from previously unused columns)
};

inline std::vector<BZMatrix> bz_matrices(const ToricCode& C) {
    const Field& F = C.field;
    const long n = C.n;
    const int k = C.k;
    std::vector<bool> used(n, false);
    std::vector<BZMatrix> out;
    long remaining = n;
    while (remaining > 0) {
        std::vector<felt> M = C.G;
        std::vector<long> order;
        for (long c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        for (long c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);
        int rank = 0;
        int fresh = 0;
        std::vector<long> fresh_pivots;
        for (long c : order) {
            if (rank == k) break;
            int piv = -1;
            for (int r = rank; r < k; ++r)
                if (M[static_cast<std::size_t>(r) * n + c] != 0) { piv = r; break; }
            if (piv < 0) continue;
            for (long j = 0; j < n; ++j)
                std::swap(M[static_cast<std::size_t>(rank) * n + j],
                          M[static_cast<std::size_t>(piv) * n + j]);
            felt iv = F.inv(M[static_cast<std::size_t>(rank) * n + c]);
            for (long j = 0; j < n; ++j) {
                auto& x = M[static_cast<std::size_t>(rank) * n + j];
                x = F.mul(x, iv);
            }
            for (int r = 0; r < k; ++r) {
                if (r == rank) continue;
                felt f = M[static_cast<std::size_t>(r) * n + c];
                if (f == 0) continue;
                for (long j = 0; j < n; ++j) {
                    auto& x = M[static_cast<std::size_t>(r) * n + j];
                    x = F.sub(x, F.mul(f, M[static_cast<std::size_t>(rank) * n + j]));
                }
            }
            if (!used[c]) {
                ++fresh;
                fresh_pivots.push_back(c);
            }
            ++rank;
        }
        if (fresh == 0) break;  // leftover columns carry no new information set
        for (long c : fresh_pivots) {
            used[c] = true;
            --remaining;
        }
        out.push_back({std::move(M), k - fresh});
    }
    return out;
}

// enumerate all messages of exact support weight w (first support coeff 1)
// over one systematic matrix, maintaining partial codeword sums
struct BZEnum {
    const Field& F;
    const ScaledRows& scaled;
    long n;
    int k, q;
    long best;
    std::vector<std::vector<felt>> partial;  // per depth

    long run(int w, long ub) {
        best = ub;
        partial.assign(w + 1, std::vector<felt>(n, 0));
        rec(0, w, 0, true);
        return best;
    }

    void rec(int from, int remaining, int depth, bool first) {
        for (int pos = from; pos <= k - remaining; ++pos) {
            int hi = first ? 1 : q - 1;  // first support coefficient normalized to 1
            for (int a = 1; a <= hi; ++a) {
                const felt* add = scaled.at(pos, a);
                const felt* src = partial[depth].data();
                felt* dst = partial[depth + 1].data();
                if (remaining == 1) {
                    long w = 0;
                    for (long j = 0; j < n; ++j) {
                        felt v = F.add(src[j], add[j]);
                        w += v != 0;
                    }
                    if (w < best && w > 0) best = w;
                } else {
                    for (long j = 0; j < n; ++j) dst[j] = F.add(src[j], add[j]);
                    rec(pos + 1, remaining - 1, depth + 1, false);
                }
            }
        }
    }
};

}  // namespace detail

// Exact minimum distance via successive systematic generator matrices over a
// greedy cover of disjoint information sets.
inline long min_distance_bz(const ToricCode& C) {
    if (C.k > 20 || C.n > 4096) throw std::invalid_argument("instance too large for BZ engine");
    auto mats = detail::bz_matrices(C);
    std::vector<detail::ScaledRows> scaled;
    scaled.reserve(mats.size());
    for (auto& m : mats) {
        ToricCode V = C;
        V.G = m.rows;
        scaled.emplace_back(V);
    }
    long ub = std::numeric_limits<long>::max();
    long completed_lb = 0;
    for (int w = 1; w <= C.k; ++w) {
        for (std::size_t t = 0; t < mats.size(); ++t) {
            detail::BZEnum e{C.field, scaled[t], C.n, C.k, C.field.q, 0, {}};
            long found = e.run(w, ub);
            if (found < completed_lb)
                throw std::logic_error("BZ consistency failure: codeword below proven bound");
            ub = std::min(ub, found);
        }
        long lb = 0;
        for (const auto& m : mats) lb += std::max(0, (w + 1) - m.redundancy);
        completed_lb = lb;
        if (lb >= ub) return ub;
    }
    return ub;  // full message space enumerated
}

// ---------------------------------------------------------------------------
// Theorem-based prediction for d(C_S) when the maximal subpolygon is a
// repeated primitive segment.

struct TheoremPrediction {
    bool applicable = false;
    std::string reason;  // failed hypothesis when not applicable
    long d = 0;          // (q-1)^2 - L(q-1), valid for large characteristic
};

inline TheoremPrediction predict_d_theorem(const Polygon& P, const PointSet& S, long q) {
    TheoremPrediction out;
    auto r = minkowski_length(P);
    auto qs = r.distinct_sums();
    if (qs.size() != 1) {
        out.reason = "maximal subpolygon is not unique";
        return out;
    }
    const Polygon& Q = qs[0];
    if (Q.dim != 1) {
        out.reason = "maximal subpolygon is not a repeated primitive segment";
        return out;
    }
    // all placements of Q inside P must agree for "unique Q subset P"
    std::vector<Pt> placements;
    {
        long tx0 = P.min_x() - Q.min_x(), tx1 = P.max_x() - Q.max_x();
        long ty0 = P.min_y() - Q.min_y(), ty1 = P.max_y() - Q.max_y();
        for (long tx = tx0; tx <= tx1; ++tx)
            for (long ty = ty0; ty <= ty1; ++ty) {
                bool ok = true;
                for (Pt v : Q.verts)
                    if (!P.contains({v.x + tx, v.y + ty})) { ok = false; break; }
                if (ok) placements.push_back({tx, ty});
            }
    }
    if (placements.size() != 1) {
        out.reason = "maximal segment fits at several positions";
        return out;
    }
    Pt A = Q.verts[0] + placements[0];
    Pt B = Q.verts[1] + placements[0];
    Pt d = B - A;
    long ell = std::gcd(std::abs(d.x), std::abs(d.y));
    Pt dir{d.x / ell, d.y / ell};
    auto contains = [&](Pt p) { return std::find(S.begin(), S.end(), p) != S.end(); };
    if (!contains(A) || !contains(B)) {
        out.reason = "S does not contain both endpoints of Q";
        return out;
    }
    long g = 0;
    for (Pt s : S) {
        Pt rel = s - A;
        if (rel.x * dir.y - rel.y * dir.x != 0) continue;  // not on the line
        long j = dir.x != 0 ? rel.x / dir.x : rel.y / dir.y;
        if (j < 0 || j > ell) continue;
        if (j > 0) g = std::gcd(g, j);
    }
    if (g != 1) {
        out.reason = "exponents along Q share a common factor " + std::to_string(g);
        return out;
    }
    out.applicable = true;
    out.d = (q - 1) * (q - 1) - ell * (q - 1);
    return out;
}

}  // namespace toric

#endif  // TORIC_CODE_HPP
