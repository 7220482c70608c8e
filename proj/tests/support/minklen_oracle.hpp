// Naive Minkowski-length oracle, independent of the search in lattice.hpp.
//
// Enumerates every subpolygon Q of P (hulls of subsets of lattice points) and
// computes the maximal number of positive-dimensional summands of Q by
// recursive brute force over edge splittings: a summand of a convex polygon
// takes an integer sub-length of each edge subject to the edge vectors
// closing up.

#ifndef TORIC_TEST_MINKLEN_ORACLE_HPP
#define TORIC_TEST_MINKLEN_ORACLE_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::oracle {

struct Edge {
    Pt dir;    // primitive
    long len;  // lattice length
};

inline std::vector<Edge> edge_system(const Polygon& Q) {
    std::vector<Edge> es;
    if (Q.dim == 1) {
        Pt d = Q.verts[1] - Q.verts[0];
        long g = std::gcd(std::abs(d.x), std::abs(d.y));
        es.push_back({{d.x / g, d.y / g}, g});
        es.push_back({{-d.x / g, -d.y / g}, g});
        return es;
    }
    const int n = static_cast<int>(Q.verts.size());
    for (int i = 0; i < n; ++i) {
        Pt d = Q.verts[(i + 1) % n] - Q.verts[i];
        long g = std::gcd(std::abs(d.x), std::abs(d.y));
        es.push_back({{d.x / g, d.y / g}, g});
    }
    return es;
}

// rebuild a polygon (based at the origin) from an edge sub-system; returns
// nullopt if the system does not close up or is trivial
inline std::optional<Polygon> from_edges(const std::vector<Edge>& es) {
    Pt sum{0, 0};
    long total = 0;
    for (const Edge& e : es) {
        sum = sum + Pt{e.dir.x * e.len, e.dir.y * e.len};
        total += e.len;
    }
    if (sum.x != 0 || sum.y != 0 || total == 0) return std::nullopt;
    PointSet pts{{0, 0}};
    Pt cur{0, 0};
    for (const Edge& e : es) {
        for (long i = 0; i < e.len; ++i) {
            cur = cur + e.dir;
            pts.push_back(cur);
        }
    }
    return convex_hull(pts);
}

inline std::string key_of(const Polygon& Q) {
    std::string k;
    for (Pt v : Q.canonical().verts)
        k += std::to_string(v.x) + "," + std::to_string(v.y) + ";";
    return k;
}

// maximal number of positive-dimensional Minkowski summands of exactly Q
inline long summand_count(const Polygon& Q, std::map<std::string, long>& memo) {
    std::string k = key_of(Q);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    memo[k] = 1;  // guards against cycles; overwritten below

    auto es = edge_system(Q);
    const int ne = static_cast<int>(es.size());
    long best = 1;
    std::vector<long> t(ne, 0);
    while (true) {
        // advance the odometer over 0..len per edge
        int i = 0;
        while (i < ne && t[i] == es[i].len) { t[i] = 0; ++i; }
        if (i == ne) break;
        ++t[i];
        bool all_zero = true, all_full = true;
        for (int j = 0; j < ne; ++j) {
            if (t[j] != 0) all_zero = false;
            if (t[j] != es[j].len) all_full = false;
        }
        if (all_zero || all_full) continue;
        std::vector<Edge> ea, eb;
        for (int j = 0; j < ne; ++j) {
            if (t[j] > 0) ea.push_back({es[j].dir, t[j]});
            if (es[j].len - t[j] > 0) eb.push_back({es[j].dir, es[j].len - t[j]});
        }
        auto A = from_edges(ea);
        auto B = from_edges(eb);
        if (!A || !B) continue;
        best = std::max(best, summand_count(*A, memo) + summand_count(*B, memo));
    }
    memo[k] = best;
    return best;
}

// L(P) by enumerating hulls of all subsets of lattice points (<= 20 points)
inline long minkowski_length_naive(const Polygon& P) {
    PointSet pts = lattice_points(P);
    const int n = static_cast<int>(pts.size());
    if (n > 20) throw std::invalid_argument("oracle limited to <= 20 lattice points");
    std::map<std::string, long> memo;
    std::map<std::string, bool> seen;
    long best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        PointSet sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(pts[i]);
        Polygon Q = convex_hull(sub);
        if (Q.dim < 1) continue;
        std::string k = key_of(Q);
        if (seen[k]) continue;
        seen[k] = true;
        best = std::max(best, summand_count(Q, memo));
    }
    return best;
}

}  // namespace toric::oracle

#endif
