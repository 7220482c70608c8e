// Lattice-point geometry in the plane: convex hulls, Minkowski sums,
// recognition of the exceptional triangle T0 = conv{(0,0),(1,2),(2,1)},
// full Minkowski length L(P), and the associated minimum-distance bounds.

#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct Pt {
    long x = 0;
    long y = 0;
    friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
    friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(Pt a, Pt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

inline long cross(Pt o, Pt a, Pt b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

using PointSet = std::vector<Pt>;

inline PointSet sorted_unique(PointSet pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Convex polygon with CCW vertex order.  Degenerate cases (segment, single
// point) are permitted and carry their affine dimension.
struct Polygon {
    std::vector<Pt> verts;  // extreme points, CCW for dim 2
    int dim = -1;

    long min_x() const { return min_coord(&Pt::x); }
    long max_x() const { return max_coord(&Pt::x); }
    long min_y() const { return min_coord(&Pt::y); }
    long max_y() const { return max_coord(&Pt::y); }
    long width_x() const { return max_x() - min_x(); }
    long width_y() const { return max_y() - min_y(); }

    // 2x the Euclidean area (shoelace), 0 for degenerate polygons
    long area2() const {
        long s = 0;
        const int n = static_cast<int>(verts.size());
        for (int i = 0; i < n; ++i) {
            Pt a = verts[i], b = verts[(i + 1) % n];
            s += a.x * b.y - a.y * b.x;
        }
        return s;
    }

    bool contains(Pt p) const {
        const int n = static_cast<int>(verts.size());
        if (n == 0) return false;
        if (dim == 0) return p == verts[0];
        if (dim == 1) {
            Pt a = verts[0], b = verts[1];
            if (cross(a, b, p) != 0) return false;
            return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                   std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
        }
        for (int i = 0; i < n; ++i)
            if (cross(verts[i], verts[(i + 1) % n], p) < 0) return false;
        return true;
    }

    Polygon translated(Pt t) const {
        Polygon r = *this;
        for (Pt& v : r.verts) v = v + t;
        return r;
    }

    // translate so the lexicographically smallest vertex is at the origin
    Polygon canonical() const {
        Pt m = *std::min_element(verts.begin(), verts.end());
        return translated({-m.x, -m.y});
    }

    friend bool operator==(const Polygon& a, const Polygon& b) {
        return a.verts == b.verts;
    }
    friend bool operator<(const Polygon& a, const Polygon& b) {
        return a.verts < b.verts;
    }

  private:
    long min_coord(long Pt::* c) const {
        long m = verts[0].*c;
        for (const Pt& v : verts) m = std::min(m, v.*c);
        return m;
    }
    long max_coord(long Pt::* c) const {
        long m = verts[0].*c;
        for (const Pt& v : verts) m = std::max(m, v.*c);
        return m;
    }
};

// Monotone chain; collinear points on the boundary are dropped so vertices
// are exactly the extreme points.
inline Polygon convex_hull(const PointSet& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull of empty set");
    PointSet p = sorted_unique(points);
    Polygon poly;
    if (p.size() == 1) {
        poly.verts = p;
        poly.dim = 0;
        return poly;
    }
    const int n = static_cast<int>(p.size());
    std::vector<Pt> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
        hull[k++] = p[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
        hull[k++] = p[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2) {
        poly.verts = {std::min(hull[0], hull[1]), std::max(hull[0], hull[1])};
        poly.dim = 1;
        return poly;
    }
    // monotone chain with <= gives CW for this orientation convention; fix up
    Polygon tmp;
    tmp.verts = hull;
    if (tmp.area2() < 0) std::reverse(tmp.verts.begin(), tmp.verts.end());
    tmp.dim = 2;
    // rotate so the lexicographically smallest vertex is first (stable identity)
    auto it = std::min_element(tmp.verts.begin(), tmp.verts.end());
    std::rotate(tmp.verts.begin(), it, tmp.verts.end());
    return tmp;
}

inline PointSet lattice_points(const Polygon& P) {
    PointSet out;
    if (P.verts.empty()) return out;
    for (long x = P.min_x(); x <= P.max_x(); ++x)
        for (long y = P.min_y(); y <= P.max_y(); ++y)
            if (P.contains({x, y})) out.push_back({x, y});
    return out;
}

inline Polygon minkowski_sum(const Polygon& A, const Polygon& B) {
    if (A.verts.empty() || B.verts.empty())
        throw std::invalid_argument("minkowski_sum of empty polygon");
    if (A.dim == 2 && B.dim == 2) {
        // classic edge merge: sort the CCW edge vectors of both polygons by
        // angle (starting at direction (1,0)) and walk them from the summed
        // bottom-left vertices
        auto edges = [](const Polygon& P) {
            std::vector<Pt> e;
            const int n = static_cast<int>(P.verts.size());
            for (int i = 0; i < n; ++i) e.push_back(P.verts[(i + 1) % n] - P.verts[i]);
            return e;
        };
        auto bottom_left = [](const Polygon& P) {
            Pt m = P.verts[0];
            for (Pt v : P.verts)
                if (v.y < m.y || (v.y == m.y && v.x < m.x)) m = v;
            return m;
        };
        auto angle_less = [](Pt a, Pt b) {
            auto half = [](Pt v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
            if (half(a) != half(b)) return half(a) < half(b);
            return a.x * b.y - a.y * b.x > 0;
        };
        std::vector<Pt> merged = edges(A);
        std::vector<Pt> eb = edges(B);
        merged.insert(merged.end(), eb.begin(), eb.end());
        std::stable_sort(merged.begin(), merged.end(), angle_less);
        Pt cur = bottom_left(A) + bottom_left(B);
        PointSet vs{cur};
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            cur = cur + merged[i];
            vs.push_back(cur);
        }
        return convex_hull(vs);
    }
    PointSet sums;
    for (Pt a : A.verts)
        for (Pt b : B.verts) sums.push_back(a + b);
    return convex_hull(sums);
}

// Unimodular affine map x -> M x + t with integer M, det(M) = +-1.
struct UniModMap {
    std::array<long, 4> m{1, 0, 0, 1};  // row-major
    Pt t{0, 0};
    Pt apply(Pt v) const { return {m[0] * v.x + m[1] * v.y + t.x, m[2] * v.x + m[3] * v.y + t.y}; }
};

inline const std::array<Pt, 3>& t0_vertices() {
    static const std::array<Pt, 3> v{Pt{0, 0}, Pt{1, 2}, Pt{2, 1}};
    return v;
}

// If T is lattice-affine equivalent to T0, returns a map carrying T0 onto T.
inline std::optional<UniModMap> is_exceptional_triangle(const Polygon& T) {
    if (T.dim != 2 || T.verts.size() != 3) return std::nullopt;
    if (std::abs(T.area2()) != 3) return std::nullopt;  // area of T0 is 3/2
    const auto& v0 = t0_vertices();
    std::vector<UniModMap> valid;
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        Pt w0 = T.verts[perm[0]], w1 = T.verts[perm[1]], w2 = T.verts[perm[2]];
        // solve M*(1,2) = w1-w0, M*(2,1) = w2-w0; the basis matrix has det -3
        Pt d1 = w1 - w0, d2 = w2 - w0;
        long a3 = -(d1.x * 1 - d2.x * 2);  // 3*m00
        long b3 = -(d2.x * 1 - d1.x * 2);  // 3*m01
        long c3 = -(d1.y * 1 - d2.y * 2);
        long d3 = -(d2.y * 1 - d1.y * 2);
        if (a3 % 3 || b3 % 3 || c3 % 3 || d3 % 3) continue;
        UniModMap M;
        M.m = {a3 / 3, b3 / 3, c3 / 3, d3 / 3};
        long det = M.m[0] * M.m[3] - M.m[1] * M.m[2];
        if (det != 1 && det != -1) continue;
        M.t = w0;  // since M*(0,0) = 0
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (!(M.apply(v0[i]) == T.verts[perm[i]])) ok = false;
        if (ok) valid.push_back(M);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (valid.empty()) return std::nullopt;
    // deterministic choice, preferring the identity matrix when available
    auto key = [](const UniModMap& M) {
        bool ident = M.m == std::array<long, 4>{1, 0, 0, 1};
        return std::make_tuple(!ident, M.m, std::make_pair(M.t.x, M.t.y));
    };
    return *std::min_element(valid.begin(), valid.end(),
                             [&](const UniModMap& a, const UniModMap& b) { return key(a) < key(b); });
}

// One summand of a Minkowski decomposition: either a primitive lattice
// segment (stored by direction) or a copy of the exceptional triangle.
struct Summand {
    enum Kind { Segment, T0Copy } kind = Segment;
    Pt dir{0, 0};       // Segment: primitive direction, canonical sign
    Polygon triangle;   // T0Copy: canonical translate of the image triangle

    Polygon shape() const {
        if (kind == Segment) return convex_hull({Pt{0, 0}, dir});
        return triangle;
    }
    friend bool operator<(const Summand& a, const Summand& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Segment) return a.dir < b.dir;
        return a.triangle < b.triangle;
    }
    friend bool operator==(const Summand& a, const Summand& b) {
        return a.kind == b.kind && a.dir == b.dir && a.triangle.verts == b.triangle.verts;
    }
};

struct Decomposition {
    std::vector<Summand> summands;  // sorted
    Polygon sum;                    // canonical translate of the Minkowski sum
    Pt translation{0, 0};           // one placement: sum + translation lies in P

    bool has_t0() const {
        for (const auto& s : summands)
            if (s.kind == Summand::T0Copy) return true;
        return false;
    }
};

struct MinkLengthResult {
    long length = 0;
    std::vector<Decomposition> decompositions;  // all maximal ones
    bool any_t0 = false;

    // distinct maximal subpolygons Q, up to translation
    std::vector<Polygon> distinct_sums() const {
        std::vector<Polygon> qs;
        for (const auto& d : decompositions)
            if (std::find(qs.begin(), qs.end(), d.sum) == qs.end()) qs.push_back(d.sum);
        return qs;
    }
};

namespace detail {

// Does some translate of Q lie inside P?  Vertices suffice by convexity.
inline std::optional<Pt> find_fit(const Polygon& P, const Polygon& Q) {
    long tx0 = P.min_x() - Q.min_x(), tx1 = P.max_x() - Q.max_x();
    long ty0 = P.min_y() - Q.min_y(), ty1 = P.max_y() - Q.max_y();
    for (long tx = tx0; tx <= tx1; ++tx)
        for (long ty = ty0; ty <= ty1; ++ty) {
            bool ok = true;
            for (Pt v : Q.verts)
                if (!P.contains({v.x + tx, v.y + ty})) { ok = false; break; }
            if (ok) return Pt{tx, ty};
        }
    return std::nullopt;
}

inline long gcdl(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

inline std::vector<Summand> candidate_summands(const Polygon& P) {
    std::vector<Summand> cands;
    const long wx = P.width_x(), wy = P.width_y();
    for (long r = -wx; r <= wx; ++r) {
        for (long s = 0; s <= wy; ++s) {
            if (s == 0 && r <= 0) continue;  // canonical sign: s>0, or s==0 && r>0
            if (gcdl(r, s) != 1) continue;
            Summand c;
            c.kind = Summand::Segment;
            c.dir = {r, s};
            if (find_fit(P, c.shape())) cands.push_back(c);
        }
    }
    // images of T0 under unimodular maps whose bounding box fits in P's box
    const long w = std::max({wx, wy, 2L});
    std::set<std::vector<Pt>> seen;
    for (long a = -w; a <= w; ++a)
        for (long b = -w; b <= w; ++b)
            for (long c = -w; c <= w; ++c)
                for (long d = -w; d <= w; ++d) {
                    long det = a * d - b * c;
                    if (det != 1 && det != -1) continue;
                    UniModMap M;
                    M.m = {a, b, c, d};
                    PointSet vs;
                    for (Pt v : t0_vertices()) vs.push_back(M.apply(v));
                    Polygon T = convex_hull(vs).canonical();
                    if (T.width_x() > wx || T.width_y() > wy) continue;
                    if (!seen.insert(T.verts).second) continue;
                    if (!find_fit(P, T)) continue;
                    Summand cand;
                    cand.kind = Summand::T0Copy;
                    cand.triangle = T;
                    cands.push_back(cand);
                }
    std::sort(cands.begin(), cands.end());
    return cands;
}

struct MinkSearch {
    const Polygon& P;
    const std::vector<Summand>& cands;
    std::vector<int> chosen;
    long best = 0;
    std::vector<Decomposition> found;

    void record(const Polygon& sum) {
        long depth = static_cast<long>(chosen.size());
        if (depth < best) return;
        if (depth > best) {
            best = depth;
            found.clear();
        }
        Decomposition d;
        for (int i : chosen) d.summands.push_back(cands[i]);
        std::sort(d.summands.begin(), d.summands.end());
        d.sum = sum.canonical();
        Pt base = *std::min_element(sum.verts.begin(), sum.verts.end());
        Pt fit = *find_fit(P, sum);
        d.translation = base + fit;  // canonical sum + translation sits in P
        for (const auto& e : found)
            if (e.summands == d.summands) return;
        found.push_back(d);
    }

    void dfs(int from, const Polygon& sum) {
        if (!chosen.empty()) record(sum);
        for (int i = from; i < static_cast<int>(cands.size()); ++i) {
            Polygon next = chosen.empty() ? cands[i].shape() : minkowski_sum(sum, cands[i].shape());
            if (next.width_x() > P.width_x() || next.width_y() > P.width_y()) continue;
            if (std::abs(next.area2()) > std::abs(P.area2())) continue;
            if (!find_fit(P, next)) continue;
            chosen.push_back(i);
            dfs(i, next);
            chosen.pop_back();
        }
    }
};

}  // namespace detail

// Full Minkowski length of P together with every maximal decomposition into
// primitive segments and exceptional-triangle copies.  Search completeness at
// this scale rests on the classification of maximal summands (segments and
// T0 images only) and is cross-checked against a naive oracle in the tests.
inline MinkLengthResult minkowski_length(const Polygon& P) {
    if (P.dim < 1) throw std::invalid_argument("minkowski_length needs dim >= 1");
    if (P.width_x() > 12 || P.width_y() > 12)
        throw std::invalid_argument("polygon box too large (side > 12)");

    if (P.dim == 1) {
        Pt d = P.verts[1] - P.verts[0];
        long len = detail::gcdl(d.x, d.y);
        Pt prim{d.x / len, d.y / len};
        if (prim.y < 0 || (prim.y == 0 && prim.x < 0)) prim = {-prim.x, -prim.y};
        MinkLengthResult r;
        r.length = len;
        Decomposition dec;
        Summand s;
        s.kind = Summand::Segment;
        s.dir = prim;
        dec.summands.assign(len, s);
        dec.sum = P.canonical();
        dec.translation = *std::min_element(P.verts.begin(), P.verts.end());
        r.decompositions.push_back(dec);
        return r;
    }

    auto cands = detail::candidate_summands(P);
    detail::MinkSearch search{P, cands, {}, 0, {}};
    Polygon dummy;
    search.dfs(0, dummy);
    MinkLengthResult r;
    r.length = search.best;
    r.decompositions = std::move(search.found);
    std::sort(r.decompositions.begin(), r.decompositions.end(),
              [](const Decomposition& a, const Decomposition& b) {
                  if (!(a.sum == b.sum)) return a.sum < b.sum;
                  return std::lexicographical_compare(a.summands.begin(), a.summands.end(),
                                                      b.summands.begin(), b.summands.end());
              });
    for (const auto& d : r.decompositions)
        if (d.has_t0()) r.any_t0 = true;
    return r;
}

struct SSBounds {
    long with_t0 = 0;     // (q-1)^2 - L(q-1) - floor(2 sqrt q) + 1
    long without_t0 = 0;  // (q-1)^2 - L(q-1)
};

inline SSBounds ss_lower_bound(long L, long q) {
    if (q < 3) throw std::invalid_argument("q must be >= 3");
    long isqrt = static_cast<long>(std::sqrt(static_cast<double>(4 * q)));
    while (isqrt * isqrt > 4 * q) --isqrt;
    while ((isqrt + 1) * (isqrt + 1) <= 4 * q) ++isqrt;
    SSBounds b;
    b.without_t0 = (q - 1) * (q - 1) - L * (q - 1);
    b.with_t0 = b.without_t0 - isqrt + 1;
    return b;
}

inline SSBounds ss_lower_bound(const Polygon& P, long q) {
    return ss_lower_bound(minkowski_length(P).length, q);
}

}  // namespace toric

#endif  // TORIC_LATTICE_HPP
