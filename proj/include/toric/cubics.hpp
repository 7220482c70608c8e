// The cubic family a x^2 y + b x y^2 + c x y z + d z^3: torus point counts,
// singularity tests, 3-divisibility and supersingular scans, and the induced
// minimum-distance predictions for the exceptional-triangle codes.

#ifndef TORIC_CUBICS_HPP
#define TORIC_CUBICS_HPP

#include <cmath>
#include <map>
#include <optional>

#include "toric/code.hpp"
#include "toric/gf.hpp"
#include "toric/polyfact.hpp"

namespace toric {

struct CubicMember {
    felt a = 0, b = 0, c = 0, d = 0;
    bool nondegenerate() const { return a != 0 && b != 0 && d != 0; }
};

struct CubicCount {
    long n_tor = 0;   // zeros in the torus (GF(q)^x)^2
    long n_proj = -1; // n_tor + 3 when abd != 0 (three points at infinity,
                      // no affine points off the torus); -1 otherwise
};

inline CubicCount torus_count(const Field& F, CubicMember m) {
    CubicCount out;
    const long q = F.q;
    for (long x = 1; x < q; ++x) {
        felt fx = static_cast<felt>(x);
        felt ax2 = F.mul(m.a, F.mul(fx, fx));
        felt bx = F.mul(m.b, fx);
        felt cx = F.mul(m.c, fx);
        for (long y = 1; y < q; ++y) {
            felt fy = static_cast<felt>(y);
            // a x^2 y + b x y^2 + c x y + d
            felt v = F.mul(F.add(F.add(ax2, F.mul(bx, fy)), cx), fy);
            if (F.add(v, m.d) == 0) ++out.n_tor;
        }
    }
    if (m.nondegenerate()) out.n_proj = out.n_tor + 3;
    return out;
}

// Field embedding GF(q) -> GF(q^e), determined by sending alpha to the
// smallest root of its minimal polynomial in the big field.
struct Embedding {
    const Field* from;
    const Field* to;
    felt root;

    felt operator()(felt x) const {
        return x == 0 ? felt{0} : to->pow(root, from->dlog(x));
    }

    static Embedding make(const Field& F, const Field& E) {
        if (E.p != F.p || E.h % F.h != 0)
            throw std::invalid_argument("no embedding between these fields");
        // minimal polynomial of alpha over GF(p): product over conjugates
        UniPoly mp{{1}};
        felt conj = F.alpha;
        for (int i = 0; i < F.h; ++i) {
            mp = detail::upmul(F, mp, UniPoly{{F.neg(conj), 1}});
            conj = F.pow(conj, F.p);
        }
        for (felt cf : mp.c)
            if (cf >= F.p) throw std::logic_error("minimal polynomial not over GF(p)");
        // prime-field values encode identically in both fields
        for (long x = 1; x < E.q; ++x) {
            if (detail::upeval(E, mp, static_cast<felt>(x)) == 0)
                return {&F, &E, static_cast<felt>(x)};
        }
        throw std::logic_error("minimal polynomial has no root in the extension");
    }
};

// c^3 = -27 a b d (the d = 1 normalization gives c^3 = -27 a b), meaningful
// in every characteristic; the singular-point coordinates need p >= 5.
inline bool singular_closed_form(const Field& F, CubicMember m) {
    felt lhs = F.pow(m.c, 3);
    felt rhs = F.neg(F.mul(F.from_int(27), F.mul(F.mul(m.a, m.b), m.d)));
    return lhs == rhs;
}

struct SingularVerdict {
    bool singular = false;
    int ext_degree = 0;  // least e with a singular point over GF(q^e)
    felt x = 0, y = 0, z = 0;
};

namespace detail {

inline bool singular_point_scan(const Field& E, CubicMember m, SingularVerdict& out, int e) {
    auto probe = [&](felt x, felt y, felt z) {
        felt xy = E.mul(x, y);
        felt f = E.add(E.add(E.mul(E.mul(m.a, x), xy), E.mul(E.mul(m.b, y), xy)),
                       E.add(E.mul(E.mul(m.c, z), xy), E.mul(m.d, E.pow(z, 3))));
        if (f != 0) return false;
        felt two = E.from_int(2), three = E.from_int(3);
        felt fx = E.add(E.add(E.mul(two, E.mul(m.a, xy)), E.mul(m.b, E.mul(y, y))),
                        E.mul(m.c, E.mul(y, z)));
        felt fy = E.add(E.add(E.mul(m.a, E.mul(x, x)), E.mul(two, E.mul(m.b, xy))),
                        E.mul(m.c, E.mul(x, z)));
        felt fz = E.add(E.mul(m.c, xy), E.mul(three, E.mul(m.d, E.mul(z, z))));
        return fx == 0 && fy == 0 && fz == 0;
    };
    for (long x = 0; x < E.q; ++x)
        for (long y = 0; y < E.q; ++y)
            if (probe(static_cast<felt>(x), static_cast<felt>(y), 1)) {
                out = {true, e, static_cast<felt>(x), static_cast<felt>(y), 1};
                return true;
            }
    for (long x = 0; x < E.q; ++x)
        if (probe(static_cast<felt>(x), 1, 0)) {
            out = {true, e, static_cast<felt>(x), 1, 0};
            return true;
        }
    if (probe(1, 0, 0)) {
        out = {true, e, 1, 0, 0};
        return true;
    }
    return false;
}

}  // namespace detail

inline SingularVerdict is_singular(const Field& F, CubicMember m) {
    if (!m.nondegenerate()) throw std::invalid_argument("degenerate member (abd = 0)");
    SingularVerdict out;
    if (F.p >= 5) {
        if (singular_closed_form(F, m)) {
            felt inv3 = F.inv(F.from_int(3));
            out.singular = true;
            out.ext_degree = 1;
            out.x = F.neg(F.mul(m.c, F.mul(inv3, F.inv(m.a))));
            out.y = F.neg(F.mul(m.c, F.mul(inv3, F.inv(m.b))));
            out.z = 1;
        }
        return out;
    }
    // p in {2,3}: exhaustive projective search over GF(q), GF(q^2), GF(q^3);
    // components of a reducible cubic live in degree <= 3 extensions
    for (int e = 1; e <= 3; ++e) {
        long qe = 1;
        for (int i = 0; i < e; ++i) qe *= F.q;
        if (qe > 4096) throw std::invalid_argument("singular search too large");
        if (e == 1) {
            if (detail::singular_point_scan(F, m, out, 1)) return out;
        } else {
            Field E = Field::make(F.p, F.h * e);
            Embedding emb = Embedding::make(F, E);
            CubicMember me{emb(m.a), emb(m.b), emb(m.c), emb(m.d)};
            if (detail::singular_point_scan(E, me, out, e)) return out;
        }
    }
    return out;
}

inline long hasse_interval(long q) { return static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q)))); }

struct ScanReport {
    long q = 0;
    long members = 0, smooth = 0, singular = 0;
    bool divisible_ok = true;  // 3 | n_proj for every smooth member
    bool hasse_ok = true;      // |n_proj - (q+1)| <= floor(2 sqrt q) for smooth members
    std::map<long, long> nproj_hist;
    long max_ntor_c0 = -1;  // over smooth members with c = 0
};

// scan d = 1, all a, b in GF(q)^x, all c
inline ScanReport divby3_scan(const Field& F, bool exhaustive_smoothness = false) {
    const long q = F.q;
    if (q > 64) throw std::invalid_argument("scan limited to q <= 64");
    ScanReport R;
    R.q = q;
    long hw = hasse_interval(q);
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            for (long c = 0; c < q; ++c) {
                CubicMember m{static_cast<felt>(a), static_cast<felt>(b), static_cast<felt>(c), 1};
                ++R.members;
                bool sing = exhaustive_smoothness && F.p < 5
                                ? is_singular(F, m).singular
                                : singular_closed_form(F, m);
                if (sing) {
                    ++R.singular;
                    continue;
                }
                ++R.smooth;
                CubicCount cc = torus_count(F, m);
                ++R.nproj_hist[cc.n_proj];
                if (cc.n_proj % 3 != 0) R.divisible_ok = false;
                if (std::abs(cc.n_proj - (q + 1)) > hw) R.hasse_ok = false;
                if (c == 0) R.max_ntor_c0 = std::max(R.max_ntor_c0, cc.n_tor);
            }
    return R;
}

struct SupersingularVerdict {
    long q = 0;
    bool base_ok = true;  // every c = 0, abd != 0 member has n_proj = q + 1
    bool ext_ok = true;   // recounted members over GF(q^2) have q^2 + 1 + 2q
    long checked = 0, ext_checked = 0;
    long expected_base = 0, expected_ext = 0;
};

inline SupersingularVerdict supersingular_check(const Field& F, long ext_samples = 64) {
    const long q = F.q;
    if (q % 2 == 0 || q % 3 != 2) throw std::invalid_argument("requires q odd, q = 2 mod 3");
    if (q > 32) throw std::invalid_argument("check limited to q <= 32");
    SupersingularVerdict V;
    V.q = q;
    V.expected_base = q + 1;
    V.expected_ext = q * q + 1 + 2 * q;
    Field E = Field::make(F.p, 2 * F.h);
    Embedding emb = Embedding::make(F, E);
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            for (long d = 1; d < q; ++d) {
                CubicMember m{static_cast<felt>(a), static_cast<felt>(b), 0, static_cast<felt>(d)};
                ++V.checked;
                if (torus_count(F, m).n_proj != V.expected_base) V.base_ok = false;
                if (V.ext_checked < ext_samples) {
                    CubicMember me{emb(m.a), emb(m.b), 0, emb(m.d)};
                    ++V.ext_checked;
                    if (torus_count(E, me).n_proj != V.expected_ext) V.ext_ok = false;
                }
            }
    return V;
}

struct T0Prediction {
    long t = 0;  // largest t <= floor(2 sqrt q), prime to q, with 3 | (q+1+t)
    long d = 0;  // (q-1)^2 - (q-2+t)
    bool gcd_on_p_only = false;  // prime powers: coprimality applied to p
};

inline T0Prediction predict_d_T0(long p, int h) {
    long q = 1;
    for (int i = 0; i < h; ++i) q *= p;
    if (q % 2 == 0 || q % 3 != 2) throw std::invalid_argument("requires q odd, q = 2 mod 3");
    long lim = hasse_interval(q);
    T0Prediction out;
    out.gcd_on_p_only = h > 1;
    for (long t = lim; t >= 1; --t) {
        if (std::gcd(t, h > 1 ? p : q) != 1) continue;
        if ((q + 1 + t) % 3 != 0) continue;
        out.t = t;
        break;
    }
    if (out.t == 0) throw std::logic_error("no admissible trace found");
    out.d = (q - 1) * (q - 1) - (q - 2 + out.t);
    return out;
}

struct T0SVerdict {
    long q = 0;
    long d_S = 0, d_T0 = 0;
    long witness_weight = 0;  // from x^2 y - x y^2, vanishing on x = y
    bool equality = false;    // d_S = (q-1)^2 - (q-1)
    bool strict = false;      // d_S > d_T0
    bool witness_ok = false;  // witness weight >= d_S and <= (q-1)^2 - (q-1)
    bool ok() const { return equality && strict && witness_ok; }
};

inline T0SVerdict theorem_T0S_check(const Field& F) {
    const long q = F.q;
    if (q % 2 == 0 || q % 3 != 2) throw std::invalid_argument("requires q odd, q = 2 mod 3");
    T0SVerdict V;
    V.q = q;
    ToricCode CS = build_code(F, {{0, 0}, {1, 2}, {2, 1}}, 2);
    ToricCode CT = build_code(F, {{0, 0}, {1, 2}, {2, 1}, {1, 1}}, 2);
    V.d_S = min_distance_exhaustive(CS);
    V.d_T0 = min_distance_exhaustive(CT);
    // x^2 y - x y^2 = xy(x - y) vanishes exactly on the diagonal of the torus
    std::vector<felt> w(CS.k, 0);
    for (int i = 0; i < CS.k; ++i) {
        if (CS.S[i] == Exponent{2, 1}) w[i] = 1;
        if (CS.S[i] == Exponent{1, 2}) w[i] = F.neg(1);
    }
    V.witness_weight = evaluate(CS, w).weight;
    long bound = (q - 1) * (q - 1) - (q - 1);
    V.equality = V.d_S == bound;
    V.strict = V.d_S > V.d_T0;
    V.witness_ok = V.witness_weight == bound && V.d_S <= V.witness_weight;
    return V;
}

}  // namespace toric

#endif  // TORIC_CUBICS_HPP
