// Univariate polynomials over GF(q): factorization patterns via squarefree
// decomposition + distinct-degree splitting, discriminants via resultants,
// and the coefficient-family census (per-pattern counts, distinct-nonzero-root
// members, discriminant locus).

#ifndef TORIC_POLYFACT_HPP
#define TORIC_POLYFACT_HPP

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "toric/gf.hpp"

namespace toric {

// Dense coefficient list, low-degree-first, trimmed (zero poly = empty list).
struct UniPoly {
    std::vector<felt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool monic() const { return !c.empty() && c.back() == 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

namespace detail {

inline UniPoly up(std::vector<felt> c) {
    UniPoly f{std::move(c)};
    f.trim();
    return f;
}

inline UniPoly upmul(const Field& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<felt> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return up(std::move(c));
}

inline UniPoly upscale(const Field& F, const UniPoly& a, felt s) {
    if (s == 0) return {};
    UniPoly r = a;
    for (felt& x : r.c) x = F.mul(x, s);
    return r;
}

inline UniPoly make_monic(const Field& F, const UniPoly& a) {
    if (a.is_zero() || a.monic()) return a;
    return upscale(F, a, F.inv(a.c.back()));
}

// remainder of a by b (b nonzero)
inline UniPoly upmod(const Field& F, UniPoly a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    felt linv = F.inv(b.c.back());
    const int db = b.degree();
    while (a.degree() >= db) {
        felt q = F.mul(a.c.back(), linv);
        int shift = a.degree() - db;
        if (q != 0)
            for (int i = 0; i <= db; ++i)
                a.c[shift + i] = F.sub(a.c[shift + i], F.mul(q, b.c[i]));
        a.c.pop_back();
        a.trim();
    }
    return a;
}

// exact quotient a / b (asserts zero remainder)
inline UniPoly updiv(const Field& F, UniPoly a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    felt linv = F.inv(b.c.back());
    const int db = b.degree();
    if (a.degree() < db) throw std::logic_error("inexact polynomial division");
    std::vector<felt> q(a.degree() - db + 1, 0);
    while (a.degree() >= db) {
        felt qc = F.mul(a.c.back(), linv);
        int shift = a.degree() - db;
        q[shift] = qc;
        if (qc != 0)
            for (int i = 0; i <= db; ++i)
                a.c[shift + i] = F.sub(a.c[shift + i], F.mul(qc, b.c[i]));
        a.c.pop_back();
        a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("inexact polynomial division");
    return up(std::move(q));
}

inline UniPoly upgcd(const Field& F, UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = upmod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline UniPoly upderiv(const Field& F, const UniPoly& a) {
    std::vector<felt> d;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        d.push_back(F.mul(a.c[i], F.from_int(static_cast<long>(i))));
    return up(std::move(d));
}

inline felt upeval(const Field& F, const UniPoly& a, felt x) {
    felt v = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) v = F.add(F.mul(v, x), a.c[i]);
    return v;
}

// u^e mod m
inline UniPoly uppow_u(const Field& F, long e, const UniPoly& m) {
    UniPoly result = up({1});
    UniPoly base = upmod(F, up({0, 1}), m);
    while (e > 0) {
        if (e & 1) result = upmod(F, upmul(F, result, base), m);
        base = upmod(F, upmul(F, base, base), m);
        e >>= 1;
    }
    return result;
}

// p-th root of a polynomial all of whose exponents are divisible by p
// (coefficientwise c -> c^(q/p), exponents divided by p)
inline UniPoly pth_root(const Field& F, const UniPoly& a) {
    std::vector<felt> r;
    long e = F.q / F.p;  // c^(q/p) is the p-th root of c in GF(q)
    for (std::size_t i = 0; i < a.c.size(); i += F.p) {
        for (std::size_t j = 1; j < static_cast<std::size_t>(F.p) && i + j < a.c.size(); ++j)
            if (a.c[i + j] != 0) throw std::logic_error("polynomial is not a p-th power");
        r.push_back(F.pow(a.c[i], e));
    }
    return up(std::move(r));
}

// product of the distinct monic irreducible factors of f
inline UniPoly radical(const Field& F, UniPoly f) {
    f = make_monic(F, f);
    if (f.degree() <= 0) return up({1});
    UniPoly d = upderiv(F, f);
    if (d.is_zero()) return radical(F, pth_root(F, f));
    UniPoly g = upgcd(F, f, d);
    UniPoly w = updiv(F, f, g);  // each irreducible with multiplicity not divisible by p
    // strip w's factors out of g, leaving the part made of p-th powers
    while (true) {
        UniPoly h = upgcd(F, g, w);
        if (h.degree() <= 0) break;
        g = updiv(F, g, h);
    }
    if (g.degree() > 0) w = upmul(F, w, radical(F, pth_root(F, g)));
    return w;
}

}  // namespace detail

// Multiset of irreducible-factor degrees: a[i] factors of degree i (a[0] unused).
struct FactorPattern {
    std::vector<long> a;

    long degree() const {
        long d = 0;
        for (std::size_t i = 1; i < a.size(); ++i) d += static_cast<long>(i) * a[i];
        return d;
    }
    std::string str() const {
        std::string s;
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += " ";
            s += std::to_string(i) + "^" + std::to_string(a[i]);
        }
        return s.empty() ? "1" : s;
    }
    bool operator==(const FactorPattern& o) const {
        FactorPattern x = *this, y = o;
        x.a.resize(std::max(x.a.size(), y.a.size()), 0);
        y.a.resize(x.a.size(), 0);
        return x.a == y.a;
    }
    FactorPattern& operator+=(const FactorPattern& o) {
        if (a.size() < o.a.size()) a.resize(o.a.size(), 0);
        for (std::size_t i = 1; i < o.a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
};

inline FactorPattern pattern_of(std::initializer_list<long> degrees) {
    FactorPattern p;
    for (long d : degrees) {
        if (p.a.size() <= static_cast<std::size_t>(d)) p.a.resize(d + 1, 0);
        ++p.a[d];
    }
    return p;
}

// Irreducible-factor degrees of f, with multiplicity: peel off the radical
// (one copy of each distinct factor) per round and split it by distinct-degree
// gcds with u^(q^i) - u.
inline FactorPattern factor_pattern(const Field& F, UniPoly f) {
    if (f.degree() < 1) throw std::invalid_argument("degree must be >= 1");
    f = detail::make_monic(F, f);
    FactorPattern out;
    out.a.assign(f.degree() + 1, 0);
    while (f.degree() >= 1) {
        UniPoly w = detail::radical(F, f);
        UniPoly rest = detail::updiv(F, f, w);
        for (int i = 1; w.degree() >= 1 && i <= w.degree(); ++i) {
            // u^(q^i) mod w by i successive q-th powerings
            UniPoly t = detail::up({0, 1});
            for (int s = 0; s < i; ++s) {
                UniPoly acc = detail::up({1});
                // t^q mod w via square-and-multiply on the exponent q
                long e = F.q;
                UniPoly base = t;
                while (e > 0) {
                    if (e & 1) acc = detail::upmod(F, detail::upmul(F, acc, base), w);
                    base = detail::upmod(F, detail::upmul(F, base, base), w);
                    e >>= 1;
                }
                t = std::move(acc);
            }
            // gcd(w, u^(q^i) - u)
            UniPoly diff = t;
            diff.c.resize(std::max<std::size_t>(diff.c.size(), 2), 0);
            diff.c[1] = F.sub(diff.c[1], 1);
            diff.trim();
            UniPoly g = detail::upgcd(F, w, diff);
            if (g.degree() >= 1) {
                out.a[i] += g.degree() / i;
                w = detail::updiv(F, w, g);
            }
        }
        if (w.degree() >= 1)
            throw std::logic_error("distinct-degree splitting left a remainder");
        f = std::move(rest);
    }
    return out;
}

// least h such that f splits into linear factors over GF(q^h)
inline long splitting_field_degree(const Field& F, const UniPoly& f) {
    FactorPattern p = factor_pattern(F, f);
    long l = 1;
    for (std::size_t i = 1; i < p.a.size(); ++i)
        if (p.a[i] > 0) l = std::lcm(l, static_cast<long>(i));
    return l;
}

struct Rational {
    long num = 0;
    long den = 1;

    Rational reduced() const {
        long g = std::gcd(num, den);
        return {num / g, den / g};
    }
    bool operator==(const Rational& o) const {
        return num * o.den == o.num * den;
    }
    Rational operator+(const Rational& o) const {
        return Rational{num * o.den + o.num * den, den * o.den}.reduced();
    }
    double value() const { return static_cast<double>(num) / den; }
};

// proportion of permutations with the given cycle type:
// T(lambda) = 1 / (prod a_i! * prod i^a_i)
inline Rational t_lambda(const FactorPattern& lambda) {
    long den = 1;
    for (std::size_t i = 1; i < lambda.a.size(); ++i) {
        for (long j = 1; j <= lambda.a[i]; ++j) den *= j;
        for (long j = 0; j < lambda.a[i]; ++j) den *= static_cast<long>(i);
    }
    return {1, den};
}

inline std::vector<FactorPattern> all_patterns(long degree) {
    std::vector<FactorPattern> out;
    FactorPattern cur;
    cur.a.assign(degree + 1, 0);
    std::function<void(long, long)> rec = [&](long remaining, long maxpart) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(remaining, maxpart); part >= 1; --part) {
            ++cur.a[part];
            rec(remaining - part, part);
            --cur.a[part];
        }
    };
    rec(degree, degree);
    return out;
}

// Sylvester-style resultant via the Euclidean remainder sequence.
inline felt resultant(const Field& F, UniPoly a, UniPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    felt r = 1;
    while (b.degree() >= 1) {
        UniPoly rem = detail::upmod(F, a, b);
        long da = a.degree(), db = b.degree(), dr = rem.degree();
        // Res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b,rem)
        if ((da * db) % 2 == 1) r = F.neg(r);
        r = F.mul(r, F.pow(b.c.back(), da - (dr < 0 ? 0 : dr)));
        if (rem.is_zero()) return 0;
        a = std::move(b);
        b = std::move(rem);
    }
    // Res(a, const) = const^(deg a)
    return F.mul(r, F.pow(b.c.back(), a.degree()));
}

// resultant(f, f'); zero iff f has a repeated root in the algebraic closure
inline felt discriminant(const Field& F, const UniPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("degree must be >= 2");
    if (F.p <= f.degree())
        throw std::invalid_argument("characteristic must exceed the degree");
    return resultant(F, f, detail::upderiv(F, f));
}

// The coefficient family u^ell + t_1 u^(k_1) + ... + t_m, with strictly
// decreasing exponents ell > k_1 > ... > k_(m-1) > 0 and k_m = 0 implicit.
struct UniFamily {
    Field field;
    long ell = 0;
    std::vector<long> ks;  // k_1 .. k_(m-1); the constant slot is implicit
    int m = 0;
    bool char_exceeds_degree = false;
    bool exponents_coprime = false;

    static UniFamily make(const Field& F, long ell, std::vector<long> ks) {
        if (ell < 2) throw std::invalid_argument("family degree must be >= 2");
        long prev = ell;
        for (long k : ks) {
            if (k <= 0 || k >= prev) throw std::invalid_argument("exponents must strictly decrease");
            prev = k;
        }
        UniFamily fam;
        fam.field = F;
        fam.ell = ell;
        fam.ks = std::move(ks);
        fam.m = static_cast<int>(fam.ks.size()) + 1;
        fam.char_exceeds_degree = F.p > ell;
        long g = ell;
        for (long k : fam.ks) g = std::gcd(g, k);
        fam.exponents_coprime = g == 1;
        return fam;
    }

    UniPoly member(const std::vector<felt>& t) const {
        std::vector<felt> c(ell + 1, 0);
        c[ell] = 1;
        for (std::size_t i = 0; i < ks.size(); ++i) c[ks[i]] = t[i];
        c[0] = t.back();
        return {std::move(c)};
    }
};

struct CensusReport {
    long q = 0;
    int m = 0;
    long total = 0;  // q^m, sanity: pattern counts sum to this
    std::map<std::string, long> pattern_counts;
    long lambda0_count = 0;               // pattern 1^ell (with multiplicity)
    long distinct_nonzero_root_count = 0; // 1^ell, all roots distinct and nonzero
    long distinct_root_free_count = 0;    // the above, restricted to members with
                                          // trivial stabilizer under the scaling action
    long disc_locus_count = 0;            // members with a repeated root
    long disc_locus_all_t_nonzero = 0;
    bool corollary_applicable = false;    // p > ell and gcd(ell, k_i) = 1
    double ratio_lambda0 = 0;             // lambda0_count / q^m
    double t_lambda0 = 0;                 // 1/ell!
    long delta_bound = 0;                 // degree bound 2*ell - 2 on the discriminant
    long pi_m_minus_1 = 0;                // |P^(m-1)(GF(q))|
    bool disc_bound_holds = false;        // disc_locus_count <= delta_bound * pi_(m-1)
};

inline CensusReport census(const UniFamily& fam, int workers = 1) {
    const Field& F = fam.field;
    const long q = F.q;
    double total_d = std::pow(static_cast<double>(q), fam.m);
    if (total_d > 1e8) throw std::invalid_argument("family too large for census");
    const long total = static_cast<long>(total_d + 0.5);

    struct Tally {
        std::map<std::string, long> patterns;
        long lambda0 = 0, distinct = 0, distinct_free = 0, disc = 0, disc_nz = 0;
    };
    const long per = q;  // partition by the leading coordinate t_1
    std::vector<Tally> tallies(per);
    std::atomic<long> next{0};
    auto work = [&] {
        while (true) {
            long t1 = next.fetch_add(1);
            if (t1 >= per) break;
            Tally& tl = tallies[t1];
            std::vector<felt> t(fam.m, 0);
            t[0] = static_cast<felt>(t1);
            long inner = total / q;
            for (long idx = 0; idx < inner; ++idx) {
                long v = idx;
                for (int i = fam.m - 1; i >= 1; --i) {
                    t[i] = static_cast<felt>(v % q);
                    v /= q;
                }
                UniPoly f = fam.member(t);
                FactorPattern pat = factor_pattern(F, f);
                ++tl.patterns[pat.str()];
                bool l0 = pat.a.size() > 1 && pat.a[1] == fam.ell;
                if (l0) ++tl.lambda0;
                // repeated root iff gcd(f, f') is nonconstant or f' = 0
                UniPoly d = detail::upderiv(F, f);
                bool repeated = d.is_zero() || detail::upgcd(F, f, d).degree() >= 1;
                if (repeated) {
                    ++tl.disc;
                    bool nz = true;
                    for (felt x : t) nz = nz && x != 0;
                    if (nz) ++tl.disc_nz;
                }
                if (l0 && !repeated && t.back() != 0) {
                    // all roots distinct; nonzero iff the constant term is
                    long roots = 0;
                    for (long x = 1; x < q; ++x)
                        roots += detail::upeval(F, f, static_cast<felt>(x)) == 0;
                    if (roots == fam.ell) {
                        ++tl.distinct;
                        // beta stabilizes f iff beta^(ell-k_i) = 1 for every
                        // nonzero t_i (and beta^ell = 1 for the constant term)
                        long g = std::gcd(q - 1, fam.ell);  // t_m != 0 here
                        for (std::size_t i = 0; i < fam.ks.size(); ++i)
                            if (t[i] != 0) g = std::gcd(g, fam.ell - fam.ks[i]);
                        if (g == 1) ++tl.distinct_free;
                    }
                }
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    CensusReport R;
    R.q = q;
    R.m = fam.m;
    R.total = total;
    for (const Tally& tl : tallies) {
        for (const auto& [k, v] : tl.patterns) R.pattern_counts[k] += v;
        R.lambda0_count += tl.lambda0;
        R.distinct_nonzero_root_count += tl.distinct;
        R.distinct_root_free_count += tl.distinct_free;
        R.disc_locus_count += tl.disc;
        R.disc_locus_all_t_nonzero += tl.disc_nz;
    }
    R.corollary_applicable = fam.char_exceeds_degree && fam.exponents_coprime;
    R.ratio_lambda0 = static_cast<double>(R.lambda0_count) / total;
    FactorPattern l0;
    l0.a.assign(2, 0);
    l0.a[1] = fam.ell;
    R.t_lambda0 = t_lambda(l0).value();
    R.delta_bound = 2 * fam.ell - 2;
    R.pi_m_minus_1 = 0;  // 1 + q + ... + q^(m-1)
    for (long i = 0, pw = 1; i <= fam.m - 1; ++i, pw *= q) R.pi_m_minus_1 += pw;
    R.disc_bound_holds = R.disc_locus_count <= R.delta_bound * R.pi_m_minus_1;
    return R;
}

// O(q^2) count of quartics u^4 + t1 u + t2 with four distinct nonzero roots:
// pick ordered roots (r1, r2); the root sum forces r3 + r4 and the vanishing
// u^2 coefficient forces r3 r4, so {r3, r4} solves a quadratic.  Each 4-set
// is hit once per ordered choice of two of its roots, i.e. 12 times.
inline long quartic_distinct_root_count(const Field& F) {
    const long q = F.q;
    if (F.p == 2 || F.p == 3)
        throw std::invalid_argument("count requires characteristic >= 5");
    // squares table for solving z^2 - s z + P
    std::vector<int> sqrt_of(q, -1);
    for (long x = 0; x < q; ++x) {
        felt s = F.mul(static_cast<felt>(x), static_cast<felt>(x));
        if (sqrt_of[s] < 0) sqrt_of[s] = static_cast<int>(x);
    }
    felt half = F.inv(F.from_int(2));
    long hits = 0;
    for (long a = 1; a < q; ++a) {
        for (long b = 1; b < q; ++b) {
            felt r1 = static_cast<felt>(a), r2 = static_cast<felt>(b);
            if (r1 == r2) continue;
            felt s12 = F.add(r1, r2);
            felt s = F.neg(s12);                               // r3 + r4
            felt P = F.sub(F.mul(s12, s12), F.mul(r1, r2));    // r3 * r4
            if (P == 0) continue;
            felt disc = F.sub(F.mul(s, s), F.mul(F.from_int(4), P));
            if (disc == 0) continue;  // r3 = r4
            int rt = sqrt_of[disc];
            if (rt <= 0) continue;  // not a nonzero square: no rational roots
            felt r3 = F.mul(F.add(s, static_cast<felt>(rt)), half);
            felt r4 = F.sub(s, r3);
            if (r3 == 0 || r4 == 0) continue;  // P != 0 already rules this out
            if (r3 == r1 || r3 == r2 || r4 == r1 || r4 == r2) continue;
            ++hits;
        }
    }
    if (hits % 12 != 0) throw std::logic_error("root-quadruple count not divisible by 12");
    return hits / 12;
}

struct OrbitVerdict {
    bool closed = true;             // the action keeps members in the family
    bool pattern_preserved = true;  // factorization pattern is an orbit invariant
    bool count_divisible = true;    // free-orbit distinct-root count = 0 mod q-1
    long distinct_count = 0;
    long free_count = 0;  // members with trivial stabilizer; orbits there have
                          // full size q-1, so this subcount must be divisible
    bool ok() const { return closed && pattern_preserved && count_divisible; }
};

// the action (beta, f(u)) -> beta^(-ell) f(beta u) on coefficient vectors
inline std::vector<felt> orbit_act(const UniFamily& fam, felt beta, const std::vector<felt>& t) {
    const Field& F = fam.field;
    std::vector<felt> out(t.size());
    for (std::size_t i = 0; i < fam.ks.size(); ++i)
        out[i] = F.mul(t[i], F.pow(beta, fam.ks[i] - fam.ell));
    out.back() = F.mul(t.back(), F.pow(beta, -fam.ell));
    return out;
}

inline OrbitVerdict orbit_divisibility_check(const UniFamily& fam, int samples = 50) {
    const Field& F = fam.field;
    const long q = F.q;
    OrbitVerdict V;
    // sample members deterministically and compare patterns across the orbit
    std::vector<felt> t(fam.m, 0);
    for (int s = 0; s < samples; ++s) {
        long v = (s * 2654435761L) % static_cast<long>(std::pow(static_cast<double>(q), fam.m));
        for (int i = fam.m - 1; i >= 0; --i) {
            t[i] = static_cast<felt>(v % q);
            v /= q;
        }
        FactorPattern base = factor_pattern(F, fam.member(t));
        for (long b = 1; b < q; ++b) {
            auto t2 = orbit_act(fam, static_cast<felt>(b), t);
            UniPoly g = fam.member(t2);
            if (g.degree() != fam.ell || !g.monic()) V.closed = false;
            if (!(factor_pattern(F, g) == base)) V.pattern_preserved = false;
        }
    }
    CensusReport R = census(fam);
    V.distinct_count = R.distinct_nonzero_root_count;
    V.free_count = R.distinct_root_free_count;
    V.count_divisible = V.free_count % (q - 1) == 0;
    return V;
}

}  // namespace toric

#endif  // TORIC_POLYFACT_HPP
