// Arithmetic in small finite fields GF(p^h), q = p^h <= 2^16.
//
// Elements are stored as uint16_t values in [0, q).  The value encodes the
// coefficient vector of the residue polynomial in base p (low digit = constant
// term), so for prime fields the value is just the residue.  Multiplication,
// inversion and powering go through discrete-log tables for a fixed primitive
// element alpha; addition is digit-wise (a table is precomputed for small q).

#ifndef TORIC_GF_HPP
#define TORIC_GF_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using felt = std::uint16_t;

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace detail {

// Dense polynomials over GF(p), low-degree-first coefficient lists.
using PPoly = std::vector<int>;

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pmul(const PPoly& a, const PPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    ptrim(c);
    return c;
}

inline PPoly pmod(PPoly a, const PPoly& m, int p) {
    ptrim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a[da];
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = ((t - c * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

inline PPoly pgcd(PPoly a, PPoly b, int p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic before reducing
        int lead = b.back();
        if (lead != 1) {
            int inv = 1;
            for (int x = 1; x < p; ++x)
                if (lead * x % p == 1) { inv = x; break; }
            for (int& c : b) c = c * inv % p;
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^e mod m over GF(p), e >= 0.
inline PPoly ppowmod_x(long e, const PPoly& m, int p) {
    PPoly result{1};
    PPoly base = pmod(PPoly{0, 1}, m, p);
    while (e > 0) {
        if (e & 1) result = pmod(pmul(result, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

// Rabin irreducibility test for a monic polynomial of degree h over GF(p).
inline bool irreducible(const PPoly& f, int p) {
    const int h = static_cast<int>(f.size()) - 1;
    if (h < 1) return false;
    long ph = 1;
    for (int i = 0; i < h; ++i) ph *= p;
    // x^(p^h) == x mod f
    PPoly t = ppowmod_x(ph, f, p);
    PPoly x = pmod(PPoly{0, 1}, f, p);
    if (t != x) return false;
    for (long r : prime_factors(h)) {
        long e = 1;
        for (int i = 0; i < h / r; ++i) e *= p;
        PPoly u = ppowmod_x(e, f, p);
        // gcd(x^(p^(h/r)) - x, f) must be constant
        PPoly diff = u;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (static_cast<int>(g.size()) - 1 > 0) return false;
    }
    return true;
}

}  // namespace detail

// A concrete finite field GF(p^h) with dense log/antilog tables.
// Immutable after construction; all operations are const and pure.
class Field {
  public:
    int p = 0;
    int h = 0;
    int q = 0;
    std::vector<int> modulus;  // monic, low-degree-first, size h+1
    felt alpha = 0;

    static Field make(int p, int h) {
        check_params(p, h);
        long q = 1;
        for (int i = 0; i < h; ++i) q *= p;
        // smallest monic irreducible, coefficients compared high-degree-first
        detail::PPoly mod;
        for (long n = 0; n < q; ++n) {
            detail::PPoly f(h + 1, 0);
            long t = n;
            for (int i = 0; i < h; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
            f[h] = 1;
            if (detail::irreducible(f, p)) { mod = f; break; }
        }
        if (mod.empty()) throw std::logic_error("no irreducible modulus found");
        Field F;
        F.init(p, h, mod, 0);
        return F;
    }

    // Alternate presentation with an explicit modulus and (optionally) a
    // designated primitive element; used to check that code parameters do not
    // depend on the presentation.
    static Field make_with(int p, int h, const std::vector<int>& modulus, felt alpha = 0) {
        check_params(p, h);
        if (static_cast<int>(modulus.size()) != h + 1 || modulus[h] != 1)
            throw std::invalid_argument("modulus must be monic of degree h");
        detail::PPoly f(modulus.begin(), modulus.end());
        if (!detail::irreducible(f, p))
            throw std::invalid_argument("modulus is reducible");
        Field F;
        F.init(p, h, f, alpha);
        return F;
    }

    felt add(felt a, felt b) const {
        if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q + b];
        return add_slow(a, b);
    }

    felt neg(felt a) const {
        if (p == 2) return a;
        felt r = 0;
        int pw = 1;
        int v = a;
        while (v > 0) {
            int d = v % p;
            if (d != 0) r = static_cast<felt>(r + (p - d) * pw);
            v /= p;
            pw *= p;
        }
        return r;
    }

    felt sub(felt a, felt b) const { return add(a, neg(b)); }

    felt mul(felt a, felt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    felt inv(felt a) const {
        if (a == 0) throw std::domain_error("inversion of zero");
        return exp_[q - 1 - log_[a]];
    }

    felt pow(felt a, long n) const {
        if (a == 0) {
            if (n < 0) throw std::domain_error("inversion of zero");
            return n == 0 ? felt{1} : felt{0};
        }
        long e = (log_[a] * (n % (q - 1))) % (q - 1);
        if (e < 0) e += q - 1;
        return exp_[e];
    }

    int dlog(felt a) const {
        if (a == 0) throw std::domain_error("dlog of zero");
        return log_[a];
    }

    // alpha^i for any i (reduced mod q-1)
    felt from_dlog(long i) const {
        long e = i % (q - 1);
        if (e < 0) e += q - 1;
        return exp_[e];
    }

    // Embeds the small integer n (as a sum of 1's) into the field.
    felt from_int(long n) const {
        int r = static_cast<int>(((n % p) + p) % p);
        return static_cast<felt>(r);  // GF(p) sits in the low digit
    }

    // Dense q x q addition table, row-major; built on demand by hot loops.
    std::vector<felt> make_add_table() const {
        std::vector<felt> t(static_cast<std::size_t>(q) * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                t[static_cast<std::size_t>(a) * q + b] = add_slow(static_cast<felt>(a), static_cast<felt>(b));
        return t;
    }

    std::string describe() const {
        std::string s = "GF(" + std::to_string(p);
        if (h > 1) s += "^" + std::to_string(h);
        s += "), modulus [";
        for (int i = 0; i <= h; ++i) s += (i ? "," : "") + std::to_string(modulus[i]);
        s += "]";
        return s;
    }

  private:
    std::vector<felt> exp_;  // size 2(q-1), exp_[i] = alpha^i
    std::vector<int> log_;   // size q, log_[0] unused
    std::vector<felt> add_;  // q x q when q <= 1024

    static void check_params(int p, int h) {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
        if (h < 1) throw std::invalid_argument("h must be >= 1");
        long q = 1;
        for (int i = 0; i < h; ++i) {
            q *= p;
            if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
        }
    }

    felt add_slow(felt a, felt b) const {
        if (p == 2) return a ^ b;
        if (h == 1) {
            int s = a + b;
            return static_cast<felt>(s >= p ? s - p : s);
        }
        felt r = 0;
        int pw = 1;
        int va = a, vb = b;
        while (va > 0 || vb > 0) {
            int d = (va % p + vb % p) % p;
            r = static_cast<felt>(r + d * pw);
            va /= p;
            vb /= p;
            pw *= p;
        }
        return r;
    }

    // multiplication straight from the polynomial representation, used only
    // while the log tables are being built
    felt raw_mul(felt a, felt b) const {
        detail::PPoly pa = to_poly(a), pb = to_poly(b);
        detail::PPoly m(modulus.begin(), modulus.end());
        detail::PPoly c = detail::pmod(detail::pmul(pa, pb, p), m, p);
        return from_poly(c);
    }

    detail::PPoly to_poly(felt a) const {
        detail::PPoly f;
        int v = a;
        while (v > 0) { f.push_back(v % p); v /= p; }
        return f;
    }

    felt from_poly(const detail::PPoly& f) const {
        long v = 0, pw = 1;
        for (int c : f) { v += c * pw; pw *= p; }
        return static_cast<felt>(v);
    }

    bool has_order_qm1(felt a) const {
        if (a == 0) return false;
        for (long r : prime_factors(q - 1)) {
            long e = (q - 1) / r;
            felt x = 1;
            felt base = a;
            while (e > 0) {
                if (e & 1) x = raw_mul(x, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            if (x == 1) return false;
        }
        return true;
    }

    void init(int p_, int h_, const detail::PPoly& mod, felt alpha_hint) {
        p = p_;
        h = h_;
        long qq = 1;
        for (int i = 0; i < h; ++i) qq *= p;
        q = static_cast<int>(qq);
        modulus.assign(mod.begin(), mod.end());

        if (alpha_hint != 0) {
            if (alpha_hint >= q || !has_order_qm1(alpha_hint))
                throw std::invalid_argument("alpha does not generate the multiplicative group");
            alpha = alpha_hint;
        } else {
            for (int v = 1; v < q; ++v) {
                if (has_order_qm1(static_cast<felt>(v))) { alpha = static_cast<felt>(v); break; }
            }
        }

        exp_.assign(2 * (q - 1), 0);
        log_.assign(q, -1);
        felt x = 1;
        for (int i = 0; i < q - 1; ++i) {
            exp_[i] = x;
            exp_[i + q - 1] = x;
            if (log_[x] != -1) throw std::logic_error("alpha orbit repeats early");
            log_[x] = i;
            x = raw_mul(x, alpha);
        }
        if (x != 1) throw std::logic_error("alpha order mismatch");
        for (int v = 1; v < q; ++v)
            if (log_[v] == -1) throw std::logic_error("alpha does not enumerate GF(q)^x");

        if (q <= 1024) add_ = make_add_table();
    }
};

}  // namespace toric

#endif  // TORIC_GF_HPP
