#include <catch2/catch_amalgamated.hpp>

#include "toric/polyfact.hpp"

using namespace toric;

namespace {

UniPoly poly(std::vector<felt> c) {
    UniPoly f{std::move(c)};
    f.trim();
    return f;
}

// monic product of linear factors u - r over F
UniPoly from_roots(const Field& F, const std::vector<felt>& roots) {
    UniPoly f = poly({1});
    for (felt r : roots) f = detail::upmul(F, f, poly({F.neg(r), 1}));
    return f;
}

}  // namespace

TEST_CASE("t_lambda matches the cycle-type proportions") {
    CHECK(t_lambda(pattern_of({1, 1, 1, 1})) == Rational{1, 24});
    CHECK(t_lambda(pattern_of({4})) == Rational{1, 4});
    CHECK(t_lambda(pattern_of({1, 1, 2})) == Rational{1, 4});  // 6 of the 24 in S4
    CHECK(t_lambda(pattern_of({2, 2})) == Rational{1, 8});
}

TEST_CASE("T(lambda) sums to 1 over the patterns of each degree") {
    for (long ell = 1; ell <= 8; ++ell) {
        Rational sum{0, 1};
        for (const FactorPattern& p : all_patterns(ell)) {
            CHECK(p.degree() == ell);
            sum = sum + t_lambda(p);
        }
        CHECK(sum == Rational{1, 1});
    }
}

TEST_CASE("factor_pattern identifies irreducibles, splits and mixtures") {
    Field F2 = Field::make(2, 1);
    CHECK(factor_pattern(F2, poly({1, 1, 0, 0, 1})) == pattern_of({4}));  // u^4+u+1
    CHECK(factor_pattern(F2, poly({1, 0, 0, 1})) == pattern_of({1, 2}));  // (u^2+u+1)(u+1)

    Field F5 = Field::make(5, 1);
    CHECK(factor_pattern(F5, poly({F5.neg(1), 0, 0, 0, 1})) == pattern_of({1, 1, 1, 1}));  // u^4-1
}

TEST_CASE("factor_pattern counts multiplicity") {
    Field F7 = Field::make(7, 1);
    CHECK(factor_pattern(F7, from_roots(F7, {1, 1, 2})) == pattern_of({1, 1, 1}));
    Field F2 = Field::make(2, 1);
    CHECK(factor_pattern(F2, poly({1, 0, 0, 0, 1})) == pattern_of({1, 1, 1, 1}));  // (u+1)^4
    Field F4 = Field::make(2, 2);
    // (u^2+u+1) splits over GF(4); squared it gives 1^4
    UniPoly f = detail::upmul(F4, poly({1, 1, 1}), poly({1, 1, 1}));
    CHECK(factor_pattern(F4, f) == pattern_of({1, 1, 1, 1}));
}

TEST_CASE("pattern of a product is the multiset sum") {
    Field F = Field::make(3, 1);
    std::vector<UniPoly> polys = {
        poly({1, 0, 1}),     // u^2+1, irreducible over GF(3)
        poly({2, 1}),        // u+2
        poly({1, 2, 0, 1}),  // arbitrary cubic
        poly({2, 2, 1}),
    };
    for (const UniPoly& a : polys)
        for (const UniPoly& b : polys) {
            FactorPattern expect = factor_pattern(F, a);
            expect += factor_pattern(F, b);
            CHECK(factor_pattern(F, detail::upmul(F, a, b)) == expect);
        }
}

TEST_CASE("splitting field degrees") {
    Field F2 = Field::make(2, 1);
    CHECK(splitting_field_degree(F2, poly({1, 1, 0, 0, 1})) == 4);  // y^4+y+1
    Field F3 = Field::make(3, 1);
    CHECK(splitting_field_degree(F3, poly({1, 0, 1})) == 2);  // u^2+1
    CHECK(splitting_field_degree(F3, poly({2, 1})) == 1);
    // mixed degrees take the lcm
    Field F5 = Field::make(5, 1);
    UniPoly f = detail::upmul(F5, poly({2, 0, 1}), poly({1, 1, 1, 1}));  // irred deg2 * (deg3)
    long l = splitting_field_degree(F5, f);
    CHECK(l % 2 == 0);
}

TEST_CASE("discriminant basics") {
    Field F = Field::make(7, 1);
    CHECK(discriminant(F, from_roots(F, {1, 1})) == 0);
    CHECK(discriminant(F, from_roots(F, {1, 2})) != 0);
    CHECK_THROWS_AS(discriminant(F, poly({1, 1})), std::invalid_argument);  // degree 1
    Field F2 = Field::make(2, 1);
    CHECK_THROWS_AS(discriminant(F2, poly({1, 1, 1})), std::invalid_argument);  // p <= deg
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
    Field F = Field::make(5, 1);
    // all monic quartics over GF(5)
    for (long n = 0; n < 625; ++n) {
        std::vector<felt> c(5, 0);
        c[4] = 1;
        long v = n;
        for (int i = 0; i < 4; ++i) { c[i] = static_cast<felt>(v % 5); v /= 5; }
        UniPoly f = poly(c);
        UniPoly d = detail::upderiv(F, f);
        bool repeated = d.is_zero() || detail::upgcd(F, f, d).degree() >= 1;
        CHECK((discriminant(F, f) == 0) == repeated);
    }
}

TEST_CASE("quartic family discriminant locus is (t1/4)^4 = (t2/3)^3") {
    for (int p : {7, 11, 13}) {
        Field F = Field::make(p, 1);
        long on_locus_nz = 0;
        for (long t1 = 0; t1 < p; ++t1)
            for (long t2 = 0; t2 < p; ++t2) {
                UniPoly f = poly({static_cast<felt>(t2), static_cast<felt>(t1), 0, 0, 1});
                felt lhs = F.pow(F.mul(static_cast<felt>(t1), F.inv(F.from_int(4))), 4);
                felt rhs = F.pow(F.mul(static_cast<felt>(t2), F.inv(F.from_int(3))), 3);
                CHECK((discriminant(F, f) == 0) == (lhs == rhs));
                if (discriminant(F, f) == 0 && t1 != 0 && t2 != 0) ++on_locus_nz;
            }
        CHECK(on_locus_nz == p - 1);
    }
}

TEST_CASE("census of u^4 + t1 u + t2") {
    SECTION("no distinct-root splits over GF(7)") {
        Field F = Field::make(7, 1);
        auto R = census(UniFamily::make(F, 4, {1}));
        CHECK(R.total == 49);
        CHECK(R.distinct_nonzero_root_count == 0);
        CHECK(R.corollary_applicable);
    }
    SECTION("over GF(11) the 1^4 members all have repeated roots") {
        Field F = Field::make(11, 1);
        auto R = census(UniFamily::make(F, 4, {1}));
        CHECK(R.lambda0_count > 0);
        CHECK(R.distinct_nonzero_root_count == 0);
    }
    SECTION("splits exist over GF(13) and GF(9)") {
        auto R13 = census(UniFamily::make(Field::make(13, 1), 4, {1}));
        // exactly the three u^4 + t2 with -t2 a fourth power; all have the
        // fourth roots of unity in their stabilizer
        CHECK(R13.distinct_nonzero_root_count == 3);
        CHECK(R13.distinct_root_free_count == 0);
        auto R9 = census(UniFamily::make(Field::make(3, 2), 4, {1}));
        CHECK(R9.distinct_nonzero_root_count > 0);
        CHECK_FALSE(R9.corollary_applicable);  // p = 3 < 4
    }
    SECTION("splits with free orbits appear from GF(23) on") {
        auto R = census(UniFamily::make(Field::make(23, 1), 4, {1}));
        CHECK(R.distinct_nonzero_root_count == 22);
        CHECK(R.distinct_root_free_count == 22);
    }
    SECTION("pattern counts sum to q^m and the locus bound holds") {
        for (int p : {5, 7, 11, 13}) {
            auto R = census(UniFamily::make(Field::make(p, 1), 4, {1}));
            long sum = 0;
            for (const auto& [k, v] : R.pattern_counts) sum += v;
            CHECK(sum == R.total);
            CHECK(R.disc_locus_all_t_nonzero == p - 1);
            CHECK(R.disc_bound_holds);
            // soft Chebotarev-style check: the 1^4 share approaches 1/24
            CHECK(std::abs(R.ratio_lambda0 - R.t_lambda0) <= 5.0 / std::sqrt(double(p)));
        }
    }
    SECTION("worker partitioning does not change tallies") {
        Field F = Field::make(11, 1);
        auto R1 = census(UniFamily::make(F, 4, {1}), 1);
        auto R2 = census(UniFamily::make(F, 4, {1}), 3);
        CHECK(R1.pattern_counts == R2.pattern_counts);
        CHECK(R1.distinct_nonzero_root_count == R2.distinct_nonzero_root_count);
        CHECK(R1.disc_locus_count == R2.disc_locus_count);
    }
}

TEST_CASE("family validation") {
    Field F = Field::make(7, 1);
    CHECK_THROWS_AS(UniFamily::make(F, 4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(UniFamily::make(F, 4, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(UniFamily::make(F, 1, {}), std::invalid_argument);
    auto fam = UniFamily::make(F, 6, {3});
    CHECK_FALSE(fam.exponents_coprime);  // gcd(6,3) = 3
    CHECK(UniFamily::make(F, 4, {1}).exponents_coprime);
}

TEST_CASE("fast quartic counter agrees with the census") {
    for (int p : {5, 7, 11, 13, 17, 19, 23, 29}) {
        Field F = Field::make(p, 1);
        long fast = quartic_distinct_root_count(F);
        auto R = census(UniFamily::make(F, 4, {1}));
        CHECK(fast == R.distinct_nonzero_root_count);
        CHECK(R.distinct_root_free_count % (p - 1) == 0);
    }
    // prime powers too
    Field F9 = Field::make(3, 2);
    CHECK_THROWS_AS(quartic_distinct_root_count(F9), std::invalid_argument);
    Field F25 = Field::make(5, 2);
    auto R25 = census(UniFamily::make(F25, 4, {1}));
    CHECK(quartic_distinct_root_count(F25) == R25.distinct_nonzero_root_count);
}

TEST_CASE("the scaling action is closed, pattern-preserving, and free") {
    auto fam = UniFamily::make(Field::make(13, 1), 4, {1});
    auto V = orbit_divisibility_check(fam);
    CHECK(V.closed);
    CHECK(V.pattern_preserved);
    CHECK(V.count_divisible);
    CHECK(V.ok());
    CHECK(V.distinct_count == 3);
    CHECK(V.free_count == 0);

    auto V23 = orbit_divisibility_check(UniFamily::make(Field::make(23, 1), 4, {1}), 20);
    CHECK(V23.ok());
    CHECK(V23.free_count == 22);

    // beta = 1 fixes every member
    const Field& F = fam.field;
    std::vector<felt> t{3, 7};
    CHECK(orbit_act(fam, 1, t) == t);

    // pattern preservation over GF(9) as well
    auto V9 = orbit_divisibility_check(UniFamily::make(Field::make(3, 2), 4, {1}), 20);
    CHECK(V9.pattern_preserved);
}

TEST_CASE("census rejects oversized families") {
    Field F = Field::make(2, 10);  // q = 1024, m = 3 -> > 1e8
    CHECK_THROWS_AS(census(UniFamily::make(F, 5, {3, 1})), std::invalid_argument);
}
