// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pierce/cylinder.hpp"
#include "pierce/expansion.hpp"
#include "pierce/rational.hpp"
#include "pierce/rng.hpp"
#include "pierce/sequence.hpp"

#include <algorithm>
#include <vector>

using namespace pierce;

namespace {

GSequence gs(std::vector<long> digits, bool terminated = false) {
    std::vector<BigInt> d(digits.begin(), digits.end());
    return GSequence(std::move(d), terminated);
}

GSequence ones(std::size_t k) {
    return GSequence(std::vector<BigInt>(k, BigInt(1)));
}

// Brute-force endpoint oracle: extrema of exact partial sums over the prefix
// itself and all its extensions by up to `extra` digits, each digit <= cap.
// Both endpoints of a cylinder are attained within this family (one by the
// prefix's own partial sum, the other by the single-digit-1 extension), so
// the extrema are exact, not approximate.
std::pair<Rational, Rational> endpoint_oracle(const GSequence& prefix, int extra, long cap) {
    Rational lo = evaluate(prefix);
    Rational hi = lo;
    auto consider = [&](const GSequence& g) {
        Rational v = evaluate(g);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    std::vector<BigInt> base = prefix.digits();
    if (extra >= 1) {
        for (long c1 = 1; c1 <= cap; ++c1) {
            auto d1 = base;
            d1.emplace_back(c1);
            consider(GSequence(d1));
            if (extra >= 2) {
                for (long c2 = 1; c2 <= cap; ++c2) {
                    auto d2 = d1;
                    d2.emplace_back(c2);
                    consider(GSequence(d2));
                }
            }
        }
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("rational parse and canonical format") {
    CHECK(parse_rational("2/5") == Rational(2, 5));
    CHECK(parse_rational("4/10") == Rational(2, 5));  // canonicalized on construction
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(rational_str(Rational(2, 5)) == "2/5");
    CHECK(rational_str(Rational(0)) == "0/1");
    CHECK(rational_str(Rational(4)) == "4/1");
    CHECK(denominator(make_rational(-2, -4)) == 2);  // sign normalized, reduced
    CHECK(numerator(make_rational(-2, -4)) == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("a/b"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ValidationError);
}

TEST_CASE("decimal rendering is exact truncation") {
    CHECK(decimal_str(Rational(1, 2), 4) == "0.5000");
    CHECK(decimal_str(Rational(2, 3), 6) == "0.666666");
    CHECK(decimal_str(Rational(-1, 8), 3) == "-0.125");
    CHECK(decimal_str(Rational(5, 4), 2) == "1.25");
}

TEST_CASE("sequence validation") {
    CHECK_THROWS_AS(gs({2, 0, 3}), ValidationError);
    CHECK_THROWS_AS(QSequence::parse("2,2"), ValidationError);
    CHECK_THROWS_AS(QSequence::parse("3,2"), ValidationError);
    CHECK_NOTHROW(QSequence::parse("2,5,9"));
    // trailing 1 marks the non-canonical twin of a finite expansion
    CHECK_THROWS_AS(gs({1, 1}, true), ValidationError);
    CHECK_THROWS_AS(gs({1}, true), ValidationError);
    CHECK_NOTHROW(gs({1, 1}));  // fine as a plain prefix
    CHECK_NOTHROW(gs({2}, true));
    CHECK(GSequence::parse("").empty());
    CHECK(GSequence::parse("2,3,7").str() == "2,3,7");
    CHECK_THROWS_AS(GSequence::parse("2,,3"), ValidationError);
    CHECK_THROWS_AS(GSequence::parse("2, 3"), ValidationError);
}

TEST_CASE("q/g conversions are mutually inverse") {
    CHECK(q_from_g(gs({2, 3})) == QSequence::parse("2,5"));
    CHECK(g_from_q(QSequence::parse("1,3,7")) == GSequence::parse("1,2,4"));
    CHECK(q_from_g(ones(5)) == QSequence::parse("1,2,3,4,5"));

    SplitMix64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> d;
        std::size_t len = 1 + gen.next() % 12;
        for (std::size_t i = 0; i < len; ++i) d.emplace_back(1 + gen.next() % 1000);
        GSequence g(d);
        CHECK(g_from_q(q_from_g(g)) == g);
    }
}

TEST_CASE("encode worked examples") {
    GSequence g = encode(Rational(1, 2));
    CHECK(g.str() == "2");
    CHECK(g.terminated());

    g = encode(Rational(2, 5));
    CHECK(g.str() == "2,3");
    CHECK(q_from_g(g).str() == "2,5");
    // oracle: 1/2 - 1/10 = 2/5
    CHECK(Rational(1, 2) - Rational(1, 10) == Rational(2, 5));
    CHECK(evaluate(g) == Rational(2, 5));

    g = encode(Rational(5, 7));
    CHECK(g.str() == "1,2,4");
    CHECK(q_from_g(g).str() == "1,3,7");
    // oracle: 1 - 1/3 + 1/21 = 5/7
    CHECK(Rational(1) - Rational(1, 3) + Rational(1, 21) == Rational(5, 7));
    CHECK(evaluate(g) == Rational(5, 7));
}

TEST_CASE("prefix-limited expansion") {
    ExpansionPrefix p = expand_prefix(Rational(5, 7), 2);
    CHECK(p.digits.str() == "1,2");
    CHECK_FALSE(p.complete);
    CHECK_FALSE(p.digits.terminated());

    p = expand_prefix(Rational(5, 7), 3);
    CHECK(p.complete);
    CHECK(p.digits.terminated());

    // dyadic samples keep producing digits far past 100
    Rational x = make_rational(BigInt("123456789123456789123456789"), BigInt(1) << 96);
    p = expand_prefix(x, 20);
    CHECK(p.digits.size() == 20);
}

TEST_CASE("encode domain errors") {
    CHECK_THROWS_AS(encode(Rational(0)), ValidationError);
    CHECK_THROWS_AS(encode(Rational(1)), ValidationError);
    CHECK_THROWS_AS(encode(Rational(3, 2)), ValidationError);
    CHECK_THROWS_AS(encode(Rational(-1, 2)), ValidationError);
}

TEST_CASE("evaluate worked examples and errors") {
    CHECK(evaluate(gs({2}), 1) == Rational(1, 2));
    CHECK(evaluate(ones(3), 3) == Rational(2, 3));  // 1 - 1/2 + 1/6
    CHECK(evaluate(gs({2, 3}), 2) == Rational(2, 5));
    CHECK_THROWS_AS(evaluate(gs({2, 3}), 0), ValidationError);
    CHECK_THROWS_AS(evaluate(gs({2, 3}), 3), ValidationError);
}

TEST_CASE("round trip: evaluate(encode(r)) == r") {
    SplitMix64 gen(42);
    for (int trial = 0; trial < 500; ++trial) {
        BigInt q = 2 + gen.next() % 999999;
        BigInt p = 1 + BigInt(gen.next()) % (q - 1);
        Rational r(p, q);
        GSequence g = encode(r);
        CHECK(g.terminated());
        CHECK(evaluate(g) == r);
        // q-digit view is strictly increasing by construction; spot check
        QSequence qv = q_from_g(g);
        for (std::size_t i = 1; i < qv.size(); ++i) CHECK(qv[i] > qv[i - 1]);
    }
}

TEST_CASE("alternating enclosure of partial sums") {
    SplitMix64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> d;
        for (int i = 0; i < 9; ++i) d.emplace_back(1 + gen.next() % 20);
        GSequence g(d);
        auto s = partial_sums(g, g.size());
        // odd-indexed sums decrease, even-indexed increase, odd above even
        for (std::size_t k = 2; k < s.size(); ++k) {
            if (k % 2 == 0)
                CHECK(s[k] <= s[k - 2]);  // S_1 >= S_3 >= ...
            else
                CHECK(s[k] >= s[k - 2]);  // S_2 <= S_4 <= ...
        }
        for (std::size_t odd = 0; odd < s.size(); odd += 2)
            for (std::size_t even = 1; even < s.size(); even += 2) CHECK(s[odd] > s[even]);
    }
}

TEST_CASE("shift drops the first digit") {
    auto t = shift(gs({2, 3, 7}));
    REQUIRE(t.has_value());
    CHECK(t->str() == "3,7");

    auto fixed = shift(ones(5));
    REQUIRE(fixed.has_value());
    CHECK(*fixed == ones(4));  // constant sequence is a fixed point of the shift

    CHECK_FALSE(shift(gs({2}, true)).has_value());  // orbit ends on a rational
    CHECK_THROWS_AS(shift(gs({1})), ValidationError);
    CHECK_THROWS_AS(shift(GSequence()), ValidationError);

    // applying shift k times then evaluating equals evaluating the suffix
    GSequence g = gs({3, 1, 4, 1, 5, 9, 2, 6});
    GSequence cur = g;
    for (int k = 1; k <= 3; ++k) cur = *shift(cur);
    CHECK(evaluate(cur, cur.size()) ==
          evaluate(GSequence(std::vector<BigInt>(g.digits().begin() + 3, g.digits().end())),
                   g.size() - 3));
}

TEST_CASE("cylinder worked examples") {
    Cylinder full = cylinder(GSequence());
    CHECK(full.left == 0);
    CHECK(full.right == 1);
    CHECK(full.length == 1);

    Cylinder c1 = cylinder(gs({1}));
    CHECK(c1.left == Rational(1, 2));
    CHECK(c1.right == 1);
    CHECK(c1.length == Rational(1, 2));

    Cylinder c2 = cylinder(gs({2}));
    CHECK(c2.left == Rational(1, 3));
    CHECK(c2.right == Rational(1, 2));
    CHECK(c2.length == Rational(1, 6));

    for (std::size_t k = 1; k <= 15; ++k) {
        Cylinder ck = cylinder(ones(k));
        CHECK(ck.length == make_rational(1, factorial(k) * (k + 1)));
    }
}

TEST_CASE("cylinder endpoints match the extension-extrema oracle") {
    auto [lo1, hi1] = endpoint_oracle(gs({1}), 2, 40);
    Cylinder c1 = cylinder(gs({1}));
    CHECK(c1.left == lo1);
    CHECK(c1.right == hi1);

    auto [lo2, hi2] = endpoint_oracle(gs({2}), 2, 40);
    Cylinder c2 = cylinder(gs({2}));
    CHECK(c2.left == lo2);
    CHECK(c2.right == hi2);

    auto [lo3, hi3] = endpoint_oracle(gs({1, 2}), 2, 30);
    Cylinder c3 = cylinder(gs({1, 2}));
    CHECK(c3.left == lo3);
    CHECK(c3.right == hi3);

    auto [lo4, hi4] = endpoint_oracle(gs({2, 1, 3}), 2, 25);
    Cylinder c4 = cylinder(gs({2, 1, 3}));
    CHECK(c4.left == lo4);
    CHECK(c4.right == hi4);
}

TEST_CASE("cylinder length formula against brute-force difference") {
    // every prefix with depth <= 3 and sigma_k <= 9
    std::vector<std::vector<BigInt>> prefixes;
    for (long a = 1; a <= 9; ++a) {
        prefixes.push_back({BigInt(a)});
        for (long b = 1; a + b <= 9; ++b) {
            prefixes.push_back({BigInt(a), BigInt(b)});
            for (long c = 1; a + b + c <= 9; ++c)
                prefixes.push_back({BigInt(a), BigInt(b), BigInt(c)});
        }
    }
    for (const auto& digits : prefixes) {
        GSequence prefix(digits);
        Cylinder cyl = cylinder(prefix);
        auto [lo, hi] = endpoint_oracle(prefix, 2, 20);
        CHECK(hi - lo == cyl.length);
        BigInt prod = 1, sigma = 0;
        for (const BigInt& d : digits) {
            sigma += d;
            prod *= sigma;
        }
        CHECK(cyl.length == make_rational(1, prod * (sigma + 1)));
    }
}

TEST_CASE("cylinder nesting") {
    SplitMix64 gen(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> d;
        std::size_t len = 1 + gen.next() % 5;
        for (std::size_t i = 0; i < len; ++i) d.emplace_back(1 + gen.next() % 8);
        Cylinder outer = cylinder(GSequence(d));
        d.emplace_back(1 + gen.next() % 8);
        Cylinder inner = cylinder(GSequence(d));
        CHECK(inner.left >= outer.left);
        CHECK(inner.right <= outer.right);
    }
}

TEST_CASE("depth-1 cylinders tile the unit interval") {
    // sum_{c <= C} |cylinder(c)| = 1 - 1/(C+1)
    Rational total = 0;
    for (long c = 1; c <= 200; ++c) total += cylinder(gs({c})).length;
    CHECK(total == Rational(200, 201));
}
