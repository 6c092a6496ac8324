#include <doctest.h>

#include <random>

#include "solenoid/baer.hpp"
#include "solenoid/factor.hpp"

using namespace solenoid;

namespace {

CharacteristicSequence seq(Height def, std::vector<std::pair<ZZ, Height>> exc)
{
    return CharacteristicSequence(def, std::move(exc));
}

const Height INF = Height::infinity();

} // namespace

TEST_SUITE("baer-types") {

TEST_CASE("canonical form strips default-valued exceptions")
{
    auto c = seq(Height::finite(1), {{ZZ(2), Height::finite(1)}, {ZZ(3), Height::finite(0)}});
    REQUIRE_EQ(c.exceptions.size(), 1);
    CHECK_EQ(c.exceptions[0].first, ZZ(3));
    CHECK_THROWS_AS(seq(Height::finite(0), {{ZZ(4), Height::finite(1)}}), std::domain_error);
    CHECK_THROWS_AS(
        seq(Height::finite(0), {{ZZ(3), Height::finite(1)}, {ZZ(3), Height::finite(2)}}),
        std::domain_error);
}

TEST_CASE("same_type on the pinned pairs")
{
    CHECK(same_type(seq(Height::finite(1), {{ZZ(2), Height::finite(0)}}),
                    seq(Height::finite(1), {{ZZ(3), Height::finite(5)}})));
    CHECK_FALSE(same_type(seq(Height::finite(0), {}), seq(INF, {})));
    CHECK_FALSE(same_type(seq(Height::finite(0), {{ZZ(2), INF}}),
                          seq(Height::finite(0), {{ZZ(2), Height::finite(3)}})));
    // infinite exceptions at the same prime are still the same type
    CHECK(same_type(seq(Height::finite(0), {{ZZ(2), INF}}),
                    seq(Height::finite(0), {{ZZ(2), INF}, {ZZ(7), Height::finite(4)}})));
}

TEST_CASE("same_type is an equivalence relation on random sequences")
{
    std::vector<CharacteristicSequence> cs;
    for (uint64_t s = 0; s < 1000; ++s) cs.push_back(random_characteristic(s, 40));
    for (auto& c : cs) REQUIRE(same_type(c, c));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        auto &x = cs[pick(rng)], &y = cs[pick(rng)], &z = cs[pick(rng)];
        REQUIRE_EQ(same_type(x, y), same_type(y, x));
        if (same_type(x, y) && same_type(y, z)) REQUIRE(same_type(x, z));
    }
}

TEST_CASE("membership by denominator heights")
{
    auto c = seq(Height::finite(1), {{ZZ(2), Height::finite(0)}});
    CHECK(contains(c, QQ(1, 3)));
    CHECK_FALSE(contains(c, QQ(1, 9)));
    CHECK(contains(c, QQ(0)));
    CHECK_FALSE(contains(c, QQ(1, 2)));
    CHECK(contains(c, QQ(5, 21)));
    auto q = seq(INF, {});
    CHECK(contains(q, QQ(355, 113)));
}

TEST_CASE("membership is closed under addition and negation")
{
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long> num_pick(-50, 50);
    std::uniform_int_distribution<int> exp_pick(0, 3);
    for (uint64_t s = 0; s < 200; ++s) {
        auto c = random_characteristic(s, 30);
        // build two members with denominators assembled from allowed powers
        auto member = [&]() {
            ZZ den = 1;
            for (uint64_t p : primes_upto(30)) {
                Height h = c.at(ZZ(p));
                long cap = h.inf ? 3 : h.k;
                long e = std::min<long>(exp_pick(rng), cap);
                if (e > 0) den *= pow_z(ZZ(p), e);
            }
            return QQ(ZZ(num_pick(rng)), den);
        };
        QQ x = member(), y = member();
        REQUIRE(contains(c, x));
        REQUIRE(contains(c, y));
        QQ sum = x + y;
        sum.canonicalize();
        REQUIRE(contains(c, sum));
        REQUIRE(contains(c, -x));
    }
}

TEST_CASE("infinite height set extraction")
{
    auto a = infinite_height_set(seq(INF, {{ZZ(3), Height::finite(0)}, {ZZ(5), Height::finite(0)}}));
    CHECK_FALSE(a.is_finite());
    CHECK_EQ(a.primes, std::vector<ZZ>{ZZ(3), ZZ(5)});
    CHECK(a.contains(ZZ(2)));
    CHECK_FALSE(a.contains(ZZ(5)));

    auto b = infinite_height_set(seq(Height::finite(0), {{ZZ(2), INF}, {ZZ(3), INF}}));
    CHECK(b.is_finite());
    CHECK_EQ(b.primes, std::vector<ZZ>{ZZ(2), ZZ(3)});

    auto z = infinite_height_set(seq(Height::finite(0), {}));
    CHECK(z.is_finite());
    CHECK(z.primes.empty());
}

TEST_CASE("system validation enforces the invertibility rule")
{
    auto z_half = seq(Height::finite(0), {{ZZ(2), INF}});
    auto sys = validate_system(z_half, parse_ratio("2"), MapMode::automorphism);
    CHECK(sys.s.is_finite());
    CHECK_EQ(sys.s.primes, std::vector<ZZ>{ZZ(2)});

    auto zdata = seq(Height::finite(0), {});
    CHECK_THROWS_AS(validate_system(zdata, parse_ratio("2"), MapMode::automorphism),
                    std::domain_error);
    CHECK_NOTHROW(validate_system(zdata, parse_ratio("2"), MapMode::endomorphism));
    CHECK_THROWS_AS(validate_system(zdata, parse_ratio("3/2"), MapMode::endomorphism),
                    std::domain_error);
    CHECK_THROWS_AS(validate_system(z_half, parse_ratio("1"), MapMode::automorphism),
                    std::domain_error);
    CHECK_THROWS_AS(validate_system(z_half, parse_ratio("0"), MapMode::automorphism),
                    std::domain_error);
}

TEST_CASE("text format round-trips")
{
    auto c = seq(Height::finite(1), {{ZZ(2), Height::finite(0)}, {ZZ(7), INF}});
    std::string text = format_characteristic(c);
    CHECK_EQ(text, "default=1; 2:0, 7:inf");
    CHECK(parse_characteristic(text) == c);
    CHECK(parse_characteristic("default=inf;") == seq(INF, {}));
    CHECK(parse_characteristic("default=0; 2:inf,3:inf") ==
          seq(Height::finite(0), {{ZZ(2), INF}, {ZZ(3), INF}}));
    CHECK_THROWS_AS(parse_characteristic("2:0"), std::domain_error);
    CHECK_THROWS_AS(parse_characteristic("default=x;"), std::domain_error);
    CHECK_THROWS_AS(parse_characteristic("default=0; 9:1"), std::domain_error);

    for (uint64_t s = 0; s < 100; ++s) {
        auto r = random_characteristic(s, 60);
        REQUIRE(parse_characteristic(format_characteristic(r)) == r);
    }
}

TEST_CASE("prime set basics")
{
    auto s = PrimeSet::finite({ZZ(5), ZZ(2), ZZ(3), ZZ(5)});
    CHECK_EQ(s.primes, std::vector<ZZ>({ZZ(2), ZZ(3), ZZ(5)}));
    CHECK(s.contains(ZZ(3)));
    CHECK_FALSE(s.contains(ZZ(7)));
    CHECK_EQ(s.to_string(), "{2,3,5}");
    CHECK_THROWS_AS(PrimeSet::finite({ZZ(6)}), std::domain_error);

    auto co = PrimeSet::cofinite({ZZ(3)});
    CHECK(co.contains(ZZ(2)));
    CHECK_FALSE(co.contains(ZZ(3)));
    CHECK_EQ(co.to_string(), "all primes except {3}");

    CHECK_EQ(parse_prime_list("2, 3, 7"), std::vector<ZZ>({ZZ(2), ZZ(3), ZZ(7)}));
    CHECK(parse_prime_list("").empty());
}

TEST_CASE("rational parsing")
{
    auto r = parse_ratio("-6/4");
    CHECK_EQ(r.num, ZZ(-3));
    CHECK_EQ(r.den, ZZ(2));
    CHECK_EQ(format_ratio(r), "-3/2");
    CHECK_EQ(format_ratio(parse_ratio("2")), "2");
    CHECK_THROWS_AS(parse_ratio("2/0"), std::domain_error);
    CHECK_THROWS_AS(parse_ratio("abc"), std::domain_error);
    CHECK(parse_ratio("3/2").ergodic());
    CHECK_FALSE(parse_ratio("-1").ergodic());
    CHECK_FALSE(parse_ratio("0/5").ergodic());
}

} // TEST_SUITE
