#include "eqcfk/mapspace.hpp"
#include "eqcfk/models.hpp"

#include <doctest.h>

#include <random>

using namespace eqcfk;

namespace {

ComplexPtr t23() { return share(staircase_from_alexander({{1}})); }

bool has(const ValidationReport& r, const std::string& constraint)
{
    for (const auto& v : r.violations)
        if (v.constraint == constraint) return true;
    return false;
}

}  // namespace

TEST_CASE("staircase for T2,3")
{
    auto c = t23();
    REQUIRE(c->size() == 3);
    CHECK(validate_complex(*c).ok());
    CHECK(c->gen(0).alexander == 1);
    CHECK(c->gen(0).maslov == 0);
    CHECK(c->gen(2).alexander == -1);
    CHECK(c->gen(2).maslov == -2);
}

TEST_CASE("validation names the broken constraint")
{
    // x -> U y with wrong Maslov grading for y
    KnotComplex bad({{"x", 0, 0}, {"y", 0, 0}}, {{{1, 1, 0}}, {}});
    CHECK(has(validate_complex(bad), "maslov"));

    // d^2 != 0: x -> y -> z with gradings consistent
    KnotComplex sq({{"x", 0, 0}, {"y", -1, -1}, {"z", -2, -2}}, {{{1, 0, 1}}, {{2, 0, 1}}, {}});
    CHECK(has(validate_complex(sq), "d-squared"));

    KnotComplex dup({{"x", 0, 0}, {"x", 0, 0}}, {{}, {}});
    CHECK_FALSE(validate_complex(dup).ok());
}

TEST_CASE("builders preserve validity")
{
    auto c = t23();
    auto b = share(box(0, 0, 0));
    for (const KnotComplex& k : {tensor(*c, *c), mirror(*c), reverse(*c), direct_sum(*c, *b), tensor(*b, mirror(*c))})
        CHECK(validate_complex(k).ok());
    CHECK(tensor(*c, *b).size() == 12);
    CHECK(mirror(mirror(*c)) == *c);
    CHECK(reverse(reverse(*c)) == *c);
}

TEST_CASE("permuting generators keeps validity")
{
    auto c = share(staircase_from_alexander({{1, 2, 4, 5}}));
    std::vector<int> perm(c->size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(perm.size() - 1 - i);
    KnotComplex p = permuted(*c, perm);
    CHECK(validate_complex(p).ok());
    CHECK(p.gen(0) == c->gen(static_cast<int>(c->size()) - 1));
}

TEST_CASE("identity, differential and composition")
{
    auto c = share(box(0, 0, 0));
    CHECK(is_chain_map(identity_map(c)));
    ChainMap d = differential_map(c);
    CHECK(is_chain_map(d));
    ChainMap dd = compose(d, d);
    for (const auto& img : dd.images) CHECK(img.empty());
    CHECK(check_map(identity_map(c)).ok());
}

TEST_CASE("homotopy search finds dH + Hd")
{
    // thin complexes admit no degree one maps, so use a non-thin staircase
    auto c = share(tensor(staircase_from_alexander({{1, 2, 4, 5}}), box(0, 0, 0)));
    std::mt19937 rng(5);
    MapSpace hs(c, c, MapClass::filtered, 1, 0, 2);
    REQUIRE(hs.dim() > 0);
    ChainMap d = differential_map(c);
    for (int t = 0; t < 8; ++t) {
        gf2::Row r(hs.dim());
        for (std::size_t i = 0; i < hs.dim(); ++i) r[i] = rng() & 1;
        ChainMap h = hs.to_map(r);
        ChainMap f = add(identity_map(c), add(compose(d, h), compose(h, d)));
        CHECK(is_chain_map(f));
        CHECK(are_homotopic(f, identity_map(c)).found());
    }
}

TEST_CASE("identity is not null-homotopic on T2,3")
{
    auto c = t23();
    auto r = are_homotopic(identity_map(c), zero_map(c, c, MapClass::filtered, 0, 0));
    CHECK_FALSE(r.found());
}

TEST_CASE("skew maps swap U and V")
{
    auto c = t23();
    auto s = map_from_table(c, c, MapClass::skew,
                            {{"x0", {{0, 0, "x2"}}}, {"x1", {{0, 0, "x1"}}}, {"x2", {{0, 0, "x0"}}}});
    CHECK(is_chain_map(s));
    CHECK(check_map(s).ok());
    Poly p = apply(s, {{1, 1, 0}});
    REQUIRE(p.size() == 1);
    CHECK(p[0].u == 0);
    CHECK(p[0].v == 1);
    ChainMap ss = compose(s, s);
    CHECK(ss.cls == MapClass::filtered);
    CHECK(equal(ss, identity_map(c)));
}

TEST_CASE("term exponents follow the class rules")
{
    Generator x{"x", 0, 1};
    CHECK_FALSE(term_exponents(MapClass::filtered, 0, 0, x, {"w", -2, -1}).has_value());
    CHECK(term_exponents(MapClass::filtered, 0, 0, x, {"y", 2, 2}) == std::pair{1, 0});
    CHECK(term_exponents(MapClass::filtered, 0, 0, x, {"z", 0, 0}) == std::pair{0, 1});
    // skew: M(y) - 2a = grz(x) = -2 and A(y) - a + b = -A(x)
    CHECK(term_exponents(MapClass::skew, 0, 0, x, {"y", -2, -1}) == std::pair{0, 0});
}
