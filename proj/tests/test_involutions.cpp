#include "eqcfk/involutions.hpp"

#include <doctest.h>

#include <random>

using namespace eqcfk;

namespace {

const KnotLibrary& lib()
{
    static const KnotLibrary l = KnotLibrary::builtin();
    return l;
}

using Rows = std::vector<std::pair<std::string, std::vector<std::tuple<int, int, std::string>>>>;

}  // namespace

TEST_CASE("sarkar map")
{
    auto b = share(box(0, 0, 0));
    ChainMap s = sarkar_map(b);
    ChainMap want = map_from_table(b, b, MapClass::filtered,
                                   {{"a", {{0, 0, "a"}, {0, 0, "e"}}}, {"b", {{0, 0, "b"}}}, {"c", {{0, 0, "c"}}}, {"e", {{0, 0, "e"}}}});
    CHECK(equal(s, want));
    auto t = lib().get("T2,5").complex;
    CHECK(equal(sarkar_map(t), identity_map(t)));
}

TEST_CASE("Phi and Psi")
{
    auto b = share(box(0, 0, 0));
    auto pp = phi_psi(b);
    CHECK(is_chain_map(pp.phi));
    CHECK(is_chain_map(pp.psi));
    CHECK(pp.phi.maslov_shift == 1);
    CHECK(pp.psi.maslov_shift == -1);
    // sarkar = id + Phi Psi
    CHECK(equal(sarkar_map(b), add(identity_map(b), compose(pp.phi, pp.psi))));
}

TEST_CASE("staircase actions")
{
    for (const char* k : {"unknot", "T2,3", "T2,5", "P(-2,3,7)", "T2,3bar"}) {
        CAPTURE(k);
        auto c = lib().get(k).complex;
        CHECK(is_staircase(*c));
        auto s = strong_action_staircase(c);
        CHECK(s.certificate.ok());
        CHECK(s.certificate.square_exact);
        CHECK(s.action.cls == MapClass::skew);
        auto p = periodic_action_lspace(c);
        CHECK(p.certificate.ok());
        CHECK(equal(p.action, identity_map(c)));
    }
    CHECK_FALSE(is_staircase(*lib().get("4_1").complex));
}

TEST_CASE("contract failures are named")
{
    auto c = lib().get("4_1").complex;
    // the identity squares to id, not to the sarkar map
    CHECK_THROWS_AS(make_package(identity_map(c), ActionKind::periodic), ContractError);
    auto cert = certify(identity_map(c), ActionKind::periodic);
    CHECK_FALSE(cert.ok());
    CHECK_FALSE(cert.failures.empty());
    auto t = lib().get("T2,3").complex;
    CHECK_THROWS_AS(make_package(identity_map(t), ActionKind::strong), ContractError);
}

TEST_CASE("classifier on 4_1")
{
    auto c = lib().get("4_1").complex;
    Classifier cl(c, MapClass::filtered);
    REQUIRE(cl.status() == Classifier::Status::complete);
    CHECK(cl.classes().size() == 1);
    CHECK(cl.candidates() == 2);
    CHECK(cl.group_order() == 8);
    ChainMap q = map_from_table(c, c, MapClass::filtered,
                                Rows{{"x0", {{0, 0, "x0"}, {0, 0, "e1"}}}, {"a1", {{0, 0, "a1"}, {0, 0, "x0"}}},
                                     {"b1", {{0, 0, "b1"}}}, {"c1", {{0, 0, "c1"}}}, {"e1", {{0, 0, "e1"}}}});
    CHECK(cl.is_candidate(q));
    CHECK(cl.class_of(q) == std::optional<std::size_t>(0));
    CHECK_FALSE(cl.class_of(identity_map(c)).has_value());
}

TEST_CASE("class membership survives homotopy and conjugation")
{
    std::mt19937 rng(23);
    for (const char* k : {"4_1", "6_1", "6_2bar"}) {
        CAPTURE(k);
        auto c = lib().get(k).complex;
        Classifier cl(c, MapClass::filtered);
        REQUIRE(cl.classes().size() >= 1);
        ChainMap f = cl.classes().front();
        ChainMap d = differential_map(c);
        MapSpace hs(c, c, MapClass::filtered, 1, 0, 1);
        MapSpace auts(c, c, MapClass::filtered, 0, 0, 1);
        auto basis = auts.chain_maps();
        int tried = 0;
        for (int t = 0; t < 12; ++t) {
            gf2::Row r(hs.dim());
            for (std::size_t i = 0; i < hs.dim(); ++i) r[i] = rng() & 1;
            ChainMap h = hs.to_map(r);
            ChainMap g = add(f, add(compose(d, h), compose(h, d)));
            auto cls = cl.class_of(g);
            if (cls) CHECK(*cls == 0);

            gf2::Row m(auts.dim());
            for (const auto& b : basis)
                if (rng() & 1) m ^= b;
            ChainMap phi = auts.to_map(m);
            auto inv = invert(phi, 4);
            if (!inv) continue;
            ++tried;
            auto conj = cl.class_of(compose(*inv, compose(f, phi)));
            REQUIRE(conj.has_value());
            CHECK(*conj == 0);
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("skew involutions on staircases are unique")
{
    for (const char* k : {"T2,3", "T2,5", "T2,3bar", "P(-2,3,7)"}) {
        CAPTURE(k);
        auto c = lib().get(k).complex;
        auto all = skew_involutions(c);
        REQUIRE(all.size() == 1);
        CHECK(equal(all.front(), *reflection(c)));
    }
}

TEST_CASE("connected sum with the reverse")
{
    ReverseSum s = reverse_sum(lib().get("T2,3").complex);
    CHECK(s.sum->size() == 9);
    ChainMap e = exch_action(s);
    CHECK(e.cls == MapClass::skew);
    CHECK(is_chain_map(e));
    auto t = strong_sum_action(s);
    CHECK(t.certificate.ok());
    CHECK(equal(compose(t.action, t.action), identity_map(s.sum)));
    auto i = library_action(lib().get("KsumKr"), ActionKind::conjugation, lib());
    CHECK(i.certificate.ok());
    CHECK(i.certificate.square_target == "sarkar");
    auto it = library_action(lib().get("KsumKr"), ActionKind::composite, lib());
    CHECK(it.action.cls == MapClass::filtered);
    CHECK_THROWS_AS(library_action(lib().get("KsumKr"), ActionKind::periodic, lib()), std::invalid_argument);
}

TEST_CASE("iota on 4_1 exchanges b and c")
{
    auto c = lib().get("4_1").complex;
    auto i = iota_thin(c);
    CHECK(i.certificate.ok());
    Classifier cl(c, MapClass::skew);
    CHECK(cl.classes().size() == 1);
    ChainMap q = map_from_table(c, c, MapClass::skew,
                                Rows{{"x0", {{0, 0, "x0"}, {0, 0, "e1"}}}, {"a1", {{0, 0, "a1"}, {0, 0, "x0"}}},
                                     {"b1", {{0, 0, "c1"}}}, {"c1", {{0, 0, "b1"}}}, {"e1", {{0, 0, "e1"}}}});
    CHECK(cl.class_of(q) == std::optional<std::size_t>(0));
}

TEST_CASE("classify_periodic_type on 6_1 and 6_2bar")
{
    auto r = classify_periodic_type(lib().get("6_1").complex);
    CHECK(r.status == Classifier::Status::complete);
    CHECK(r.classes.size() == 1);
    auto r2 = classify_periodic_type(lib().get("6_2bar").complex);
    CHECK(r2.status == Classifier::Status::complete);
    CHECK(r2.classes.size() == 1);
    Classifier small(lib().get("6_1").complex, MapClass::filtered, 4);
    CHECK(small.status() == Classifier::Status::bound_exceeded);
}
