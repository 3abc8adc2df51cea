#include "eqcfk/models.hpp"

#include <doctest.h>

using namespace eqcfk;

TEST_CASE("n invariant from the Alexander exponents")
{
    CHECK(n_invariant({}) == 0);
    CHECK(n_invariant({{1}}) == 1);
    CHECK(n_invariant({{1, 2}}) == 1);
    CHECK(n_invariant({{2, 3}}) == 1);
    CHECK(n_invariant({{1, 2, 4, 5}}) == 2);
    CHECK_THROWS(check_alexander({{2, 1}}));
    CHECK_THROWS(check_alexander({{0}}));
}

TEST_CASE("Alexander coefficients")
{
    CHECK(alexander_from_coefficients({1}).exponents.empty());
    CHECK(alexander_from_coefficients({1, -1, 1}).exponents == std::vector<int>{1});
    CHECK(alexander_from_coefficients({1, -1, 1, -1, 1}).exponents == std::vector<int>{1, 2});
    CHECK(alexander_from_coefficients({1, -1, 0, 1, -1, 1, 0, -1, 1}).exponents == std::vector<int>{1, 3, 4});
    CHECK_THROWS(alexander_from_coefficients({-1, 3, -1}));  // figure-eight
    CHECK_THROWS(alexander_from_coefficients({1, -1}));
    CHECK_THROWS(alexander_from_coefficients({1, 1, 1}));
}

TEST_CASE("staircase round trip")
{
    for (std::vector<int> e : {std::vector<int>{}, {1}, {1, 2}, {2, 3}, {1, 2, 4, 5}, {1, 3, 4, 7}}) {
        KnotComplex c = staircase_from_alexander({e});
        CHECK(validate_complex(c).ok());
        CHECK(c.size() == 2 * e.size() + 1);
        CHECK(alexander_of_staircase(c).exponents == e);
    }
}

TEST_CASE("box gradings")
{
    KnotComplex b = box(1, 3, 4, "q");
    CHECK(validate_complex(b).ok());
    CHECK(b.gen(0).name == "aq");
    CHECK(b.gen(0).alexander == 2);
    CHECK(initial_corners(b) == std::vector<int>{0});
}

TEST_CASE("thin models")
{
    for (int tau : {-2, -1, 0, 1, 2}) {
        KnotComplex c = thin_model({tau, {{0, 0, 1}, {0, 1, 2}}});
        CHECK(validate_complex(c).ok());
        CHECK(thin_tau(c) == tau);
        CHECK(c.size() == static_cast<std::size_t>(2 * std::abs(tau) + 1 + 12));
        CHECK_FALSE(diagonally_supported(c));
        CHECK(diagonally_supported(thin_model({tau, {{0, 0, 2}}})));
    }
    CHECK_FALSE(thin_tau(staircase_from_alexander({{1, 2, 4, 5}})).has_value());
    CHECK_THROWS_AS(diagonally_supported(staircase_from_alexander({{1, 2, 4, 5}})), std::invalid_argument);
}

TEST_CASE("library entries")
{
    const auto& lib = KnotLibrary::builtin();
    for (const auto& n : {"unknot", "T2,3", "T2,3bar", "T2,5", "T2,5bar", "4_1", "6_1", "6_2bar", "P(-2,3,7)", "KsumKr"})
        CHECK(lib.contains(n));
    for (const auto& n : lib.names()) {
        const auto& e = lib.get(n);
        CAPTURE(n);
        CHECK(validate_complex(*e.complex).ok());
        CHECK_FALSE(e.provenance.empty());
    }
    CHECK(lib.get("T2,3").complex->size() == 3);
    CHECK(lib.get("4_1").complex->size() == 5);
    CHECK(lib.get("KsumKr").complex->size() == 9);
    CHECK(thin_tau(*lib.get("6_2bar").complex) == 1);
    CHECK(lib.get("T2,5").n_invariant == 1);
    CHECK_THROWS_AS(lib.get("nope"), std::out_of_range);
}

TEST_CASE("library from json rejects bad constructions")
{
    nlohmann::json j = {{"format_version", 1},
                        {"knots", {{{"name", "k"}, {"genus", 1}, {"construction", {{"type", "staircase"}, {"exponents", {2, 1}}}},
                                    {"symmetries", {"periodic"}}, {"provenance", "test"}}}}};
    CHECK_THROWS(KnotLibrary::from_json(j));
    j["knots"][0]["construction"]["exponents"] = {1};
    auto lib = KnotLibrary::from_json(j);
    CHECK(lib.get("k").complex->size() == 3);
}
