#include "eqcfk/surgery.hpp"

#include <doctest.h>

using namespace eqcfk;

namespace {

const KnotLibrary& lib()
{
    static const KnotLibrary l = KnotLibrary::builtin();
    return l;
}

CorrectionTerms terms(const std::string& k, ActionKind kind, Flavor f)
{
    return cone_invariants(induce_action_on_A(library_action(lib().get(k), kind, lib())), f).terms;
}

IotaComplex model(const std::string& k, ActionKind kind, bool rev)
{
    auto c = iota_complex(induce_action_on_A(library_action(lib().get(k), kind, lib())));
    return rev ? orientation_reverse(c) : c;
}

}  // namespace

TEST_CASE("A minus presentation")
{
    auto a = a_minus(lib().get("T2,3").complex, 0);
    CHECK(a.presentation.size() == 3);
    CHECK(a.m == std::vector<int>{2, 1, 1});
    check_fcomplex(a.presentation);
    auto b = a_minus(lib().get("T2,3").complex, 5);
    CHECK(d_invariant(b) == 0);
}

TEST_CASE("correction terms")
{
    struct Row {
        const char* knot;
        ActionKind kind;
        Flavor flavor;
        int d, lo, hi;
    };
    for (const auto& r : {Row{"unknot", ActionKind::periodic, Flavor::tau, 0, 0, 0},
                          Row{"T2,3", ActionKind::strong, Flavor::tau, -2, -2, -2},
                          Row{"T2,5", ActionKind::periodic, Flavor::tau, -2, -2, -2},
                          Row{"T2,3bar", ActionKind::strong, Flavor::tau, 0, 0, 2},
                          Row{"T2,3bar", ActionKind::periodic, Flavor::tau, 0, 0, 0},
                          Row{"4_1", ActionKind::periodic, Flavor::tau, 0, -2, 0},
                          Row{"6_1", ActionKind::periodic, Flavor::tau, 0, 0, 0},
                          Row{"P(-2,3,7)", ActionKind::strong, Flavor::tau, -4, -4, -4},
                          Row{"KsumKr", ActionKind::strong, Flavor::tau, -2, -2, -2},
                          Row{"KsumKr", ActionKind::composite, Flavor::iotatau, -2, -4, -2},
                          Row{"KsumKr", ActionKind::conjugation, Flavor::iota, -2, -4, -2}}) {
        CAPTURE(r.knot);
        CAPTURE(to_string(r.kind));
        auto t = terms(r.knot, r.kind, r.flavor);
        CHECK(t.d == r.d);
        CHECK(t.d_lower == r.lo);
        CHECK(t.d_upper == r.hi);
    }
}

TEST_CASE("surgery values are exact fractions")
{
    CHECK(surgery_value(-2, 7).str() == "-1/2");
    CHECK(surgery_value(-2, 15).str() == "3/2");
    CHECK(surgery_value(0, 1).str() == "0");
    CHECK(surgery_value(0, 5).str() == "1");
    CHECK(surgery_value(-2, 3, 5).below_bound);
    CHECK_FALSE(surgery_value(-2, 7, 1).below_bound);
    CHECK(render(boost::rational<long>(-3, 4)) == "-3/4");
}

TEST_CASE("flavor names")
{
    for (auto f : {Flavor::tau, Flavor::iotatau, Flavor::iota}) CHECK(flavor_from_string(to_string(f)) == f);
    CHECK_FALSE(flavor_from_string("sigma").has_value());
}

TEST_CASE("local equivalence verdicts")
{
    IotaComplex triv = trivial_iota_complex();
    CHECK(compare_local(model("T2,3bar", ActionKind::strong, true), triv) == Verdict::first_less);
    CHECK(compare_local(model("T2,3bar", ActionKind::periodic, true), triv) == Verdict::equivalent);
    CHECK(compare_local(model("6_1", ActionKind::periodic, false), triv) == Verdict::equivalent);
    CHECK(compare_local(model("4_1", ActionKind::periodic, false), triv) == Verdict::first_less);
    CHECK(compare_local(triv, model("4_1", ActionKind::periodic, false)) == Verdict::first_greater);
    CHECK(compare_local(triv, triv) == Verdict::equivalent);
    auto t = orientation_reverse(triv);
    CHECK(t.c.gr == triv.c.gr);
}

TEST_CASE("iota complexes are checked")
{
    auto m = model("4_1", ActionKind::periodic, false);
    check_iota_complex(m);
    IotaComplex two{{{"s", "t"}, {0, 0}, gf2::Mat(2, 2)}, gf2::Mat::identity(2)};
    CHECK_THROWS(check_iota_complex(two));
    IotaComplex odd{{{"s", "t"}, {0, 1}, gf2::Mat(2, 2)}, gf2::Mat::identity(2)};
    odd.iota(1, 0) = 1;
    CHECK_THROWS(check_iota_complex(odd));
}

TEST_CASE("dual action")
{
    auto p = library_action(lib().get("T2,3"), ActionKind::strong, lib());
    auto q = orientation_reverse(p);
    CHECK(q.certificate.ok());
    CHECK(*q.complex == mirror(*p.complex));
    auto back = orientation_reverse(q);
    CHECK(equal(back.action, p.action));
}

TEST_CASE("filtered cone export")
{
    auto p = library_action(lib().get("4_1"), ActionKind::periodic, lib());
    KnotComplex k = export_filtered_cone(p, Flavor::tau);
    CHECK(validate_complex(k).ok());
    CHECK(k.size() == 10);
    CHECK(k.index_of("Q·a1") >= 0);
    CHECK_THROWS(export_filtered_cone(p, Flavor::iota));
    auto s = library_action(lib().get("T2,3"), ActionKind::strong, lib());
    CHECK_THROWS(export_filtered_cone(s, Flavor::tau));
}

TEST_CASE("identity action collapses the three values")
{
    for (const auto& n : lib().names()) {
        AComplex a = a_minus(lib().get(n).complex, 0);
        a.induced_action = gf2::Mat::identity(a.presentation.size());
        auto t = cone_invariants(a, Flavor::tau).terms;
        CHECK(t.d_lower == t.d);
        CHECK(t.d_upper == t.d);
        CHECK(t.d == d_invariant(a));
    }
}
