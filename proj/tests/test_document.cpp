#include "eqcfk/document.hpp"

#include <doctest.h>

using namespace eqcfk;

namespace {

const KnotLibrary& lib()
{
    static const KnotLibrary l = KnotLibrary::builtin();
    return l;
}

std::string error_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("round trip with actions")
{
    for (const auto& n : lib().names()) {
        CAPTURE(n);
        const auto& e = lib().get(n);
        ComplexDocument doc = document_for(e);
        for (const auto& s : e.symmetries) {
            auto k = *action_kind_from_string(s);
            doc.actions.emplace(s, library_action(e, k, lib()));
        }
        std::string text = render_document(doc);
        ComplexDocument back = parse_document(text);
        CHECK(same_document(doc, back));
        CHECK(render_document(back) == text);
    }
}

TEST_CASE("rendering is deterministic")
{
    auto e = lib().get("KsumKr");
    ComplexDocument a = document_for(e), b = document_for(e);
    a.actions.emplace("strong", library_action(e, ActionKind::strong, lib()));
    b.actions.emplace("strong", library_action(e, ActionKind::strong, lib()));
    CHECK(render_document(a) == render_document(b));
}

TEST_CASE("parse errors carry a position")
{
    std::string msg = error_of("{\n  \"format_version\": 1,\n  \"generators\": [,]\n}");
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("field errors name the field")
{
    CHECK(error_of(R"({"generators": []})").find("format_version") != std::string::npos);
    CHECK(error_of(R"({"format_version": 2, "generators": []})").find("unsupported") != std::string::npos);
    CHECK(error_of(R"({"format_version": 1, "generators": [{"name": "x", "maslov": 0}]})").find("alexander") != std::string::npos);
    std::string unknown = R"({"format_version": 1, "generators": [{"name": "x", "maslov": 0, "alexander": 0}],
        "differential": {"x": [{"u": 0, "v": 0, "target": "y"}]}})";
    CHECK(error_of(unknown).find("unknown target generator 'y'") != std::string::npos);
    std::string invalid = R"({"format_version": 1, "generators": [{"name": "x", "maslov": 0, "alexander": 0},
        {"name": "y", "maslov": 0, "alexander": 0}], "differential": {"x": [{"u": 0, "v": 0, "target": "y"}]}})";
    CHECK(error_of(invalid).find("maslov at generator x") != std::string::npos);
}

TEST_CASE("attached actions are re-certified")
{
    auto e = lib().get("4_1");
    ComplexDocument doc = document_for(e);
    doc.actions.emplace("periodic", library_action(e, ActionKind::periodic, lib()));
    auto j = to_json(doc);
    // drop x0 -> e1 so the square no longer matches the sarkar map
    j["actions"]["periodic"]["assignment"]["x0"] = {{{"u", 0}, {"v", 0}, {"target", "x0"}}};
    CHECK_THROWS_AS(document_from_json(j), DocumentError);
}

TEST_CASE("report rows")
{
    ReportRow r{"T2,3", "strong", "tau", -2, -2, -2, 7, surgery_value(-2, 7, 1), "golden:1"};
    std::string csv = render_rows({r}, Format::csv);
    CHECK(csv == "knot,symmetry,flavor,d,d_lower,d_upper,p,surgery_value,provenance\n\"T2,3\",strong,tau,-2,-2,-2,7,-1/2,golden:1\n");
    auto j = nlohmann::json::parse(render_rows({r}, Format::json));
    CHECK(j[0]["surgery_value"] == "-1/2");
    CHECK(j[0]["d_lower"] == -2);
    std::string table = render_rows({r}, Format::table);
    CHECK(table.find("surgery_value") != std::string::npos);
    CHECK(format_from_string("yaml") == std::nullopt);
}
