#include "eqcfk/document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace eqcfk {

using nlohmann::json;

json poly_to_json(const KnotComplex& target, const Poly& p)
{
    json out = json::array();
    for (const auto& m : p) out.push_back({{"u", m.u}, {"v", m.v}, {"target", target.gen(m.gen).name}});
    return out;
}

json to_json(const ChainMap& f)
{
    json a = json::object();
    for (std::size_t x = 0; x < f.images.size(); ++x)
        a[f.source->gen(static_cast<int>(x)).name] = poly_to_json(*f.target, f.images[x]);
    return a;
}

static const char* status_string(HomotopyResult::Status s)
{
    switch (s) {
    case HomotopyResult::Status::found: return "found";
    case HomotopyResult::Status::not_found_within_bound: return "not_found_within_bound";
    case HomotopyResult::Status::disproved: return "disproved";
    }
    return "?";
}

json to_json(const Certificate& c)
{
    return {{"filtration", to_string(c.filtration)},
            {"grading_preserving", c.grading_preserving},
            {"square_target", c.square_target},
            {"square_homotopy", status_string(c.square_status)},
            {"square_exact", c.square_exact},
            {"assumptions", c.assumptions},
            {"ok", c.ok()}};
}

json to_json(const ComplexDocument& doc)
{
    const KnotComplex& c = *doc.complex;
    json j;
    j["format_version"] = doc.format_version;
    j["generators"] = json::array();
    for (const auto& g : c.generators())
        j["generators"].push_back({{"name", g.name}, {"maslov", g.maslov}, {"alexander", g.alexander}});
    j["differential"] = json::object();
    for (std::size_t x = 0; x < c.size(); ++x)
        j["differential"][c.gen(static_cast<int>(x)).name] = poly_to_json(c, c.d(static_cast<int>(x)));
    if (!doc.actions.empty()) {
        j["actions"] = json::object();
        for (const auto& [label, p] : doc.actions)
            j["actions"][label] = {{"kind", to_string(p.kind)},
                                   {"filtration", to_string(p.action.cls)},
                                   {"maslov_shift", p.action.maslov_shift},
                                   {"alexander_shift", p.action.alexander_shift},
                                   {"assignment", to_json(p.action)},
                                   {"certificate", to_json(p.certificate)}};
    }
    j["metadata"] = doc.metadata;
    return j;
}

namespace {

template <class T>
T field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) throw DocumentError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw DocumentError(where + "." + key + ": " + e.what());
    }
}

Poly poly_from_json(const json& arr, const KnotComplex& target, const std::string& where)
{
    if (!arr.is_array()) throw DocumentError(where + ": expected a list of terms");
    Poly p;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string w = where + "[" + std::to_string(i) + "]";
        auto name = field<std::string>(arr[i], "target", w);
        int idx = target.index_of(name);
        if (idx < 0) throw DocumentError(w + ": unknown target generator '" + name + "'");
        p.push_back({idx, field<int>(arr[i], "u", w), field<int>(arr[i], "v", w)});
    }
    normalize(p);
    return p;
}

}  // namespace

ComplexDocument document_from_json(const json& j)
{
    if (!j.is_object()) throw DocumentError("document: expected a JSON object");
    ComplexDocument doc;
    doc.format_version = field<int>(j, "format_version", "document");
    if (doc.format_version != document_format_version)
        throw DocumentError("document: unsupported format_version " + std::to_string(doc.format_version));

    std::vector<Generator> gens;
    const json& gj = j.contains("generators") ? j["generators"] : throw DocumentError("document: missing field 'generators'");
    if (!gj.is_array()) throw DocumentError("generators: expected a list");
    for (std::size_t i = 0; i < gj.size(); ++i) {
        std::string w = "generators[" + std::to_string(i) + "]";
        gens.push_back({field<std::string>(gj[i], "name", w), field<int>(gj[i], "maslov", w), field<int>(gj[i], "alexander", w)});
    }
    KnotComplex names_only(gens, std::vector<Poly>(gens.size()));
    std::vector<Poly> diff(gens.size());
    if (j.contains("differential")) {
        const json& dj = j["differential"];
        if (!dj.is_object()) throw DocumentError("differential: expected an object");
        for (const auto& [src, terms] : dj.items()) {
            int idx = names_only.index_of(src);
            if (idx < 0) throw DocumentError("differential." + src + ": unknown source generator");
            diff[idx] = poly_from_json(terms, names_only, "differential." + src);
        }
    }
    KnotComplex c(std::move(gens), std::move(diff));
    auto rep = validate_complex(c);
    if (!rep.ok()) {
        std::string msg = "complex failed validation:";
        for (const auto& v : rep.violations) msg += "\n  " + v.constraint + " at generator " + v.where + ": " + v.detail;
        throw DocumentError(msg);
    }
    doc.complex = share(std::move(c));

    if (j.contains("actions")) {
        for (const auto& [label, aj] : j["actions"].items()) {
            std::string w = "actions." + label;
            auto kind = action_kind_from_string(field<std::string>(aj, "kind", w));
            if (!kind) throw DocumentError(w + ".kind: unknown action kind");
            auto cls = map_class_from_string(field<std::string>(aj, "filtration", w));
            if (!cls) throw DocumentError(w + ".filtration: unknown filtration class");
            ChainMap f = zero_map(doc.complex, doc.complex, *cls, aj.value("maslov_shift", 0), aj.value("alexander_shift", 0));
            const json& asg = aj.contains("assignment") ? aj["assignment"] : throw DocumentError(w + ": missing field 'assignment'");
            for (const auto& [src, terms] : asg.items()) {
                int idx = doc.complex->index_of(src);
                if (idx < 0) throw DocumentError(w + ".assignment." + src + ": unknown source generator");
                f.images[idx] = poly_from_json(terms, *doc.complex, w + ".assignment." + src);
            }
            std::vector<std::string> assumptions;
            if (aj.contains("certificate") && aj["certificate"].contains("assumptions"))
                assumptions = aj["certificate"]["assumptions"].get<std::vector<std::string>>();
            try {
                doc.actions.emplace(label, make_package(std::move(f), *kind, assumptions));
            } catch (const ContractError& e) {
                throw DocumentError(w + ": " + e.what());
            }
        }
    }
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    return doc;
}

ComplexDocument parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw DocumentError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    return document_from_json(j);
}

std::string render_document(const ComplexDocument& doc) { return to_json(doc).dump(2) + "\n"; }

bool same_document(const ComplexDocument& a, const ComplexDocument& b)
{
    if (a.format_version != b.format_version || !(*a.complex == *b.complex) || a.metadata != b.metadata) return false;
    if (a.actions.size() != b.actions.size()) return false;
    for (const auto& [label, p] : a.actions) {
        auto it = b.actions.find(label);
        if (it == b.actions.end()) return false;
        const auto& q = it->second;
        if (p.kind != q.kind || p.action.cls != q.action.cls || p.action.images != q.action.images ||
            p.action.maslov_shift != q.action.maslov_shift || p.action.alexander_shift != q.action.alexander_shift)
            return false;
    }
    return true;
}

ComplexDocument document_for(const KnotEntry& e)
{
    ComplexDocument doc;
    doc.complex = e.complex;
    json m = {{"knot", e.name}, {"genus", e.genus}, {"symmetries", e.symmetries}, {"provenance", e.provenance}};
    if (e.alexander) m["alexander"] = *e.alexander;
    if (e.n_invariant) m["n"] = *e.n_invariant;
    if (!e.notes.empty()) m["notes"] = e.notes;
    doc.metadata = m;
    return doc;
}

std::optional<Format> format_from_string(std::string_view s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    if (s == "table") return Format::table;
    return std::nullopt;
}

namespace {

std::vector<std::string> cells(const ReportRow& r)
{
    return {r.knot,
            r.symmetry,
            r.flavor,
            std::to_string(r.d),
            std::to_string(r.d_lower),
            std::to_string(r.d_upper),
            r.p ? std::to_string(*r.p) : "",
            r.surgery ? render(r.surgery->value) : "",
            r.provenance + (r.surgery && r.surgery->below_bound ? " [p below genus bound]" : "")};
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string render_rows(const std::vector<ReportRow>& rows, Format f)
{
    const std::vector<std::string> header = {"knot", "symmetry", "flavor", "d", "d_lower", "d_upper", "p", "surgery_value", "provenance"};
    std::ostringstream os;
    switch (f) {
    case Format::csv:
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& r : rows) {
            auto c = cells(r);
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_cell(c[i]);
            os << "\n";
        }
        break;
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows) {
            json o = {{"knot", r.knot}, {"symmetry", r.symmetry}, {"flavor", r.flavor}, {"d", r.d},
                      {"d_lower", r.d_lower}, {"d_upper", r.d_upper}, {"provenance", r.provenance}};
            if (r.p) o["p"] = *r.p;
            if (r.surgery) {
                o["surgery_value"] = render(r.surgery->value);
                o["below_genus_bound"] = r.surgery->below_bound;
            }
            arr.push_back(o);
        }
        os << arr.dump(2) << "\n";
        break;
    }
    case Format::table: {
        std::vector<std::size_t> w(header.size());
        std::vector<std::vector<std::string>> all = {header};
        for (const auto& r : rows) all.push_back(cells(r));
        for (const auto& row : all)
            for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
        for (const auto& row : all) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i + 1 < row.size()) os << std::left << std::setw(static_cast<int>(w[i])) << row[i] << "  ";
                else os << row[i];
            }
            os << "\n";
        }
        break;
    }
    }
    return os.str();
}

}  // namespace eqcfk
