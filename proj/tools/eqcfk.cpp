#include "eqcfk/document.hpp"
#include "eqcfk/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace eqcfk;

namespace {

struct Input {
    ComplexDocument doc;
    KnotEntry entry;  // library entry, or a stand-in for a free document
    bool from_library = false;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// a knot name from the library or a path to a ComplexDocument
Input load_input(const std::string& arg)
{
    const KnotLibrary& lib = KnotLibrary::instance();
    Input in;
    if (lib.contains(arg) && !std::filesystem::exists(arg)) {
        in.entry = lib.get(arg);
        in.doc = document_for(in.entry);
        in.from_library = true;
        return in;
    }
    in.doc = parse_document(slurp(arg));
    std::string knot = in.doc.metadata.value("knot", "");
    if (lib.contains(knot) && *lib.get(knot).complex == *in.doc.complex) {
        in.entry = lib.get(knot);
        in.from_library = true;
    } else {
        in.entry.name = knot.empty() ? std::filesystem::path(arg).stem().string() : knot;
        in.entry.complex = in.doc.complex;
        in.entry.symmetries = {"periodic", "strong", "conjugation"};
        in.entry.provenance = "document:" + arg;
        in.entry.construction = {{"type", "document"}};
    }
    return in;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> v;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) v.push_back(std::stoi(tok));
    return v;
}

// "tau" or "tau:i0,j0,count;i0,j0,count"
ThinModelSpec parse_thin(const std::string& s)
{
    ThinModelSpec spec;
    auto colon = s.find(':');
    spec.stair_tau = std::stoi(s.substr(0, colon));
    if (colon == std::string::npos) return spec;
    std::istringstream is(s.substr(colon + 1));
    std::string box;
    while (std::getline(is, box, ';')) {
        auto v = parse_ints(box);
        if (v.size() < 2 || v.size() > 3) throw std::invalid_argument("box spec needs i0,j0[,count]: " + box);
        spec.boxes.push_back({v[0], v[1], v.size() == 3 ? v[2] : 1});
    }
    return spec;
}

ActionKind kind_arg(const std::string& s)
{
    auto k = action_kind_from_string(s);
    if (!k) throw std::invalid_argument("unknown action kind: " + s);
    return *k;
}

bool kind_fits(ActionKind k, Flavor f)
{
    switch (f) {
    case Flavor::tau: return k == ActionKind::periodic || k == ActionKind::strong;
    case Flavor::iotatau: return k == ActionKind::composite;
    case Flavor::iota: return k == ActionKind::conjugation;
    }
    return false;
}

std::vector<ActionKind> listed_kinds(const KnotEntry& e)
{
    auto has = [&](const char* k) { return std::find(e.symmetries.begin(), e.symmetries.end(), k) != e.symmetries.end(); };
    std::vector<ActionKind> out;
    for (auto k : {ActionKind::periodic, ActionKind::strong, ActionKind::conjugation})
        if (has(to_string(k))) out.push_back(k);
    if (has("strong") && has("conjugation")) out.push_back(ActionKind::composite);
    return out;
}

// "trivial" or knot[:kind[:rev]]
IotaComplex local_model(const std::string& spec, int bound)
{
    if (spec == "trivial") return trivial_iota_complex();
    std::vector<std::string> parts;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ':')) parts.push_back(tok);
    // knot names may carry commas but never colons
    if (parts.empty()) throw std::invalid_argument("empty model");
    Input in = load_input(parts[0]);
    ActionKind k = parts.size() > 1 ? kind_arg(parts[1]) : ActionKind::periodic;
    bool rev = parts.size() > 2 && parts[2] == "rev";
    if (parts.size() > 2 && !rev) throw std::invalid_argument("expected 'rev', got " + parts[2]);
    IotaComplex c = iota_complex(induce_action_on_A(library_action(in.entry, k, KnotLibrary::instance(), bound)));
    return rev ? orientation_reverse(c) : c;
}

int run_verify_cmd(const std::vector<std::string>& only, int bound, bool quiet)
{
    std::optional<KnotLibrary> lib;
    try {
        lib = KnotLibrary::instance();
    } catch (const std::exception& e) {
        for (const auto& c : criteria())
            if (only.empty() || std::find(only.begin(), only.end(), c.group) != only.end())
                std::cout << "criterion " << c.number << " " << c.group << " FAIL (library: " << e.what() << ")\n";
        return 1;
    }
    VerifyReport r = run_verify(*lib, only, bound);
    for (const auto& c : r.checks)
        if (!quiet || !c.pass)
            std::cout << (c.pass ? "  ok    " : "  FAIL  ") << "[" << c.group << "] " << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    auto per = r.per_criterion();
    for (const auto& c : criteria()) {
        auto it = per.find(c.number);
        if (it == per.end()) continue;
        std::cout << "criterion " << c.number << " " << c.group << " " << (it->second ? "PASS" : "FAIL") << "\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"eqcfk: equivariant knot Floer model complexes"};
    app.require_subcommand(1);
    int bound = 20;
    app.add_option("--bound", bound, "log2 cap on classifier enumeration")->capture_default_str();

    auto* build = app.add_subcommand("build", "write a validated ComplexDocument");
    std::string b_name, b_alex, b_exp, b_thin, b_out;
    build->add_option("name", b_name, "library knot");
    build->add_option("--alexander", b_alex, "symmetric coefficients, top degree first, e.g. 1,-1,1");
    build->add_option("--exponents", b_exp, "staircase exponents n_1 < ... < n_m, e.g. 1,2");
    build->add_option("--thin", b_thin, "tau[:i0,j0,count;...]");
    build->add_option("-o,--output", b_out);

    auto* act = app.add_subcommand("action", "attach a certified action");
    std::string a_in, a_kind, a_expect, a_out;
    act->add_option("input", a_in, "knot name or document")->required();
    act->add_option("kind", a_kind, "periodic, strong, conjugation or composite")->required();
    act->add_option("--expect", a_expect, "id: fail unless the action is the identity");
    act->add_option("-o,--output", a_out);

    auto* inv = app.add_subcommand("invariants", "correction terms and surgery values");
    std::string i_in, i_flavor = "tau", i_format = "table";
    std::vector<int> i_p;
    inv->add_option("input", i_in)->required();
    inv->add_option("--flavor", i_flavor)->check(CLI::IsMember({"tau", "iotatau", "iota"}));
    inv->add_option("--surgery", i_p, "surgery coefficients p");
    inv->add_option("--format", i_format)->check(CLI::IsMember({"csv", "json", "table"}));

    auto* cls = app.add_subcommand("classify", "classes of periodic-type actions");
    std::string c_in, c_format = "table";
    bool c_skew = false;
    cls->add_option("input", c_in)->required();
    cls->add_flag("--skew", c_skew, "classify skew-filtered actions");
    cls->add_option("--format", c_format)->check(CLI::IsMember({"json", "table"}));

    auto* cmp = app.add_subcommand("compare-local", "local-equivalence verdict");
    std::string l_a, l_b = "trivial";
    int l_bound = 4;
    cmp->add_option("first", l_a, "knot[:kind[:rev]] or trivial")->required();
    cmp->add_option("second", l_b)->capture_default_str();
    cmp->add_option("--power-bound", l_bound)->capture_default_str();

    auto* ci = app.add_subcommand("export-ci", "filtered mapping cone document");
    std::string e_in, e_flavor = "tau", e_out;
    ci->add_option("input", e_in)->required();
    ci->add_option("--flavor", e_flavor)->check(CLI::IsMember({"tau", "iotatau"}));
    ci->add_option("-o,--output", e_out);

    auto* ver = app.add_subcommand("verify", "golden values and property suite");
    std::vector<std::string> v_only;
    bool v_quiet = false;
    ver->add_option("--only", v_only, "groups to run");
    ver->add_flag("-q,--quiet", v_quiet, "print failures and the summary only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ver) return run_verify_cmd(v_only, bound, v_quiet);
        const KnotLibrary& lib = KnotLibrary::instance();

        if (*build) {
            int given = !b_name.empty() + !b_alex.empty() + !b_exp.empty() + !b_thin.empty();
            if (given != 1) throw std::invalid_argument("give exactly one of a name, --alexander, --exponents or --thin");
            ComplexDocument doc;
            if (!b_name.empty()) {
                doc = document_for(lib.get(b_name));
            } else if (!b_alex.empty() || !b_exp.empty()) {
                AlexanderPolynomial a = b_exp.empty() ? alexander_from_coefficients(parse_ints(b_alex))
                                                      : AlexanderPolynomial{parse_ints(b_exp)};
                doc.complex = share(staircase_from_alexander(a));
                doc.metadata = {{"alexander", a.exponents}, {"n", n_invariant(a)}, {"provenance", "builder:staircase"}};
            } else {
                ThinModelSpec spec = parse_thin(b_thin);
                doc.complex = share(thin_model(spec));
                doc.metadata = {{"thin", b_thin}, {"provenance", "builder:thin"}};
            }
            auto rep = validate_complex(*doc.complex);
            if (!rep.ok()) throw DocumentError(rep.str());
            emit(render_document(doc), b_out);
            return 0;
        }

        if (*act) {
            Input in = load_input(a_in);
            ActionKind k = kind_arg(a_kind);
            ActionPackage p = library_action(in.entry, k, lib, bound);
            if (!a_expect.empty()) {
                if (a_expect != "id") throw std::invalid_argument("--expect understands only 'id'");
                if (!equal(p.action, identity_map(p.complex))) {
                    std::cerr << "expectation failed: action is not the identity\n";
                    return 1;
                }
            }
            in.doc.actions.insert_or_assign(to_string(k), p);
            emit(render_document(in.doc), a_out);
            return 0;
        }

        if (*inv) {
            Input in = load_input(i_in);
            Flavor fl = *flavor_from_string(i_flavor);
            std::vector<std::pair<std::string, ActionPackage>> acts;
            if (in.from_library && in.doc.actions.empty()) {
                for (auto k : listed_kinds(in.entry))
                    if (kind_fits(k, fl)) acts.push_back({to_string(k), library_action(in.entry, k, lib, bound)});
            } else {
                for (const auto& [label, p] : in.doc.actions)
                    if (kind_fits(p.kind, fl)) acts.push_back({label, p});
            }
            if (acts.empty()) throw std::invalid_argument(std::string("no action fits flavor ") + i_flavor + " on " + in.entry.name);
            std::vector<ReportRow> rows;
            for (const auto& [label, p] : acts) {
                auto t = cone_invariants(induce_action_on_A(p), fl).terms;
                ReportRow r{in.entry.name, label, i_flavor, t.d, t.d_lower, t.d_upper, std::nullopt, std::nullopt, in.entry.provenance};
                if (i_p.empty()) {
                    rows.push_back(r);
                    continue;
                }
                for (int p : i_p) {
                    r.p = p;
                    r.surgery = surgery_value(t.d_lower, p, in.entry.genus);
                    rows.push_back(r);
                }
            }
            std::cout << render_rows(rows, *format_from_string(i_format));
            return 0;
        }

        if (*cls) {
            Input in = load_input(c_in);
            Classifier c(in.doc.complex, c_skew ? MapClass::skew : MapClass::filtered, bound);
            const char* status = c.status() == Classifier::Status::complete ? "complete" : "bound_exceeded";
            if (c_format == "json") {
                nlohmann::json j = {{"knot", in.entry.name}, {"status", status}, {"candidates", c.candidates()},
                                    {"group_order", c.group_order()}, {"classes", nlohmann::json::array()}};
                for (const auto& f : c.classes()) j["classes"].push_back(to_json(f));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << in.entry.name << ": " << c.classes().size() << " class(es), status " << status << ", "
                          << c.candidates() << " candidates, group order " << c.group_order() << "\n";
                for (std::size_t i = 0; i < c.classes().size(); ++i) {
                    const auto& f = c.classes()[i];
                    std::cout << "class " << i << "\n";
                    for (std::size_t x = 0; x < f.images.size(); ++x) {
                        std::cout << "  " << f.source->gen(static_cast<int>(x)).name << " -> ";
                        if (f.images[x].empty()) std::cout << "0";
                        for (std::size_t t = 0; t < f.images[x].size(); ++t) {
                            const auto& m = f.images[x][t];
                            std::cout << (t ? " + " : "");
                            if (m.u) std::cout << "U" << (m.u > 1 ? "^" + std::to_string(m.u) : "");
                            if (m.v) std::cout << "V" << (m.v > 1 ? "^" + std::to_string(m.v) : "");
                            std::cout << f.target->gen(m.gen).name;
                        }
                        std::cout << "\n";
                    }
                }
            }
            return c.status() == Classifier::Status::complete ? 0 : 2;
        }

        if (*cmp) {
            Verdict v = compare_local(local_model(l_a, bound), local_model(l_b, bound), l_bound);
            std::cout << l_a << " vs " << l_b << ": " << to_string(v) << "\n";
            return v == Verdict::inconclusive ? 2 : 0;
        }

        if (*ci) {
            Input in = load_input(e_in);
            Flavor fl = *flavor_from_string(e_flavor);
            ActionKind k = fl == Flavor::tau ? ActionKind::periodic : ActionKind::composite;
            ActionPackage p = library_action(in.entry, k, lib, bound);
            ComplexDocument doc;
            doc.complex = share(export_filtered_cone(p, fl));
            doc.metadata = {{"knot", in.entry.name}, {"flavor", e_flavor}, {"cone_of", to_string(k)},
                            {"provenance", in.entry.provenance}};
            emit(render_document(doc), e_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
