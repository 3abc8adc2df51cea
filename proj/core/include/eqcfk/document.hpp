#pragma once

#include "eqcfk/involutions.hpp"
#include "eqcfk/surgery.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcfk {

inline constexpr int document_format_version = 1;

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComplexDocument {
    int format_version = document_format_version;
    ComplexPtr complex;
    std::map<std::string, ActionPackage> actions;
    nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json poly_to_json(const KnotComplex& target, const Poly& p);
nlohmann::json to_json(const ComplexDocument& doc);
nlohmann::json to_json(const ChainMap& f);
nlohmann::json to_json(const Certificate& c);

// throws DocumentError naming the offending field, generator or constraint
ComplexDocument document_from_json(const nlohmann::json& j);
// parse errors carry line and column
ComplexDocument parse_document(const std::string& text);
std::string render_document(const ComplexDocument& doc);

bool same_document(const ComplexDocument& a, const ComplexDocument& b);

ComplexDocument document_for(const KnotEntry& e);

struct ReportRow {
    std::string knot;
    std::string symmetry;
    std::string flavor;
    int d = 0;
    int d_lower = 0;
    int d_upper = 0;
    std::optional<int> p;
    std::optional<SurgeryValue> surgery;
    std::string provenance;
};

enum class Format { csv, json, table };
std::optional<Format> format_from_string(std::string_view s);
std::string render_rows(const std::vector<ReportRow>& rows, Format f);

}  // namespace eqcfk
