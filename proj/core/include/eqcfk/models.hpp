#pragma once

#include "eqcfk/complex.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqcfk {

// Δ(t) = (-1)^m + Σ (-1)^(m-i) (t^n_i + t^-n_i), exponents strictly increasing and positive
struct AlexanderPolynomial {
    std::vector<int> exponents;
};

void check_alexander(const AlexanderPolynomial& d);
// symmetric coefficient list, top degree first: "1" is the unknot, "1,-1,1" is T2,3.
// throws unless the coefficients have the staircase shape
AlexanderPolynomial alexander_from_coefficients(const std::vector<int>& coeffs);
int n_invariant(const AlexanderPolynomial& d);

// generators x0 .. x{2m}, x0 at Alexander grading n_m and Maslov 0
KnotComplex staircase_from_alexander(const AlexanderPolynomial& d);
// reads the exponents back from a staircase's Alexander gradings
AlexanderPolynomial alexander_of_staircase(const KnotComplex& c);

// dA = j0 - i0; names a,b,c,e followed by suffix
KnotComplex box(int i0, int j0, int maslov_a, const std::string& suffix = "");

struct BoxSpec {
    int i0 = 0;
    int j0 = 0;
    int count = 1;
};

struct ThinModelSpec {
    int stair_tau = 0;
    std::vector<BoxSpec> boxes;
};

KnotComplex thin_model(const ThinModelSpec& spec);

// tau when every generator satisfies M = A - tau, nullopt otherwise
std::optional<int> thin_tau(const KnotComplex& c);

// generators x with the V-part of d applied to the U-part of d x nonzero
std::vector<int> initial_corners(const KnotComplex& c);

// throws std::invalid_argument on non-thin input
bool diagonally_supported(const KnotComplex& c);

struct KnotEntry {
    std::string name;
    int genus = 0;
    std::optional<std::vector<int>> alexander;  // staircase exponents when applicable
    std::optional<int> n_invariant;
    std::vector<std::string> symmetries;        // kinds of action the library can build
    std::string provenance;
    std::string notes;
    nlohmann::json construction;
    ComplexPtr complex;
};

class KnotLibrary {
public:
    // built-in data, or the file named by EQCFK_LIBRARY when set
    static const KnotLibrary& instance();
    static KnotLibrary from_json(const nlohmann::json& j);
    static KnotLibrary builtin();

    const KnotEntry& get(const std::string& name) const;  // std::out_of_range on unknown names
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    std::vector<std::string> names() const { return order_; }

private:
    std::map<std::string, KnotEntry> entries_;
    std::vector<std::string> order_;
};

// construction spec -> complex; understands staircase, thin and sum_reverse
KnotComplex build_from_construction(const nlohmann::json& c, const KnotLibrary* lib = nullptr);

}  // namespace eqcfk
