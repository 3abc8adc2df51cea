#pragma once

#include "eqcfk/involutions.hpp"
#include "eqcfk/umodule.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace eqcfk {

// A^-_s: one F[U] generator U^m(x) V^(m(x) - A(x)) x per base generator, m(x) = max(1, A(x) - s + 1)
struct AComplex {
    ComplexPtr base;
    int s = 0;
    std::vector<int> m;
    FComplex presentation;
    std::optional<gf2::Mat> induced_action;
};

AComplex a_minus(const ComplexPtr& c, int s);
// matrix of a grading-preserving action on A^-_s; skew maps only for s = 0
gf2::Mat induced_matrix(const AComplex& a, const ChainMap& f);
AComplex induce_action_on_A(const ActionPackage& pkg, int s = 0);

// calibrated grading of the single tower top; throws unless exactly one tower
int d_invariant(const AComplex& a);
int d_invariant(const FComplex& c);

enum class Flavor { tau, iotatau, iota };
const char* to_string(Flavor f);
std::optional<Flavor> flavor_from_string(std::string_view s);

struct CorrectionTerms {
    int d = 0;
    int d_lower = 0;
    int d_upper = 0;
    Flavor flavor = Flavor::tau;
};

struct ConeResult {
    CorrectionTerms terms;
    GradedModule homology;  // cone homology with its Q-action
};

ConeResult cone_invariants(const AComplex& a, Flavor flavor);

struct SurgeryValue {
    boost::rational<long> value;
    bool below_bound = false;  // p under the large-surgery bound
    std::string str() const;
};

std::string render(const boost::rational<long>& r);
SurgeryValue surgery_value(int dA, int p, int genus = 0);

// ----- local equivalence -----

struct IotaComplex {
    FComplex c;  // calibrated gradings
    gf2::Mat iota;
};

IotaComplex iota_complex(const AComplex& a);
IotaComplex trivial_iota_complex();
IotaComplex orientation_reverse(const IotaComplex& c);
void check_iota_complex(const IotaComplex& c);

// dual knot complex with the dual action
ActionPackage orientation_reverse(const ActionPackage& pkg);
ChainMap dual_map(const ChainMap& f, const ComplexPtr& dual_source, const ComplexPtr& dual_target);

enum class Verdict { equivalent, first_less, first_greater, incomparable, inconclusive };
const char* to_string(Verdict v);

enum class Search { found, none, inconclusive };
// local map: grading preserving, commutes with iota up to homotopy, iso after inverting U
Search local_map_exists(const IotaComplex& from, const IotaComplex& to, int bound = 4);
Verdict compare_local(const IotaComplex& a, const IotaComplex& b, int bound = 4);

// ----- filtered cone export -----

// cone of Q(1 + f) over the knot complex; generators x and Q·x
KnotComplex export_filtered_cone(const ActionPackage& pkg, Flavor flavor);

}  // namespace eqcfk
