#pragma once

#include "eqcfk/complex.hpp"
#include "eqcfk/mapspace.hpp"
#include "eqcfk/models.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcfk {

enum class ActionKind { periodic, strong, conjugation, composite };

const char* to_string(ActionKind k);
std::optional<ActionKind> action_kind_from_string(std::string_view s);

struct Certificate {
    MapClass filtration = MapClass::filtered;
    bool grading_preserving = false;
    std::string square_target;  // "sarkar", "id" or "none"
    HomotopyResult::Status square_status = HomotopyResult::Status::disproved;
    bool square_exact = false;
    std::vector<std::string> assumptions;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

struct ActionPackage {
    ComplexPtr complex;
    ChainMap action;
    ActionKind kind = ActionKind::periodic;
    Certificate certificate;
};

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// re-runs every contract check for the kind
Certificate certify(const ChainMap& f, ActionKind kind, std::vector<std::string> assumptions = {});
// throws ContractError listing the failed checks
ActionPackage make_package(ChainMap f, ActionKind kind, std::vector<std::string> assumptions = {});

ChainMap sarkar_map(const ComplexPtr& c);

struct PhiPsi {
    ChainMap phi;  // d/dU of the differential, shifts (+1, +1)
    ChainMap psi;  // d/dV of the differential, shifts (-1, -1)
};
PhiPsi phi_psi(const ComplexPtr& c);

// skew map x -> y with A(y) = -A(x), M(y) = grz(x), when y is unique for every x and the result is a chain map
std::optional<ChainMap> reflection(const ComplexPtr& c);
bool is_staircase(const KnotComplex& c);

ActionPackage strong_action_staircase(const ComplexPtr& c);
ActionPackage periodic_action_lspace(const ComplexPtr& c);

// Classes of grading-preserving actions of one filtration class with square homotopic to the
// Sarkar map, up to homotopy and conjugation by filtered chain automorphisms.
class Classifier {
public:
    enum class Status { complete, bound_exceeded };

    // bound: log2 cap on the number of maps enumerated
    Classifier(ComplexPtr c, MapClass cls, int bound = 20, int degree_bound = 4);

    Status status() const { return status_; }
    const std::vector<ChainMap>& classes() const { return classes_; }
    std::size_t candidates() const { return candidates_; }
    std::size_t group_order() const { return group_.size(); }
    int dimension() const { return dim_; }

    bool is_candidate(const ChainMap& f) const;
    // index into classes(), nullopt if f is not a candidate
    std::optional<std::size_t> class_of(const ChainMap& f) const;

private:
    using Key = std::vector<std::uint8_t>;
    Key key(const gf2::Row& r) const;
    bool admissible(const gf2::Row& r) const;

    ComplexPtr c_;
    MapClass cls_;
    MapSpace space_;
    MapSpace filtered_;
    gf2::Span homotopic_;
    gf2::Span filtered_homotopic_;
    std::optional<gf2::Row> sarkar_;
    std::vector<std::pair<ChainMap, ChainMap>> group_;  // (phi, phi^-1)
    std::vector<ChainMap> classes_;
    std::vector<Key> class_keys_;
    std::size_t candidates_ = 0;
    int dim_ = 0;
    Status status_ = Status::complete;
};

struct ClassifyResult {
    Classifier::Status status = Classifier::Status::complete;
    std::vector<ActionPackage> classes;
};

ClassifyResult classify_periodic_type(const ComplexPtr& c, int bound = 20);
ActionPackage iota_thin(const ComplexPtr& c, int bound = 20);

// every grading-preserving skew chain map with f o f = id exactly
std::vector<ChainMap> skew_involutions(const ComplexPtr& c, int bound = 24);

struct ReverseSum {
    ComplexPtr base;
    ComplexPtr rev;
    ComplexPtr sum;  // tensor(base, rev)
};

ReverseSum reverse_sum(const ComplexPtr& base);
// (x, y') -> (y, x'), skew
ChainMap exch_action(const ReverseSum& s);
// (id + Psi (x) Phi) o exch
ActionPackage strong_sum_action(const ReverseSum& s);
// (id + Phi (x) Psi) o (iota (x) iota_r)
ActionPackage iota_sum(const ReverseSum& s, const ChainMap& iota_base, const ChainMap& iota_rev);

ActionPackage compose_iota_tau(const ActionPackage& iota, const ActionPackage& tau);

// skew conjugation action for a staircase or thin model
ActionPackage conjugation_action(const ComplexPtr& c, int bound = 20);

// dispatch on a library entry; throws std::invalid_argument if the kind is not listed
ActionPackage library_action(const KnotEntry& e, ActionKind kind, const KnotLibrary& lib = KnotLibrary::instance(),
                             int bound = 20);

}  // namespace eqcfk
