#pragma once

// Free graded complexes over GF(2)[U] with U of degree -2.
//
// Maps are stored as 0/1 matrices; the U-power of entry (i, j) is implied by
// the gradings: a degree-k map sends g_j to U^p g_i with gr(g_i) - 2p = gr(g_j) + k.

#include "eqcfk/gf2.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eqcfk {

struct FComplex {
    std::vector<std::string> names;
    std::vector<int> gr;
    gf2::Mat d;  // column j is the boundary of generator j

    std::size_t size() const { return gr.size(); }
};

// U-power of a degree-k entry from grading gs to grading gt, or nullopt if not admissible
std::optional<int> entry_power(int gs, int gt, int degree);

// entries admissible for the gradings and degree
bool homogeneous(const gf2::Mat& m, const std::vector<int>& src, const std::vector<int>& tgt, int degree);

// throws std::invalid_argument on shape, grading or square-zero failures
void check_fcomplex(const FComplex& c);

struct TorsionBlock {
    int top = 0;
    int length = 1;
    auto operator<=>(const TorsionBlock&) const = default;
};

// Summands are numbered towers first, then torsion blocks, in the stored order.
struct QEntry {
    int from = 0;
    int to = 0;
    int u_power = 0;
    auto operator<=>(const QEntry&) const = default;
};

struct GradedModule {
    std::vector<int> free_towers;  // tower top gradings, descending
    std::vector<TorsionBlock> torsion_blocks;
    std::optional<std::vector<QEntry>> q_action;

    bool operator==(const GradedModule&) const = default;
    std::string str() const;
};

struct Homology {
    GradedModule module;
    std::vector<std::vector<std::uint8_t>> reps;  // cycle representing each summand, old coordinates
    std::vector<int> rep_gen;                     // reduced-basis index of each summand generator
    gf2::Mat p_inv;                               // old coordinates -> reduced basis coordinates
    std::vector<int> red_gr;                      // grading of each reduced basis element
    std::vector<int> pair_length;                 // -1 for towers and non-cycles, else U-length
};

Homology homology_over_U(const FComplex& c);

// action of a degree-`degree` chain map on homology; fills module.q_action
std::vector<QEntry> induced_on_homology(const Homology& h, const gf2::Mat& map, const std::vector<int>& gr, int degree);

// mapping cone of Q(1 + action): generators x then Q.x, Q of degree -1
FComplex cone(const FComplex& c, const gf2::Mat& action);
// Q as a degree -1 endomorphism of the cone
gf2::Mat cone_q(std::size_t n);

}  // namespace eqcfk
