#pragma once

// Finite-dimensional GF(2) space of maps of one class and degree, with entry
// powers capped by a bound. Used for nullspace solves and orbit searches.

#include "eqcfk/complex.hpp"
#include "eqcfk/gf2.hpp"

#include <map>
#include <optional>
#include <vector>

namespace eqcfk {

class MapSpace {
public:
    struct Entry {
        int x, y, a, b;
    };

    MapSpace(ComplexPtr s, ComplexPtr t, MapClass cls, int ms, int as, int bound);

    std::size_t dim() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t excluded() const { return excluded_; }
    MapClass cls() const { return cls_; }

    ChainMap to_map(const gf2::Row& r) const;
    std::optional<gf2::Row> to_row(const ChainMap& f) const;  // nullopt if f has terms outside the space

    // basis of the chain maps inside the space
    std::vector<gf2::Row> chain_maps() const;
    // span of d H + H d for H in the matching homotopy space
    gf2::Span nullhomotopic() const;

private:
    ComplexPtr s_, t_;
    MapClass cls_;
    int ms_, as_, bound_;
    std::vector<Entry> entries_;
    std::map<std::pair<int, Mono>, std::size_t> lookup_;  // (source, image monomial) -> entry
    std::size_t excluded_ = 0;
};

// constant (power zero) part as a matrix, target x source
gf2::Mat constant_part(const ChainMap& f);

// solve g f = id for g in the same space class as f with inverse shifts; nullopt if not invertible
std::optional<ChainMap> invert(const ChainMap& f, int bound);

}  // namespace eqcfk
