#include "eqcfk/mapspace.hpp"

#include <stdexcept>

namespace eqcfk {

MapSpace::MapSpace(ComplexPtr s, ComplexPtr t, MapClass cls, int ms, int as, int bound)
    : s_(std::move(s)), t_(std::move(t)), cls_(cls), ms_(ms), as_(as), bound_(bound)
{
    for (std::size_t x = 0; x < s_->size(); ++x)
        for (std::size_t y = 0; y < t_->size(); ++y) {
            auto e = term_exponents(cls_, ms_, as_, s_->gen(x), t_->gen(y));
            if (!e) continue;
            if (e->first > bound_ || e->second > bound_) {
                ++excluded_;
                continue;
            }
            lookup_.emplace(std::make_pair(static_cast<int>(x), Mono{static_cast<int>(y), e->first, e->second}),
                            entries_.size());
            entries_.push_back({static_cast<int>(x), static_cast<int>(y), e->first, e->second});
        }
}

ChainMap MapSpace::to_map(const gf2::Row& r) const
{
    ChainMap f = zero_map(s_, t_, cls_, ms_, as_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (r[k]) f.images[entries_[k].x].push_back({entries_[k].y, entries_[k].a, entries_[k].b});
    for (auto& p : f.images) normalize(p);
    return f;
}

std::optional<gf2::Row> MapSpace::to_row(const ChainMap& f) const
{
    gf2::Row r(entries_.size());
    for (std::size_t x = 0; x < f.images.size(); ++x)
        for (const auto& m : f.images[x]) {
            auto it = lookup_.find({static_cast<int>(x), m});
            if (it == lookup_.end()) return std::nullopt;
            r.flip(it->second);
        }
    return r;
}

std::vector<gf2::Row> MapSpace::chain_maps() const
{
    const bool skew = cls_ == MapClass::skew;
    std::vector<std::vector<Mono>> into(s_->size());
    for (std::size_t z = 0; z < s_->size(); ++z)
        for (const auto& t : s_->d(z)) into[t.gen].push_back({static_cast<int>(z), t.u, t.v});

    gf2::System sys(entries_.size());
    std::map<std::pair<int, Mono>, std::size_t> rows;
    auto row = [&](int src, const Mono& m) {
        auto [it, fresh] = rows.emplace(std::make_pair(src, m), 0);
        if (fresh) it->second = sys.add_row();
        return it->second;
    };
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& q = entries_[k];
        for (const auto& t : t_->d(q.y)) sys.flip(row(q.x, {t.gen, t.u + q.a, t.v + q.b}), k);
        for (const auto& z : into[q.x]) {
            Mono m = skew ? Mono{q.y, q.a + z.v, q.b + z.u} : Mono{q.y, q.a + z.u, q.b + z.v};
            sys.flip(row(z.gen, m), k);
        }
    }
    return sys.nullspace();
}

gf2::Span MapSpace::nullhomotopic() const
{
    gf2::Span span(entries_.size());
    MapSpace h(s_, t_, cls_, ms_ + 1, as_, bound_);
    for (std::size_t k = 0; k < h.dim(); ++k) {
        gf2::Row e(h.dim());
        e.set(k);
        ChainMap hk = h.to_map(e);
        ChainMap dh = compose(differential_map(t_), hk);
        ChainMap hd = compose(hk, differential_map(s_));
        ChainMap sum = zero_map(s_, t_, cls_, ms_, as_);
        for (std::size_t x = 0; x < sum.images.size(); ++x) sum.images[x] = dh.images[x] + hd.images[x];
        if (auto r = to_row(sum)) span.add(*r);
    }
    return span;
}

gf2::Mat constant_part(const ChainMap& f)
{
    gf2::Mat m(f.target->size(), f.source->size());
    for (std::size_t x = 0; x < f.images.size(); ++x)
        for (const auto& t : f.images[x])
            if (t.u == 0 && t.v == 0) m(t.gen, x) ^= 1;
    return m;
}

std::optional<ChainMap> invert(const ChainMap& f, int bound)
{
    // g has the class of f; its shifts undo those of f under composition
    int ms, as;
    if (f.skew()) {
        ms = -f.maslov_shift + 2 * f.alexander_shift;
        as = f.alexander_shift;
    } else {
        ms = -f.maslov_shift;
        as = -f.alexander_shift;
    }
    MapSpace space(f.target, f.source, f.cls, ms, as, bound);
    // unknowns: entries of g; equations: coefficients of g(f(x)) - x
    gf2::System sys(space.dim());
    std::map<std::pair<int, Mono>, std::size_t> rows;
    auto row = [&](int src, const Mono& m) {
        auto [it, fresh] = rows.emplace(std::make_pair(src, m), 0);
        if (fresh) it->second = sys.add_row();
        return it->second;
    };
    for (std::size_t k = 0; k < space.dim(); ++k) {
        gf2::Row e(space.dim());
        e.set(k);
        ChainMap g = space.to_map(e);
        ChainMap gf = compose(g, f);
        for (std::size_t x = 0; x < gf.images.size(); ++x)
            for (const auto& m : gf.images[x]) sys.flip(row(static_cast<int>(x), m), k);
    }
    for (std::size_t x = 0; x < f.source->size(); ++x) sys.flip_rhs(row(static_cast<int>(x), {static_cast<int>(x), 0, 0}));
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    ChainMap g = space.to_map(*sol);
    return g;
}

}  // namespace eqcfk
