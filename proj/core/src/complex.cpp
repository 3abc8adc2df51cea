#include "eqcfk/complex.hpp"

#include "eqcfk/gf2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqcfk {

void normalize(Poly& p)
{
    std::sort(p.begin(), p.end());
    Poly out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if ((j - i) % 2) out.push_back(p[i]);
        i = j;
    }
    p = std::move(out);
}

Poly shifted(const Poly& p, int du, int dv)
{
    Poly out = p;
    for (auto& m : out) {
        m.u += du;
        m.v += dv;
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b)
{
    Poly out = a;
    out.insert(out.end(), b.begin(), b.end());
    normalize(out);
    return out;
}

KnotComplex::KnotComplex(std::vector<Generator> gens, std::vector<Poly> diff) : gens_(std::move(gens)), d_(std::move(diff))
{
    if (d_.size() != gens_.size()) throw std::invalid_argument("KnotComplex: differential size mismatch");
    for (auto& p : d_) normalize(p);
    for (std::size_t i = 0; i < gens_.size(); ++i) index_.emplace(gens_[i].name, static_cast<int>(i));
}

int KnotComplex::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

Poly KnotComplex::d_of(const Poly& p) const
{
    Poly out;
    for (const auto& m : p) {
        for (const auto& t : d_[m.gen]) out.push_back({t.gen, t.u + m.u, t.v + m.v});
    }
    normalize(out);
    return out;
}

std::string ValidationReport::str() const
{
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) os << v.constraint << " at " << v.where << ": " << v.detail << "\n";
    return os.str();
}

namespace {

std::string term_str(const KnotComplex& c, const Mono& m)
{
    std::ostringstream os;
    os << "U^" << m.u << "V^" << m.v << "*";
    if (m.gen >= 0 && m.gen < static_cast<int>(c.size()))
        os << c.gen(m.gen).name;
    else
        os << "#" << m.gen;
    return os.str();
}

}  // namespace

ValidationReport validate_complex(const KnotComplex& c)
{
    ValidationReport r;
    std::set<std::string> seen;
    for (const auto& g : c.generators())
        if (!seen.insert(g.name).second) r.violations.push_back({"unique-names", g.name, "duplicate generator name"});

    bool targets_ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& x = c.gen(i);
        for (const auto& t : c.d(i)) {
            if (t.gen < 0 || t.gen >= static_cast<int>(c.size())) {
                r.violations.push_back({"target", x.name, "term refers to unknown generator"});
                targets_ok = false;
                continue;
            }
            const auto& y = c.gen(t.gen);
            if (t.u < 0 || t.v < 0)
                r.violations.push_back({"nonnegative-powers", x.name, term_str(c, t)});
            if (y.maslov != x.maslov - 1 + 2 * t.u)
                r.violations.push_back({"maslov", x.name,
                                        term_str(c, t) + " needs M(target) = " + std::to_string(x.maslov - 1 + 2 * t.u) +
                                            ", found " + std::to_string(y.maslov)});
            if (y.alexander != x.alexander - t.v + t.u)
                r.violations.push_back({"alexander", x.name,
                                        term_str(c, t) + " needs A(target) = " +
                                            std::to_string(x.alexander - t.v + t.u) + ", found " +
                                            std::to_string(y.alexander)});
        }
    }
    if (targets_ok) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            Poly dd = c.d_of(c.d(i));
            if (!dd.empty()) r.violations.push_back({"d-squared", c.gen(i).name, "d^2 = " + term_str(c, dd.front()) + " + ..."});
        }
    }
    return r;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

KnotComplex tensor(const KnotComplex& a, const KnotComplex& b)
{
    const int nb = static_cast<int>(b.size());
    std::vector<Generator> gens;
    std::vector<Poly> d;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto& x = a.gen(i);
            const auto& y = b.gen(j);
            gens.push_back({pair_name(x.name, y.name), x.maslov + y.maslov, x.alexander + y.alexander});
            Poly p;
            for (const auto& t : a.d(i)) p.push_back({t.gen * nb + static_cast<int>(j), t.u, t.v});
            for (const auto& t : b.d(j)) p.push_back({static_cast<int>(i) * nb + t.gen, t.u, t.v});
            d.push_back(std::move(p));
        }
    return KnotComplex(std::move(gens), std::move(d));
}

KnotComplex mirror(const KnotComplex& c)
{
    std::vector<Generator> gens;
    for (const auto& g : c.generators()) gens.push_back({g.name, -g.maslov, -g.alexander});
    std::vector<Poly> d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& t : c.d(i)) d[t.gen].push_back({static_cast<int>(i), t.u, t.v});
    return KnotComplex(std::move(gens), std::move(d));
}

KnotComplex reverse(const KnotComplex& c)
{
    std::vector<Generator> gens;
    for (const auto& g : c.generators()) gens.push_back({g.name, g.grz(), -g.alexander});
    std::vector<Poly> d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& t : c.d(i)) d[i].push_back({t.gen, t.v, t.u});
    return KnotComplex(std::move(gens), std::move(d));
}

KnotComplex direct_sum(const KnotComplex& a, const KnotComplex& b)
{
    std::vector<Generator> gens = a.generators();
    std::vector<Poly> d = a.differential();
    const int off = static_cast<int>(a.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        gens.push_back(b.gen(j));
        d.push_back(shifted(b.d(j), 0, 0));
        for (auto& m : d.back()) m.gen += off;
    }
    return KnotComplex(std::move(gens), std::move(d));
}

KnotComplex renamed(const KnotComplex& c, const std::vector<std::string>& names)
{
    if (names.size() != c.size()) throw std::invalid_argument("renamed: size mismatch");
    std::vector<Generator> gens = c.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = names[i];
    return KnotComplex(std::move(gens), c.differential());
}

KnotComplex permuted(const KnotComplex& c, const std::vector<int>& perm)
{
    if (perm.size() != c.size()) throw std::invalid_argument("permuted: size mismatch");
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    std::vector<Generator> gens;
    std::vector<Poly> d;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        gens.push_back(c.gen(perm[i]));
        Poly p = c.d(perm[i]);
        for (auto& m : p) m.gen = inv[m.gen];
        d.push_back(std::move(p));
    }
    return KnotComplex(std::move(gens), std::move(d));
}

// ----- chain maps -----

const char* to_string(MapClass c)
{
    switch (c) {
    case MapClass::filtered: return "filtered";
    case MapClass::skew: return "skew-filtered";
    case MapClass::unconstrained: return "unconstrained";
    }
    return "?";
}

std::optional<MapClass> map_class_from_string(std::string_view s)
{
    if (s == "filtered") return MapClass::filtered;
    if (s == "skew-filtered" || s == "skew") return MapClass::skew;
    if (s == "unconstrained") return MapClass::unconstrained;
    return std::nullopt;
}

bool same_shape(const ComplexPtr& a, const ComplexPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->generators() == b->generators();
}

ChainMap identity_map(const ComplexPtr& c)
{
    ChainMap f{c, c, {}, MapClass::filtered, 0, 0};
    for (std::size_t i = 0; i < c->size(); ++i) f.images.push_back({{static_cast<int>(i), 0, 0}});
    return f;
}

ChainMap zero_map(const ComplexPtr& s, const ComplexPtr& t, MapClass cls, int ms, int as)
{
    return ChainMap{s, t, std::vector<Poly>(s->size()), cls, ms, as};
}

ChainMap differential_map(const ComplexPtr& c)
{
    return ChainMap{c, c, c->differential(), MapClass::filtered, -1, 0};
}

Poly apply(const ChainMap& f, const Poly& p)
{
    Poly out;
    for (const auto& m : p) {
        for (const auto& t : f.images[m.gen]) {
            if (f.skew())
                out.push_back({t.gen, t.u + m.v, t.v + m.u});
            else
                out.push_back({t.gen, t.u + m.u, t.v + m.v});
        }
    }
    normalize(out);
    return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!same_shape(g.source, f.target)) throw std::invalid_argument("compose: shape mismatch");
    ChainMap h;
    h.source = f.source;
    h.target = g.target;
    if (f.cls == MapClass::unconstrained || g.cls == MapClass::unconstrained)
        h.cls = MapClass::unconstrained;
    else
        h.cls = (f.skew() == g.skew()) ? MapClass::filtered : MapClass::skew;
    if (g.skew()) {
        h.maslov_shift = f.maslov_shift - 2 * f.alexander_shift + g.maslov_shift;
        h.alexander_shift = g.alexander_shift - f.alexander_shift;
    } else {
        h.maslov_shift = f.maslov_shift + g.maslov_shift;
        h.alexander_shift = f.alexander_shift + g.alexander_shift;
    }
    for (const auto& p : f.images) h.images.push_back(apply(g, p));
    return h;
}

namespace {

bool is_zero(const ChainMap& f)
{
    for (const auto& p : f.images)
        if (!p.empty()) return false;
    return true;
}

}  // namespace

ChainMap add(const ChainMap& f, const ChainMap& g)
{
    if (!same_shape(f.source, g.source) || !same_shape(f.target, g.target))
        throw std::invalid_argument("add: shape mismatch");
    bool compatible = f.cls == g.cls && f.maslov_shift == g.maslov_shift && f.alexander_shift == g.alexander_shift;
    if (!compatible && !is_zero(f) && !is_zero(g))
        throw std::invalid_argument("add: maps of different class or degree");
    ChainMap h = is_zero(f) && !compatible ? g : f;
    for (std::size_t i = 0; i < h.images.size(); ++i) h.images[i] = f.images[i] + g.images[i];
    return h;
}

bool equal(const ChainMap& f, const ChainMap& g)
{
    return same_shape(f.source, g.source) && same_shape(f.target, g.target) && f.images == g.images;
}

bool is_chain_map(const ChainMap& f)
{
    for (std::size_t i = 0; i < f.source->size(); ++i) {
        Poly lhs = apply(f, f.source->d(i));
        Poly rhs = f.target->d_of(f.images[i]);
        if (lhs != rhs) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> term_exponents(MapClass cls, int ms, int as, const Generator& x,
                                                  const Generator& y)
{
    int twice_a = cls == MapClass::skew ? y.maslov - x.grz() - ms : y.maslov - x.maslov - ms;
    if (twice_a % 2) return std::nullopt;
    int a = twice_a / 2;
    int b = (cls == MapClass::skew ? -x.alexander : x.alexander) + as - y.alexander + a;
    if (a < 0 || b < 0) return std::nullopt;
    return std::make_pair(a, b);
}

ValidationReport check_map(const ChainMap& f)
{
    ValidationReport r;
    if (f.images.size() != f.source->size()) {
        r.violations.push_back({"shape", "map", "image count differs from source size"});
        return r;
    }
    for (std::size_t i = 0; i < f.source->size(); ++i)
        for (const auto& t : f.images[i])
            if (t.gen < 0 || t.gen >= static_cast<int>(f.target->size())) {
                r.violations.push_back({"target", f.source->gen(i).name, "term refers to unknown generator"});
                return r;
            }
    for (std::size_t i = 0; i < f.source->size(); ++i) {
        Poly lhs = apply(f, f.source->d(i));
        Poly rhs = f.target->d_of(f.images[i]);
        if (lhs != rhs) r.violations.push_back({"chain-map", f.source->gen(i).name, "f d != d f"});
    }
    if (f.cls == MapClass::unconstrained) return r;
    for (std::size_t i = 0; i < f.source->size(); ++i) {
        const auto& x = f.source->gen(i);
        for (const auto& t : f.images[i]) {
            const auto& y = f.target->gen(t.gen);
            auto e = term_exponents(f.cls, f.maslov_shift, f.alexander_shift, x, y);
            if (!e || e->first != t.u || e->second != t.v) {
                std::ostringstream os;
                os << "U^" << t.u << "V^" << t.v << "*" << y.name << " violates the " << to_string(f.cls)
                   << " grading/filtration rule";
                r.violations.push_back({to_string(f.cls), x.name, os.str()});
            }
        }
    }
    return r;
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const ComplexPtr& src, const ComplexPtr& tgt)
{
    if (f.skew() != g.skew()) throw std::invalid_argument("tensor_maps: mixed filtered and skew factors");
    if (src->size() != f.source->size() * g.source->size() || tgt->size() != f.target->size() * g.target->size())
        throw std::invalid_argument("tensor_maps: shape mismatch");
    const int nt = static_cast<int>(g.target->size());
    ChainMap h{src, tgt, {}, f.cls, f.maslov_shift + g.maslov_shift, f.alexander_shift + g.alexander_shift};
    if (g.cls == MapClass::unconstrained) h.cls = MapClass::unconstrained;
    for (std::size_t i = 0; i < f.source->size(); ++i)
        for (std::size_t j = 0; j < g.source->size(); ++j) {
            Poly p;
            for (const auto& s : f.images[i])
                for (const auto& t : g.images[j]) p.push_back({s.gen * nt + t.gen, s.u + t.u, s.v + t.v});
            normalize(p);
            h.images.push_back(std::move(p));
        }
    return h;
}

ChainMap map_from_table(const ComplexPtr& s, const ComplexPtr& t, MapClass cls,
                        const std::vector<std::pair<std::string, std::vector<std::tuple<int, int, std::string>>>>& rows,
                        int ms, int as)
{
    ChainMap f = zero_map(s, t, cls, ms, as);
    for (const auto& [src, terms] : rows) {
        int i = s->index_of(src);
        if (i < 0) throw std::invalid_argument("map_from_table: unknown source generator " + src);
        for (const auto& [u, v, tgt] : terms) {
            int j = t->index_of(tgt);
            if (j < 0) throw std::invalid_argument("map_from_table: unknown target generator " + tgt);
            f.images[i].push_back({j, u, v});
        }
        normalize(f.images[i]);
    }
    return f;
}

int default_degree_bound(const ChainMap& f, const ChainMap& g)
{
    int amin = 0, amax = 0, pmax = 0;
    bool first = true;
    for (const auto* c : {f.source.get(), f.target.get()})
        for (const auto& x : c->generators()) {
            if (first) {
                amin = amax = x.alexander;
                first = false;
            }
            amin = std::min(amin, x.alexander);
            amax = std::max(amax, x.alexander);
        }
    for (const auto* m : {&f, &g})
        for (const auto& p : m->images)
            for (const auto& t : p) pmax = std::max({pmax, t.u, t.v});
    for (const auto* c : {f.source.get(), f.target.get()})
        for (const auto& p : c->differential())
            for (const auto& t : p) pmax = std::max({pmax, t.u, t.v});
    return std::max(1, 2 * ((amax - amin) + pmax));
}

HomotopyResult are_homotopic(const ChainMap& f, const ChainMap& g)
{
    return are_homotopic(f, g, default_degree_bound(f, g));
}

HomotopyResult are_homotopic(const ChainMap& f, const ChainMap& g, int degree_bound)
{
    ChainMap diff = add(f, g);
    const ComplexPtr& S = diff.source;
    const ComplexPtr& T = diff.target;
    const bool skew = diff.skew();
    const MapClass hcls = skew ? MapClass::skew : MapClass::filtered;
    const int hms = diff.maslov_shift + 1;
    const int has = diff.alexander_shift;

    struct Unknown {
        int x, y, a, b;
    };
    std::vector<Unknown> unknowns;
    int excluded = 0;
    for (std::size_t x = 0; x < S->size(); ++x)
        for (std::size_t y = 0; y < T->size(); ++y) {
            auto e = term_exponents(hcls, hms, has, S->gen(x), T->gen(y));
            if (!e) continue;
            if (e->first > degree_bound || e->second > degree_bound) {
                ++excluded;
                continue;
            }
            unknowns.push_back({static_cast<int>(x), static_cast<int>(y), e->first, e->second});
        }

    // sources z with d z containing U^c V^e x, indexed by x
    std::vector<std::vector<Mono>> into(S->size());
    for (std::size_t z = 0; z < S->size(); ++z)
        for (const auto& t : S->d(z)) into[t.gen].push_back({static_cast<int>(z), t.u, t.v});

    gf2::System sys(unknowns.size());
    std::map<std::pair<int, Mono>, std::size_t> rows;
    auto row = [&](int src, const Mono& m) {
        auto key = std::make_pair(src, m);
        auto it = rows.find(key);
        if (it != rows.end()) return it->second;
        std::size_t r = sys.add_row();
        rows.emplace(key, r);
        return r;
    };

    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const auto& q = unknowns[k];
        for (const auto& t : T->d(q.y)) sys.flip(row(q.x, {t.gen, t.u + q.a, t.v + q.b}), k);
        for (const auto& z : into[q.x]) {
            Mono m = skew ? Mono{q.y, q.a + z.v, q.b + z.u} : Mono{q.y, q.a + z.u, q.b + z.v};
            sys.flip(row(z.gen, m), k);
        }
    }
    for (std::size_t x = 0; x < S->size(); ++x)
        for (const auto& m : diff.images[x]) sys.flip_rhs(row(static_cast<int>(x), m));

    HomotopyResult res;
    auto sol = sys.solve();
    if (!sol) {
        res.status = excluded > 0 ? HomotopyResult::Status::not_found_within_bound : HomotopyResult::Status::disproved;
        return res;
    }
    ChainMap h = zero_map(S, T, hcls, hms, has);
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        if ((*sol)[k]) h.images[unknowns[k].x].push_back({unknowns[k].y, unknowns[k].a, unknowns[k].b});
    for (auto& p : h.images) normalize(p);
    res.status = HomotopyResult::Status::found;
    res.homotopy = std::move(h);
    return res;
}

}  // namespace eqcfk
