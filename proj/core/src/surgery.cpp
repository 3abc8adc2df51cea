#include "eqcfk/surgery.hpp"

#include <future>
#include <map>
#include <stdexcept>

namespace eqcfk {

AComplex a_minus(const ComplexPtr& c, int s)
{
    AComplex a;
    a.base = c;
    a.s = s;
    const std::size_t n = c->size();
    for (const auto& g : c->generators()) {
        a.m.push_back(std::max(1, g.alexander - s + 1));
        a.presentation.names.push_back(g.name);
        a.presentation.gr.push_back(g.maslov - 2 * a.m.back());
    }
    a.presentation.d = gf2::Mat(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (const auto& t : c->d(static_cast<int>(x))) {
            if (a.m[x] + t.u - a.m[t.gen] < 0) throw std::logic_error("a_minus: differential leaves the region");
            a.presentation.d(t.gen, x) ^= 1;
        }
    check_fcomplex(a.presentation);
    return a;
}

gf2::Mat induced_matrix(const AComplex& a, const ChainMap& f)
{
    if (!same_shape(f.source, a.base) || !same_shape(f.target, a.base))
        throw std::invalid_argument("induced_matrix: action is not an endomorphism of the base complex");
    if (f.maslov_shift != 0 || f.alexander_shift != 0) throw std::invalid_argument("induced_matrix: action shifts gradings");
    if (f.cls == MapClass::unconstrained) throw std::invalid_argument("induced_matrix: action has no filtration class");
    if (f.skew() && a.s != 0) throw std::invalid_argument("induced_matrix: skew action needs s = 0");
    const std::size_t n = a.base->size();
    gf2::Mat m(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        int lead = f.skew() ? a.m[x] - a.base->gen(static_cast<int>(x)).alexander : a.m[x];
        for (const auto& t : f.images[x]) {
            if (lead + t.u - a.m[t.gen] < 0) throw std::logic_error("induced_matrix: action leaves the region");
            m(t.gen, x) ^= 1;
        }
    }
    const auto& d = a.presentation.d;
    if (!(d * m == m * d)) throw std::logic_error("induced_matrix: induced action does not commute with d");
    return m;
}

AComplex induce_action_on_A(const ActionPackage& pkg, int s)
{
    AComplex a = a_minus(pkg.complex, s);
    a.induced_action = induced_matrix(a, pkg.action);
    return a;
}

int d_invariant(const FComplex& c)
{
    Homology h = homology_over_U(c);
    if (h.module.free_towers.size() != 1)
        throw std::invalid_argument("d_invariant: homology has " + std::to_string(h.module.free_towers.size()) +
                                    " towers, expected one");
    return h.module.free_towers.front() + 2;
}

int d_invariant(const AComplex& a) { return d_invariant(a.presentation); }

const char* to_string(Flavor f)
{
    switch (f) {
    case Flavor::tau: return "tau";
    case Flavor::iotatau: return "iotatau";
    case Flavor::iota: return "iota";
    }
    return "?";
}

std::optional<Flavor> flavor_from_string(std::string_view s)
{
    if (s == "tau") return Flavor::tau;
    if (s == "iotatau") return Flavor::iotatau;
    if (s == "iota") return Flavor::iota;
    return std::nullopt;
}

ConeResult cone_invariants(const AComplex& a, Flavor flavor)
{
    if (!a.induced_action) throw std::invalid_argument("cone_invariants: no induced action");
    ConeResult r;
    r.terms.flavor = flavor;
    r.terms.d = d_invariant(a);
    FComplex k = cone(a.presentation, *a.induced_action);
    Homology h = homology_over_U(k);
    h.module.q_action = induced_on_homology(h, cone_q(a.presentation.size()), k.gr, -1);
    r.homology = h.module;
    const auto& towers = h.module.free_towers;
    if (towers.size() != 2) throw std::logic_error("cone_invariants: cone homology has " + std::to_string(towers.size()) + " towers");
    int even = 0, odd = 0;
    int found_even = 0, found_odd = 0;
    for (int t : towers) {
        if (t % 2 == 0) {
            even = t;
            ++found_even;
        } else {
            odd = t;
            ++found_odd;
        }
    }
    if (found_even != 1 || found_odd != 1) throw std::logic_error("cone_invariants: towers of unexpected parity");
    r.terms.d_lower = even + 2;
    r.terms.d_upper = odd + 3;
    return r;
}

std::string render(const boost::rational<long>& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string SurgeryValue::str() const { return render(value) + (below_bound ? " (p below genus bound)" : ""); }

SurgeryValue surgery_value(int dA, int p, int genus)
{
    if (p <= 0) throw std::invalid_argument("surgery_value: p must be positive");
    SurgeryValue v;
    v.value = boost::rational<long>(p - 1, 4) + dA;
    v.below_bound = p < genus;
    return v;
}

// ----- local equivalence -----

void check_iota_complex(const IotaComplex& c)
{
    check_fcomplex(c.c);
    if (!homogeneous(c.iota, c.c.gr, c.c.gr, 0)) throw std::invalid_argument("iota complex: iota is not grading preserving");
    if (!(c.c.d * c.iota == c.iota * c.c.d)) throw std::invalid_argument("iota complex: iota is not a chain map");
    Homology h = homology_over_U(c.c);
    if (h.module.free_towers.size() != 1) throw std::invalid_argument("iota complex: localized homology is not one tower");
}

IotaComplex iota_complex(const AComplex& a)
{
    if (!a.induced_action) throw std::invalid_argument("iota_complex: no induced action");
    IotaComplex c{a.presentation, *a.induced_action};
    for (auto& g : c.c.gr) g += 2;
    return c;
}

IotaComplex trivial_iota_complex()
{
    IotaComplex c;
    c.c.names = {"t"};
    c.c.gr = {0};
    c.c.d = gf2::Mat(1, 1);
    c.iota = gf2::Mat::identity(1);
    return c;
}

IotaComplex orientation_reverse(const IotaComplex& c)
{
    IotaComplex r;
    r.c.names = c.c.names;
    for (int g : c.c.gr) r.c.gr.push_back(-g);
    r.c.d = c.c.d.transpose();
    r.iota = c.iota.transpose();
    return r;
}

ChainMap dual_map(const ChainMap& f, const ComplexPtr& dual_source, const ComplexPtr& dual_target)
{
    // f: S -> T gives T* -> S*
    if (dual_source->size() != f.target->size() || dual_target->size() != f.source->size())
        throw std::invalid_argument("dual_map: shape mismatch");
    ChainMap g = zero_map(dual_source, dual_target, f.cls, -f.maslov_shift, -f.alexander_shift);
    if (f.skew()) {
        g.maslov_shift = -f.maslov_shift + 2 * f.alexander_shift;
        g.alexander_shift = f.alexander_shift;
    }
    for (std::size_t x = 0; x < f.images.size(); ++x)
        for (const auto& t : f.images[x]) {
            if (f.skew()) g.images[t.gen].push_back({static_cast<int>(x), t.v, t.u});
            else g.images[t.gen].push_back({static_cast<int>(x), t.u, t.v});
        }
    for (auto& p : g.images) normalize(p);
    return g;
}

ActionPackage orientation_reverse(const ActionPackage& pkg)
{
    ComplexPtr d = share(mirror(*pkg.complex));
    return make_package(dual_map(pkg.action, d, d), pkg.kind, pkg.certificate.assumptions);
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::first_less: return "first_less";
    case Verdict::first_greater: return "first_greater";
    case Verdict::incomparable: return "incomparable";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// tower representative of the U = 1 homology, as a 0/1 vector
std::vector<std::uint8_t> tower_rep(const FComplex& c)
{
    Homology h = homology_over_U(c);
    if (h.module.free_towers.size() != 1) throw std::invalid_argument("local map: input is not a single-tower complex");
    return h.reps.front();
}

}  // namespace

Search local_map_exists(const IotaComplex& from, const IotaComplex& to, int bound)
{
    check_iota_complex(from);
    check_iota_complex(to);
    const std::size_t n1 = from.c.size(), n2 = to.c.size();
    const auto& g1 = from.c.gr;
    const auto& g2 = to.c.gr;

    // unknowns: f(i, j) of degree 0 and H(i, j) of degree +1, i in target, j in source
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> fvar, hvar;
    std::size_t nv = 0, excluded = 0;
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            if (auto p = entry_power(g1[j], g2[i], 0)) {
                if (*p <= bound) fvar[{i, j}] = nv++;
                else ++excluded;
            }
            if (auto p = entry_power(g1[j], g2[i], 1)) {
                if (*p <= bound) hvar[{i, j}] = nv++;
                else ++excluded;
            }
        }

    gf2::System sys(nv);
    auto var = [](const auto& m, std::size_t i, std::size_t j) -> std::optional<std::size_t> {
        auto it = m.find({i, j});
        if (it == m.end()) return std::nullopt;
        return it->second;
    };
    const auto& d1 = from.c.d;
    const auto& d2 = to.c.d;
    const auto& i1 = from.iota;
    const auto& i2 = to.iota;

    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            // (d2 f + f d1)(i, j) = 0
            std::size_t r = sys.add_row();
            for (std::size_t k = 0; k < n2; ++k)
                if (d2(i, k))
                    if (auto v = var(fvar, k, j)) sys.flip(r, *v);
            for (std::size_t k = 0; k < n1; ++k)
                if (d1(k, j))
                    if (auto v = var(fvar, i, k)) sys.flip(r, *v);
            // (f i1 + i2 f + d2 H + H d1)(i, j) = 0
            r = sys.add_row();
            for (std::size_t k = 0; k < n1; ++k)
                if (i1(k, j))
                    if (auto v = var(fvar, i, k)) sys.flip(r, *v);
            for (std::size_t k = 0; k < n2; ++k)
                if (i2(i, k))
                    if (auto v = var(fvar, k, j)) sys.flip(r, *v);
            for (std::size_t k = 0; k < n2; ++k)
                if (d2(i, k))
                    if (auto v = var(hvar, k, j)) sys.flip(r, *v);
            for (std::size_t k = 0; k < n1; ++k)
                if (d1(k, j))
                    if (auto v = var(hvar, i, k)) sys.flip(r, *v);
        }

    // covector L on the target with L d2 = 0 and L(z2) = 1, at U = 1
    auto z1 = tower_rep(from.c);
    auto z2 = tower_rep(to.c);
    gf2::System lsys(n2);
    for (std::size_t j = 0; j < n2; ++j) {
        std::size_t r = lsys.add_row();
        for (std::size_t i = 0; i < n2; ++i)
            if (d2(i, j)) lsys.flip(r, i);
    }
    std::size_t r = lsys.add_row();
    for (std::size_t i = 0; i < n2; ++i)
        if (z2[i]) lsys.flip(r, i);
    lsys.flip_rhs(r);
    auto L = lsys.solve();
    if (!L) throw std::logic_error("local map: tower representative is a boundary");

    // L(f z1) = 1
    r = sys.add_row();
    for (std::size_t i = 0; i < n2; ++i)
        if ((*L)[i])
            for (std::size_t j = 0; j < n1; ++j)
                if (z1[j])
                    if (auto v = var(fvar, i, j)) sys.flip(r, *v);
    sys.flip_rhs(r);

    if (sys.solve()) return Search::found;
    return excluded ? Search::inconclusive : Search::none;
}

Verdict compare_local(const IotaComplex& a, const IotaComplex& b, int bound)
{
    auto ab = std::async(std::launch::async, [&] { return local_map_exists(a, b, bound); });
    Search ba = local_map_exists(b, a, bound);
    Search fwd = ab.get();
    if (fwd == Search::inconclusive || ba == Search::inconclusive) {
        if (fwd == Search::found && ba == Search::found) return Verdict::equivalent;
        return Verdict::inconclusive;
    }
    if (fwd == Search::found && ba == Search::found) return Verdict::equivalent;
    if (fwd == Search::found) return Verdict::first_less;
    if (ba == Search::found) return Verdict::first_greater;
    return Verdict::incomparable;
}

// ----- filtered cone export -----

KnotComplex export_filtered_cone(const ActionPackage& pkg, Flavor flavor)
{
    const ChainMap& f = pkg.action;
    if (flavor == Flavor::tau && pkg.kind != ActionKind::periodic)
        throw std::invalid_argument("export: flavor tau needs a periodic (filtered) action");
    if (flavor == Flavor::iotatau && pkg.kind != ActionKind::composite)
        throw std::invalid_argument("export: flavor iotatau needs a composite action");
    if (flavor == Flavor::iota) throw std::invalid_argument("export: flavor iota gives no filtered cone");
    if (f.cls != MapClass::filtered) throw std::invalid_argument("export: action is not filtered, the cone would not be filtered");
    const KnotComplex& c = *pkg.complex;
    const int n = static_cast<int>(c.size());
    std::vector<Generator> gens = c.generators();
    for (const auto& g : c.generators()) gens.push_back({"Q·" + g.name, g.maslov - 1, g.alexander});
    std::vector<Poly> d(2 * n);
    for (int x = 0; x < n; ++x) {
        d[x] = c.d(x);
        d[x].push_back({n + x, 0, 0});
        for (const auto& t : f.images[x]) d[x].push_back({n + t.gen, t.u, t.v});
        d[n + x] = c.d(x);
        for (auto& m : d[n + x]) m.gen += n;
    }
    KnotComplex k(std::move(gens), std::move(d));
    auto rep = validate_complex(k);
    if (!rep.ok()) throw std::logic_error("export: cone failed validation\n" + rep.str());
    return k;
}

}  // namespace eqcfk
