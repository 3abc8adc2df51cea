#include "eqcfk/involutions.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

namespace eqcfk {

const char* to_string(ActionKind k)
{
    switch (k) {
    case ActionKind::periodic: return "periodic";
    case ActionKind::strong: return "strong";
    case ActionKind::conjugation: return "conjugation";
    case ActionKind::composite: return "composite";
    }
    return "?";
}

std::optional<ActionKind> action_kind_from_string(std::string_view s)
{
    if (s == "periodic") return ActionKind::periodic;
    if (s == "strong") return ActionKind::strong;
    if (s == "conjugation" || s == "iota") return ActionKind::conjugation;
    if (s == "composite" || s == "iotatau") return ActionKind::composite;
    return std::nullopt;
}

Certificate certify(const ChainMap& f, ActionKind kind, std::vector<std::string> assumptions)
{
    Certificate cert;
    cert.filtration = f.cls;
    cert.assumptions = std::move(assumptions);
    if (!same_shape(f.source, f.target)) {
        cert.failures.push_back("action is not an endomorphism");
        return cert;
    }
    for (const auto& v : check_map(f).violations)
        cert.failures.push_back(v.constraint + " at " + v.where + ": " + v.detail);

    switch (kind) {
    case ActionKind::periodic:
        if (f.cls != MapClass::filtered) cert.failures.push_back("periodic action must be filtered");
        break;
    case ActionKind::strong:
    case ActionKind::conjugation:
        if (f.cls != MapClass::skew) cert.failures.push_back(std::string(to_string(kind)) + " action must be skew-filtered");
        break;
    case ActionKind::composite:
        if (f.cls == MapClass::unconstrained) cert.failures.push_back("composite action has no filtration class");
        break;
    }
    cert.grading_preserving = f.maslov_shift == 0 && f.alexander_shift == 0;
    if (!cert.grading_preserving) cert.failures.push_back("action is not grading preserving");

    if (kind == ActionKind::composite) {
        cert.square_target = "none";
        cert.square_status = HomotopyResult::Status::found;
        return cert;
    }
    if (!cert.ok()) {
        cert.square_target = kind == ActionKind::strong ? "id" : "sarkar";
        return cert;
    }
    ChainMap sq = compose(f, f);
    ChainMap target = kind == ActionKind::strong ? identity_map(f.source) : sarkar_map(f.source);
    cert.square_target = kind == ActionKind::strong ? "id" : "sarkar";
    cert.square_exact = equal(sq, target);
    if (cert.square_exact) {
        cert.square_status = HomotopyResult::Status::found;
    } else {
        cert.square_status = are_homotopic(sq, target).status;
        if (cert.square_status == HomotopyResult::Status::disproved)
            cert.failures.push_back("square is not homotopic to " + cert.square_target);
        else if (cert.square_status == HomotopyResult::Status::not_found_within_bound)
            cert.failures.push_back("square homotopic to " + cert.square_target + ": not found within bound");
    }
    return cert;
}

ActionPackage make_package(ChainMap f, ActionKind kind, std::vector<std::string> assumptions)
{
    Certificate cert = certify(f, kind, std::move(assumptions));
    if (!cert.ok()) {
        std::string msg = std::string(to_string(kind)) + " contract failed:";
        for (const auto& s : cert.failures) msg += "\n  " + s;
        throw ContractError(msg);
    }
    ComplexPtr c = f.source;
    return ActionPackage{c, std::move(f), kind, std::move(cert)};
}

PhiPsi phi_psi(const ComplexPtr& c)
{
    PhiPsi r{zero_map(c, c, MapClass::filtered, 1, 1), zero_map(c, c, MapClass::filtered, -1, -1)};
    for (std::size_t x = 0; x < c->size(); ++x)
        for (const auto& t : c->d(static_cast<int>(x))) {
            if (t.u % 2) r.phi.images[x].push_back({t.gen, t.u - 1, t.v});
            if (t.v % 2) r.psi.images[x].push_back({t.gen, t.u, t.v - 1});
        }
    for (auto& p : r.phi.images) normalize(p);
    for (auto& p : r.psi.images) normalize(p);
    return r;
}

ChainMap sarkar_map(const ComplexPtr& c)
{
    auto pp = phi_psi(c);
    return add(identity_map(c), compose(pp.phi, pp.psi));
}

std::optional<ChainMap> reflection(const ComplexPtr& c)
{
    ChainMap f = zero_map(c, c, MapClass::skew, 0, 0);
    for (std::size_t x = 0; x < c->size(); ++x) {
        const auto& g = c->gen(static_cast<int>(x));
        int found = -1;
        for (std::size_t y = 0; y < c->size(); ++y) {
            const auto& h = c->gen(static_cast<int>(y));
            if (h.alexander == -g.alexander && h.maslov == g.grz()) {
                if (found >= 0) return std::nullopt;
                found = static_cast<int>(y);
            }
        }
        if (found < 0) return std::nullopt;
        f.images[x] = {{found, 0, 0}};
    }
    if (!check_map(f).ok()) return std::nullopt;
    return f;
}

bool is_staircase(const KnotComplex& c)
{
    if (c.size() % 2 == 0) return false;
    std::set<int> as;
    for (const auto& g : c.generators())
        if (!as.insert(g.alexander).second) return false;
    return reflection(share(c)).has_value();
}

ActionPackage strong_action_staircase(const ComplexPtr& c)
{
    if (!is_staircase(*c)) throw std::invalid_argument("strong_action_staircase: not a staircase");
    return make_package(*reflection(c), ActionKind::strong);
}

ActionPackage periodic_action_lspace(const ComplexPtr& c)
{
    if (!is_staircase(*c)) throw std::invalid_argument("periodic_action_lspace: not a staircase");
    return make_package(identity_map(c), ActionKind::periodic);
}

// ----- classifier -----

namespace {

bool invertible_constant(const ChainMap& f) { return gf2::rank(constant_part(f)) == f.source->size(); }

gf2::Row combination(const std::vector<gf2::Row>& basis, std::size_t dim, std::uint64_t mask)
{
    gf2::Row r(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (mask >> i & 1) r ^= basis[i];
    return r;
}

// splits [0, total) into contiguous chunks and runs fn on each concurrently
template <class Fn>
auto chunked(std::uint64_t total, Fn fn)
{
    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::uint64_t step = (total + workers - 1) / workers;
    std::vector<std::future<decltype(fn(std::uint64_t{}, std::uint64_t{}))>> jobs;
    for (std::uint64_t lo = 0; lo < total; lo += step)
        jobs.push_back(std::async(std::launch::async, fn, lo, std::min(total, lo + step)));
    std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace

Classifier::Classifier(ComplexPtr c, MapClass cls, int bound, int degree_bound)
    : c_(c),
      cls_(cls),
      space_(c, c, cls, 0, 0, degree_bound),
      filtered_(c, c, MapClass::filtered, 0, 0, degree_bound),
      homotopic_(space_.nullhomotopic()),
      filtered_homotopic_(filtered_.nullhomotopic()),
      sarkar_(filtered_.to_row(sarkar_map(c)))
{
    auto basis = space_.chain_maps();
    auto gbasis = filtered_.chain_maps();
    dim_ = static_cast<int>(basis.size());
    if (dim_ > bound || static_cast<int>(gbasis.size()) > bound || !sarkar_) {
        status_ = Status::bound_exceeded;
        return;
    }

    auto found = chunked(std::uint64_t{1} << dim_, [&](std::uint64_t lo, std::uint64_t hi) {
        std::set<Key> keys;
        for (std::uint64_t m = lo; m < hi; ++m) {
            gf2::Row r = combination(basis, space_.dim(), m);
            if (admissible(r)) keys.insert(key(homotopic_.reduce(r)));
        }
        return keys;
    });
    std::set<Key> remaining;
    for (auto& s : found) remaining.insert(s.begin(), s.end());
    candidates_ = remaining.size();

    auto groups = chunked(std::uint64_t{1} << gbasis.size(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::pair<ChainMap, ChainMap>> g;
        for (std::uint64_t m = lo; m < hi; ++m) {
            ChainMap phi = filtered_.to_map(combination(gbasis, filtered_.dim(), m));
            if (!invertible_constant(phi)) continue;
            if (auto inv = invert(phi, degree_bound)) g.emplace_back(std::move(phi), std::move(*inv));
        }
        return g;
    });
    for (auto& g : groups)
        for (auto& p : g) group_.push_back(std::move(p));

    while (!remaining.empty()) {
        Key k = *remaining.begin();
        gf2::Row r(space_.dim());
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i]) r.set(i);
        ChainMap f = space_.to_map(r);
        auto orbits = chunked(group_.size(), [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<Key> orbit;
            for (std::uint64_t i = lo; i < hi; ++i) {
                ChainMap g = compose(group_[i].first, compose(f, group_[i].second));
                if (auto gr = space_.to_row(g)) orbit.push_back(key(homotopic_.reduce(*gr)));
            }
            return orbit;
        });
        remaining.erase(k);
        for (auto& o : orbits)
            for (auto& x : o) remaining.erase(x);
        classes_.push_back(std::move(f));
        class_keys_.push_back(std::move(k));
    }
}

Classifier::Key Classifier::key(const gf2::Row& r) const
{
    Key k(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) k[i] = r[i];
    return k;
}

bool Classifier::admissible(const gf2::Row& r) const
{
    ChainMap f = space_.to_map(r);
    if (!invertible_constant(f)) return false;
    auto sq = filtered_.to_row(compose(f, f));
    if (!sq) return false;
    *sq ^= *sarkar_;
    return filtered_homotopic_.contains(*sq);
}

bool Classifier::is_candidate(const ChainMap& f) const
{
    auto r = space_.to_row(f);
    return r && sarkar_ && is_chain_map(f) && admissible(*r);
}

std::optional<std::size_t> Classifier::class_of(const ChainMap& f) const
{
    if (!is_candidate(f)) return std::nullopt;
    for (const auto& [phi, inv] : group_) {
        auto g = space_.to_row(compose(phi, compose(f, inv)));
        if (!g) continue;
        Key k = key(homotopic_.reduce(*g));
        auto it = std::find(class_keys_.begin(), class_keys_.end(), k);
        if (it != class_keys_.end()) return static_cast<std::size_t>(it - class_keys_.begin());
    }
    return std::nullopt;
}

ClassifyResult classify_periodic_type(const ComplexPtr& c, int bound)
{
    Classifier cl(c, MapClass::filtered, bound);
    ClassifyResult r;
    r.status = cl.status();
    for (const auto& f : cl.classes()) r.classes.push_back(make_package(f, ActionKind::periodic));
    return r;
}

ActionPackage iota_thin(const ComplexPtr& c, int bound)
{
    if (!thin_tau(*c)) throw std::invalid_argument("iota_thin: complex is not thin");
    if (is_staircase(*c)) return make_package(*reflection(c), ActionKind::conjugation);
    Classifier cl(c, MapClass::skew, bound);
    if (cl.status() == Classifier::Status::bound_exceeded)
        throw ContractError("iota_thin: enumeration bound exceeded");
    if (cl.classes().empty()) throw ContractError("iota_thin: no skew-filtered action with square homotopic to sarkar");
    std::vector<std::string> notes;
    if (cl.classes().size() > 1)
        notes.push_back("first of " + std::to_string(cl.classes().size()) + " classes");
    return make_package(cl.classes().front(), ActionKind::conjugation, notes);
}

std::vector<ChainMap> skew_involutions(const ComplexPtr& c, int bound)
{
    int spread = 0;
    for (const auto& x : c->generators())
        for (const auto& y : c->generators()) spread = std::max(spread, x.alexander - y.alexander);
    MapSpace space(c, c, MapClass::skew, 0, 0, 2 * spread + 2);
    auto basis = space.chain_maps();
    if (static_cast<int>(basis.size()) > bound) throw std::runtime_error("skew_involutions: enumeration bound exceeded");
    ChainMap id = identity_map(c);
    auto found = chunked(std::uint64_t{1} << basis.size(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<ChainMap> out;
        for (std::uint64_t m = lo; m < hi; ++m) {
            ChainMap f = space.to_map(combination(basis, space.dim(), m));
            if (equal(compose(f, f), id)) out.push_back(std::move(f));
        }
        return out;
    });
    std::vector<ChainMap> out;
    for (auto& v : found)
        for (auto& f : v) out.push_back(std::move(f));
    return out;
}

// ----- connected sums with the reverse -----

ReverseSum reverse_sum(const ComplexPtr& base)
{
    ReverseSum s;
    s.base = base;
    s.rev = share(reverse(*base));
    s.sum = share(tensor(*base, *s.rev));
    return s;
}

ChainMap exch_action(const ReverseSum& s)
{
    const int n = static_cast<int>(s.base->size());
    ChainMap f = zero_map(s.sum, s.sum, MapClass::skew, 0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.images[i * n + j] = {{j * n + i, 0, 0}};
    return f;
}

ActionPackage strong_sum_action(const ReverseSum& s)
{
    auto pb = phi_psi(s.base);
    auto pr = phi_psi(s.rev);
    ChainMap corr = add(identity_map(s.sum), tensor_maps(pb.psi, pr.phi, s.sum, s.sum));
    return make_package(compose(corr, exch_action(s)), ActionKind::strong,
                        {"half-twist maps act as the identity on the model"});
}

ActionPackage iota_sum(const ReverseSum& s, const ChainMap& iota_base, const ChainMap& iota_rev)
{
    auto pb = phi_psi(s.base);
    auto pr = phi_psi(s.rev);
    ChainMap corr = add(identity_map(s.sum), tensor_maps(pb.phi, pr.psi, s.sum, s.sum));
    return make_package(compose(corr, tensor_maps(iota_base, iota_rev, s.sum, s.sum)), ActionKind::conjugation);
}

ActionPackage compose_iota_tau(const ActionPackage& iota, const ActionPackage& tau)
{
    if (!same_shape(iota.complex, tau.complex)) throw std::invalid_argument("compose_iota_tau: different complexes");
    return make_package(compose(iota.action, tau.action), ActionKind::composite);
}

ActionPackage conjugation_action(const ComplexPtr& c, int bound)
{
    if (is_staircase(*c)) return make_package(*reflection(c), ActionKind::conjugation);
    return iota_thin(c, bound);
}

ActionPackage library_action(const KnotEntry& e, ActionKind kind, const KnotLibrary& lib, int bound)
{
    auto listed = [&](const char* k) { return std::find(e.symmetries.begin(), e.symmetries.end(), k) != e.symmetries.end(); };
    bool ok = kind == ActionKind::composite ? listed("strong") && listed("conjugation") : listed(to_string(kind));
    if (!ok) throw std::invalid_argument(std::string("no ") + to_string(kind) + " action listed for " + e.name);

    const std::string type = e.construction.at("type").get<std::string>();
    if (type == "sum_reverse") {
        ReverseSum s = reverse_sum(lib.get(e.construction.at("of").get<std::string>()).complex);
        auto strong = [&] { return strong_sum_action(s); };
        auto iota = [&] {
            return iota_sum(s, conjugation_action(s.base, bound).action, conjugation_action(s.rev, bound).action);
        };
        switch (kind) {
        case ActionKind::strong: return strong();
        case ActionKind::conjugation: return iota();
        case ActionKind::composite: return compose_iota_tau(iota(), strong());
        default: break;
        }
        throw std::invalid_argument("unsupported action for " + e.name);
    }
    const ComplexPtr& c = e.complex;
    switch (kind) {
    case ActionKind::periodic: {
        if (is_staircase(*c)) return periodic_action_lspace(c);
        auto r = classify_periodic_type(c, bound);
        if (r.status == Classifier::Status::bound_exceeded) throw ContractError("classifier bound exceeded for " + e.name);
        if (r.classes.empty()) throw ContractError("no periodic action on " + e.name);
        ActionPackage p = r.classes.front();
        if (r.classes.size() > 1)
            p.certificate.assumptions.push_back("first of " + std::to_string(r.classes.size()) + " classes");
        return p;
    }
    case ActionKind::strong: return strong_action_staircase(c);
    case ActionKind::conjugation: return conjugation_action(c, bound);
    case ActionKind::composite:
        return compose_iota_tau(conjugation_action(c, bound), strong_action_staircase(c));
    }
    throw std::invalid_argument("unsupported action");
}

}  // namespace eqcfk
