#include "eqcfk/models.hpp"

#include "knots_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqcfk {

void check_alexander(const AlexanderPolynomial& d)
{
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        if (d.exponents[i] <= 0) throw std::invalid_argument("Alexander exponents must be positive");
        if (i && d.exponents[i] <= d.exponents[i - 1])
            throw std::invalid_argument("Alexander exponents must be strictly increasing");
    }
}

AlexanderPolynomial alexander_from_coefficients(const std::vector<int>& coeffs)
{
    const int n = static_cast<int>(coeffs.size());
    if (n % 2 == 0) throw std::invalid_argument("Alexander coefficients: need an odd number of entries");
    for (int i = 0; i < n; ++i)
        if (coeffs[i] != coeffs[n - 1 - i]) throw std::invalid_argument("Alexander coefficients: not symmetric");
    const int top = n / 2;
    AlexanderPolynomial d;
    int expect = 1;
    for (int i = 0; i <= top; ++i) {
        int c = coeffs[i];
        if (c == 0) continue;
        if (c != expect) throw std::invalid_argument("Alexander coefficients: not of staircase type");
        expect = -expect;
        if (i < top) d.exponents.insert(d.exponents.begin(), top - i);
    }
    if (coeffs[top] == 0) throw std::invalid_argument("Alexander coefficients: not of staircase type");
    if (!d.exponents.empty() && coeffs[0] == 0) throw std::invalid_argument("Alexander coefficients: leading zero");
    return d;
}

int n_invariant(const AlexanderPolynomial& d)
{
    check_alexander(d);
    int n = 0, sign = 1;
    for (auto it = d.exponents.rbegin(); it != d.exponents.rend(); ++it, sign = -sign) n += sign * *it;
    return n;
}

KnotComplex staircase_from_alexander(const AlexanderPolynomial& d)
{
    check_alexander(d);
    const int m = static_cast<int>(d.exponents.size());
    std::vector<int> e;
    for (int i = m - 1; i >= 0; --i) e.push_back(d.exponents[i]);
    e.push_back(0);
    for (int i = 0; i < m; ++i) e.push_back(-d.exponents[i]);

    std::vector<Generator> gens(2 * m + 1);
    std::vector<Poly> diff(2 * m + 1);
    for (int k = 0; k <= 2 * m; ++k) {
        gens[k].name = "x" + std::to_string(k);
        gens[k].alexander = e[k];
    }
    for (int l = 0; l < m; ++l) {
        int alpha = e[2 * l] - e[2 * l + 1];
        int beta = e[2 * l + 1] - e[2 * l + 2];
        gens[2 * l + 1].maslov = gens[2 * l].maslov + 1 - 2 * alpha;
        gens[2 * l + 2].maslov = gens[2 * l].maslov - 2 * alpha;
        diff[2 * l + 1] = {{2 * l, alpha, 0}, {2 * l + 2, 0, beta}};
    }
    return KnotComplex(std::move(gens), std::move(diff));
}

AlexanderPolynomial alexander_of_staircase(const KnotComplex& c)
{
    std::set<int> pos;
    for (const auto& g : c.generators())
        if (g.alexander > 0) pos.insert(g.alexander);
    return {std::vector<int>(pos.begin(), pos.end())};
}

KnotComplex box(int i0, int j0, int maslov_a, const std::string& suffix)
{
    int A = j0 - i0;
    std::vector<Generator> gens = {{"a" + suffix, maslov_a, A},
                                   {"b" + suffix, maslov_a + 1, A + 1},
                                   {"c" + suffix, maslov_a - 1, A - 1},
                                   {"e" + suffix, maslov_a, A}};
    std::vector<Poly> diff = {{{1, 1, 0}, {2, 0, 1}}, {{3, 0, 1}}, {{3, 1, 0}}, {}};
    return KnotComplex(std::move(gens), std::move(diff));
}

KnotComplex thin_model(const ThinModelSpec& spec)
{
    const int t = std::abs(spec.stair_tau);
    AlexanderPolynomial d;
    for (int i = 1; i <= t; ++i) d.exponents.push_back(i);
    KnotComplex stair = staircase_from_alexander(d);
    if (spec.stair_tau < 0) stair = mirror(stair);
    std::vector<std::string> names;
    for (const auto& g : stair.generators()) {
        if (g.alexander == 0) names.push_back("x0");
        else if (g.alexander > 0) names.push_back("x1_" + std::to_string(g.alexander));
        else names.push_back("x2_" + std::to_string(-g.alexander));
    }
    KnotComplex out = renamed(stair, names);
    int k = 0;
    for (const auto& b : spec.boxes) {
        if (b.count < 0) throw std::invalid_argument("thin_model: negative box count");
        for (int i = 0; i < b.count; ++i) {
            int maslov_a = (b.j0 - b.i0) - spec.stair_tau;
            out = direct_sum(out, box(b.i0, b.j0, maslov_a, std::to_string(++k)));
        }
    }
    if (thin_tau(out) != spec.stair_tau) throw std::invalid_argument("thin_model: result is not thin");
    return out;
}

std::optional<int> thin_tau(const KnotComplex& c)
{
    std::optional<int> tau;
    for (const auto& g : c.generators()) {
        int t = g.alexander - g.maslov;
        if (tau && *tau != t) return std::nullopt;
        tau = t;
    }
    return tau ? tau : 0;
}

std::vector<int> initial_corners(const KnotComplex& c)
{
    std::vector<int> out;
    for (std::size_t x = 0; x < c.size(); ++x) {
        Poly vert;
        for (const auto& t : c.d(static_cast<int>(x))) {
            if (t.u == 0) continue;
            for (const auto& s : c.d(t.gen))
                if (s.v > 0) vert.push_back({s.gen, s.u + t.u, s.v + t.v});
        }
        normalize(vert);
        if (!vert.empty()) out.push_back(static_cast<int>(x));
    }
    return out;
}

bool diagonally_supported(const KnotComplex& c)
{
    if (!thin_tau(c)) throw std::invalid_argument("diagonally_supported: complex is not thin");
    for (int x : initial_corners(c))
        if (c.gen(x).alexander != 0) return false;
    return true;
}

KnotComplex build_from_construction(const nlohmann::json& c, const KnotLibrary* lib)
{
    const std::string type = c.at("type").get<std::string>();
    if (type == "staircase") {
        KnotComplex k = staircase_from_alexander({c.at("exponents").get<std::vector<int>>()});
        if (c.value("mirror", false)) k = mirror(k);
        return k;
    }
    if (type == "thin") {
        ThinModelSpec spec;
        spec.stair_tau = c.at("stair_tau").get<int>();
        for (const auto& b : c.value("boxes", nlohmann::json::array())) spec.boxes.push_back({b.at(0), b.at(1), b.at(2)});
        KnotComplex k = thin_model(spec);
        if (c.value("mirror", false)) k = mirror(k);
        return k;
    }
    if (type == "sum_reverse") {
        const std::string of = c.at("of").get<std::string>();
        if (!lib || !lib->contains(of)) throw std::invalid_argument("sum_reverse: unknown summand " + of);
        const auto& base = *lib->get(of).complex;
        return tensor(base, reverse(base));
    }
    throw std::invalid_argument("unknown construction type: " + type);
}

KnotLibrary KnotLibrary::from_json(const nlohmann::json& j)
{
    KnotLibrary lib;
    for (const auto& k : j.at("knots")) {
        KnotEntry e;
        e.name = k.at("name").get<std::string>();
        e.genus = k.value("genus", 0);
        if (k.contains("alexander")) e.alexander = k["alexander"].get<std::vector<int>>();
        if (e.alexander) e.n_invariant = n_invariant({*e.alexander});
        e.symmetries = k.value("symmetries", std::vector<std::string>{});
        e.provenance = k.value("provenance", std::string{});
        e.notes = k.value("notes", std::string{});
        e.construction = k.at("construction");
        e.complex = share(build_from_construction(e.construction, &lib));
        if (lib.entries_.count(e.name)) throw std::invalid_argument("duplicate library entry " + e.name);
        lib.order_.push_back(e.name);
        lib.entries_.emplace(e.name, std::move(e));
    }
    return lib;
}

KnotLibrary KnotLibrary::builtin() { return from_json(nlohmann::json::parse(builtin_knots_json)); }

const KnotLibrary& KnotLibrary::instance()
{
    static const KnotLibrary lib = [] {
        if (const char* path = std::getenv("EQCFK_LIBRARY"); path && *path) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error(std::string("cannot open library file ") + path);
            return from_json(nlohmann::json::parse(in));
        }
        return builtin();
    }();
    return lib;
}

const KnotEntry& KnotLibrary::get(const std::string& name) const
{
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::out_of_range("unknown knot: " + name);
    return it->second;
}

}  // namespace eqcfk
