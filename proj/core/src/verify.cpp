#include "eqcfk/verify.hpp"

#include "eqcfk/document.hpp"
#include "eqcfk/involutions.hpp"
#include "eqcfk/surgery.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace eqcfk {

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::map<int, bool> VerifyReport::per_criterion() const
{
    std::map<int, bool> out;
    for (const auto& c : checks) {
        auto [it, fresh] = out.emplace(c.criterion, c.pass);
        if (!fresh) it->second = it->second && c.pass;
    }
    return out;
}

const std::vector<CriterionInfo>& criteria()
{
    static const std::vector<CriterionInfo> list = {
        {1, "lspace", "L-space strong/periodic correction terms and surgery values"},
        {2, "connected-sum", "connected sum with the reverse: tau, iota-tau and iota values"},
        {3, "thin-classifier", "periodic-type classification on thin models"},
        {4, "figure-eight", "figure-eight d and lower d with surgery values"},
        {5, "local-equivalence", "local-equivalence verdicts against the trivial complex"},
        {6, "calibration", "identity action gives equal lower d, d, upper d"},
        {7, "properties", "structural property suite"},
        {8, "iota-tau", "strong action agrees with iota on staircases"},
    };
    return list;
}

namespace {

using Fail = std::optional<std::string>;

template <class T>
Fail expect_eq(const std::string& what, const T& got, const T& want)
{
    if (got == want) return std::nullopt;
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    return os.str();
}

std::string terms_str(const CorrectionTerms& t)
{
    std::ostringstream os;
    os << "d=" << t.d << " lower=" << t.d_lower << " upper=" << t.d_upper;
    return os.str();
}

Fail expect_terms(const CorrectionTerms& t, int d, int lo, int hi)
{
    if (t.d == d && t.d_lower == lo && t.d_upper == hi) return std::nullopt;
    std::ostringstream os;
    os << terms_str(t) << ", expected d=" << d << " lower=" << lo << " upper=" << hi;
    return os.str();
}

std::string show(const ChainMap& f)
{
    std::ostringstream os;
    for (std::size_t x = 0; x < f.images.size(); ++x) {
        os << f.source->gen(static_cast<int>(x)).name << "->";
        for (std::size_t k = 0; k < f.images[x].size(); ++k) {
            const auto& m = f.images[x][k];
            os << (k ? "+" : "");
            if (m.u) os << "U^" << m.u;
            if (m.v) os << "V^" << m.v;
            os << f.target->gen(m.gen).name;
        }
        if (f.images[x].empty()) os << "0";
        os << " ";
    }
    return os.str();
}

using Table = std::vector<std::pair<std::string, std::vector<std::tuple<int, int, std::string>>>>;

ChainMap plain_map(const ComplexPtr& c, MapClass cls, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows)
{
    Table t;
    for (const auto& g : c->generators()) t.push_back({g.name, {{0, 0, g.name}}});
    for (const auto& [src, tgts] : rows) {
        auto it = std::find_if(t.begin(), t.end(), [&](const auto& r) { return r.first == src; });
        it->second.clear();
        for (const auto& y : tgts) it->second.push_back({0, 0, y});
    }
    return map_from_table(c, c, cls, t);
}

FComplex permute(const FComplex& c, const std::vector<std::size_t>& perm)
{
    FComplex p;
    p.d = gf2::Mat(c.size(), c.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        p.names.push_back(c.names[perm[i]]);
        p.gr.push_back(c.gr[perm[i]]);
    }
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) p.d(i, j) = c.d(perm[i], perm[j]);
    return p;
}

class Runner {
public:
    Runner(VerifyReport& r, const std::vector<std::string>& only) : report_(r), only_(only) {}

    bool enabled(const std::string& group) const
    {
        return only_.empty() || std::find(only_.begin(), only_.end(), group) != only_.end();
    }

    void at(int criterion, std::string group)
    {
        crit_ = criterion;
        group_ = std::move(group);
    }

    void run(const std::string& name, const std::function<Fail()>& fn)
    {
        CheckResult c{crit_, group_, name, false, ""};
        try {
            Fail f = fn();
            c.pass = !f;
            c.detail = f ? *f : "";
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
    std::vector<std::string> only_;
    int crit_ = 0;
    std::string group_;
};

}  // namespace

VerifyReport run_verify(const KnotLibrary& lib, const std::vector<std::string>& only, int bound)
{
    VerifyReport report;
    Runner run(report, only);

    auto action = [&](const std::string& knot, ActionKind kind) { return library_action(lib.get(knot), kind, lib, bound); };
    auto terms = [&](const std::string& knot, ActionKind kind, Flavor fl) {
        return cone_invariants(induce_action_on_A(action(knot, kind)), fl).terms;
    };
    auto listed = [](const KnotEntry& e, const char* k) {
        return std::find(e.symmetries.begin(), e.symmetries.end(), k) != e.symmetries.end();
    };
    auto kinds_of = [&](const KnotEntry& e) {
        std::vector<ActionKind> ks;
        for (auto k : {ActionKind::periodic, ActionKind::strong, ActionKind::conjugation})
            if (listed(e, to_string(k))) ks.push_back(k);
        if (listed(e, "strong") && listed(e, "conjugation")) ks.push_back(ActionKind::composite);
        return ks;
    };
    auto flavor_for = [](ActionKind k) {
        return k == ActionKind::composite ? Flavor::iotatau : k == ActionKind::conjugation ? Flavor::iota : Flavor::tau;
    };

    if (run.enabled("lspace")) {
        run.at(1, "lspace");
        run.run("n(unknot) = 0", [&]() -> Fail { return expect_eq("n", n_invariant({}), 0); });
        for (std::string k : {"T2,3", "T2,5"}) {
            run.run("n(" + k + ") = 1", [&]() -> Fail { return expect_eq("n", lib.get(k).n_invariant.value(), 1); });
            for (auto kind : {ActionKind::strong, ActionKind::periodic}) {
                run.run(k + " " + to_string(kind) + " lower = upper = -2n", [&]() -> Fail {
                    int n = lib.get(k).n_invariant.value();
                    return expect_terms(terms(k, kind, Flavor::tau), -2 * n, -2 * n, -2 * n);
                });
            }
            run.run(k + "bar strong lower = 0, upper = 2n", [&]() -> Fail {
                int n = lib.get(k + "bar").n_invariant.value();
                return expect_terms(terms(k + "bar", ActionKind::strong, Flavor::tau), 0, 0, 2 * n);
            });
            for (int p : {7, 15}) {
                run.run(k + " surgery p=" + std::to_string(p), [&]() -> Fail {
                    const auto& e = lib.get(k);
                    int n = e.n_invariant.value();
                    auto t = terms(k, ActionKind::strong, Flavor::tau);
                    auto v = surgery_value(t.d_lower, p, e.genus);
                    return expect_eq("value", render(v.value), render(boost::rational<long>(p - 1, 4) - 2 * n));
                });
            }
        }
        run.run("T2,3 strong p=7 renders -1/2", [&]() -> Fail {
            return expect_eq("value", render(surgery_value(terms("T2,3", ActionKind::strong, Flavor::tau).d_lower, 7).value),
                             std::string("-1/2"));
        });
    }

    if (run.enabled("connected-sum")) {
        run.at(2, "connected-sum");
        run.run("KsumKr strong tau = (-2, -2)", [&]() -> Fail {
            return expect_terms(terms("KsumKr", ActionKind::strong, Flavor::tau), -2, -2, -2);
        });
        run.run("KsumKr iota-tau = (-4, -2)", [&]() -> Fail {
            return expect_terms(terms("KsumKr", ActionKind::composite, Flavor::iotatau), -2, -4, -2);
        });
        run.run("KsumKr iota = (-4, -2)", [&]() -> Fail {
            return expect_terms(terms("KsumKr", ActionKind::conjugation, Flavor::iota), -2, -4, -2);
        });
        const std::string of = lib.get("KsumKr").construction.value("of", "T2,3");
        run.run("iota_sum o T ~ (iota x iota) o exch", [&]() -> Fail {
            ReverseSum s = reverse_sum(lib.get(of).complex);
            ChainMap ib = conjugation_action(s.base, bound).action;
            ChainMap ir = conjugation_action(s.rev, bound).action;
            ActionPackage comp = compose_iota_tau(iota_sum(s, ib, ir), strong_sum_action(s));
            ChainMap rhs = compose(tensor_maps(ib, ir, s.sum, s.sum), exch_action(s));
            auto h = are_homotopic(comp.action, rhs);
            if (!h.found()) return "no homotopy found";
            return std::nullopt;
        });
        run.run("exch squared ~ id", [&]() -> Fail {
            ReverseSum s = reverse_sum(lib.get(of).complex);
            ChainMap e = exch_action(s);
            if (!are_homotopic(compose(e, e), identity_map(s.sum)).found()) return "exch^2 not homotopic to id";
            return std::nullopt;
        });
        run.run("Psi x Phi nonzero on exactly one generator", [&]() -> Fail {
            ReverseSum s = reverse_sum(lib.get(of).complex);
            ChainMap pf = tensor_maps(phi_psi(s.base).psi, phi_psi(s.rev).phi, s.sum, s.sum);
            int nz = static_cast<int>(std::count_if(pf.images.begin(), pf.images.end(), [](const Poly& p) { return !p.empty(); }));
            return expect_eq("nonzero generators", nz, 1);
        });
    }

    if (run.enabled("thin-classifier")) {
        run.at(3, "thin-classifier");
        auto unique_class_contains = [&](const ComplexPtr& c, const ChainMap& expected) -> Fail {
            Classifier cl(c, MapClass::filtered, bound);
            if (cl.status() != Classifier::Status::complete) return "enumeration bound exceeded";
            if (cl.classes().size() != 1) return "classes: got " + std::to_string(cl.classes().size()) + ", expected 1";
            if (cl.class_of(expected) != std::optional<std::size_t>(0))
                return "quoted map not in the class; representative " + show(cl.classes().front());
            return std::nullopt;
        };
        run.run("4_1 unique class with quoted formulas", [&]() -> Fail {
            ComplexPtr c = lib.get("4_1").complex;
            return unique_class_contains(c, plain_map(c, MapClass::filtered, {{"a1", {"a1", "x0"}}, {"x0", {"x0", "e1"}}}));
        });
        for (std::string k : {"unknot", "T2,3", "T2,5", "T2,3bar"}) {
            run.run(k + " classifies to {id}", [&]() -> Fail {
                ComplexPtr c = lib.get(k).complex;
                return unique_class_contains(c, identity_map(c));
            });
        }
        struct Case {
            const char* name;
            int tau;
            bool stair_moves;  // false: box generators pick up staircase terms
        };
        for (Case cs : {Case{"Case I", 1, false}, Case{"Case II", -2, false}, Case{"Case III", -1, true}, Case{"Case IV", 2, true}}) {
            run.run(std::string(cs.name) + " (tau " + std::to_string(cs.tau) + ") quoted class", [&]() -> Fail {
                ComplexPtr c = share(thin_model({cs.tau, {{0, 0, 1}}}));
                std::vector<std::pair<std::string, std::vector<std::string>>> rows = {{"a1", {"a1", "x0"}}, {"x0", {"x0", "e1"}}};
                if (!cs.stair_moves) {
                    rows.push_back({"b1", {"b1", "x1_1"}});
                    rows.push_back({"c1", {"c1", "x2_1"}});
                } else {
                    rows.push_back({"x1_1", {"x1_1", "b1"}});
                    rows.push_back({"x2_1", {"x2_1", "c1"}});
                }
                return unique_class_contains(c, plain_map(c, MapClass::filtered, rows));
            });
        }
        run.run("6_1 unique class swapping the boxes", [&]() -> Fail {
            ComplexPtr c = lib.get("6_1").complex;
            return unique_class_contains(
                c, plain_map(c, MapClass::filtered,
                             {{"a1", {"a2"}}, {"a2", {"a1", "e1"}}, {"b1", {"b2"}}, {"b2", {"b1"}}, {"c1", {"c2"}},
                              {"c2", {"c1"}}, {"e1", {"e2"}}, {"e2", {"e1"}}}));
        });
        for (const auto& name : lib.names()) {
            const auto& e = lib.get(name);
            if (!thin_tau(*e.complex) || !diagonally_supported(*e.complex)) continue;
            run.run(name + " diagonally supported: at most one class", [&]() -> Fail {
                Classifier cl(e.complex, MapClass::filtered, bound);
                if (cl.status() != Classifier::Status::complete) return "enumeration bound exceeded";
                if (cl.classes().size() > 1) return std::to_string(cl.classes().size()) + " classes";
                return std::nullopt;
            });
        }
        run.run("4_1 iota class with b <-> c", [&]() -> Fail {
            ComplexPtr c = lib.get("4_1").complex;
            Classifier cl(c, MapClass::skew, bound);
            ChainMap q = plain_map(c, MapClass::skew, {{"a1", {"a1", "x0"}}, {"x0", {"x0", "e1"}}, {"b1", {"c1"}}, {"c1", {"b1"}}});
            if (cl.classes().size() != 1) return "skew classes: " + std::to_string(cl.classes().size());
            if (cl.class_of(q) != std::optional<std::size_t>(0)) return "quoted iota not in the class";
            return std::nullopt;
        });
    }

    if (run.enabled("figure-eight")) {
        run.at(4, "figure-eight");
        run.run("d(A0(4_1)) = 0", [&]() -> Fail { return expect_eq("d", d_invariant(a_minus(lib.get("4_1").complex, 0)), 0); });
        run.run("4_1 periodic lower d = -2", [&]() -> Fail {
            return expect_eq("lower", terms("4_1", ActionKind::periodic, Flavor::tau).d_lower, -2);
        });
        for (int p : {1, 7, 15}) {
            run.run("4_1 surgery p=" + std::to_string(p), [&]() -> Fail {
                auto t = terms("4_1", ActionKind::periodic, Flavor::tau);
                int g = lib.get("4_1").genus;
                if (auto f = expect_eq("lower value", render(surgery_value(t.d_lower, p, g).value),
                                       render(boost::rational<long>(p - 1, 4) - 2)))
                    return f;
                return expect_eq("d value", render(surgery_value(t.d, p, g).value), render(boost::rational<long>(p - 1, 4)));
            });
        }
    }

    if (run.enabled("local-equivalence")) {
        run.at(5, "local-equivalence");
        auto model = [&](const std::string& k, ActionKind kind, bool rev) {
            IotaComplex c = iota_complex(induce_action_on_A(action(k, kind)));
            return rev ? orientation_reverse(c) : c;
        };
        IotaComplex triv = trivial_iota_complex();
        struct Golden {
            std::string label, knot;
            ActionKind kind;
            bool rev;
            Verdict want;
        };
        for (const auto& g : {Golden{"S3_-1(T2,3) strong < trivial", "T2,3bar", ActionKind::strong, true, Verdict::first_less},
                              Golden{"S3_-1(T2,3) periodic = trivial", "T2,3bar", ActionKind::periodic, true, Verdict::equivalent},
                              Golden{"S3_+1(6_1) periodic = trivial", "6_1", ActionKind::periodic, false, Verdict::equivalent},
                              Golden{"S3_+1(4_1) periodic < trivial", "4_1", ActionKind::periodic, false, Verdict::first_less}}) {
            run.run(g.label, [&]() -> Fail {
                return expect_eq("verdict", std::string(to_string(compare_local(model(g.knot, g.kind, g.rev), triv))),
                                 std::string(to_string(g.want)));
            });
        }
        run.run("reflexive on 4_1 periodic", [&]() -> Fail {
            auto m = model("4_1", ActionKind::periodic, false);
            return expect_eq("verdict", std::string(to_string(compare_local(m, m))), std::string("equivalent"));
        });
        run.run("antisymmetric on T2,3 strong", [&]() -> Fail {
            auto m = model("T2,3bar", ActionKind::strong, true);
            return expect_eq("verdict", std::string(to_string(compare_local(triv, m))), std::string("first_greater"));
        });
        run.run("double orientation reverse is the identity", [&]() -> Fail {
            auto m = model("T2,3", ActionKind::strong, false);
            auto mm = orientation_reverse(orientation_reverse(m));
            if (mm.c.gr != m.c.gr || !(mm.c.d == m.c.d) || !(mm.iota == m.iota)) return "differs";
            return std::nullopt;
        });
    }

    if (run.enabled("calibration")) {
        run.at(6, "calibration");
        for (const auto& name : lib.names()) {
            run.run(name + " identity action", [&]() -> Fail {
                AComplex a = a_minus(lib.get(name).complex, 0);
                a.induced_action = gf2::Mat::identity(a.presentation.size());
                auto t = cone_invariants(a, Flavor::tau).terms;
                return expect_terms(t, t.d, t.d, t.d);
            });
        }
    }

    if (run.enabled("properties")) {
        run.at(7, "properties");
        std::vector<std::pair<std::string, ComplexPtr>> builders;
        for (const auto& name : lib.names()) builders.push_back({name, lib.get(name).complex});
        builders.push_back({"staircase [2,3]", share(staircase_from_alexander({{2, 3}}))});
        builders.push_back({"thin Case II", share(thin_model({-2, {{0, 0, 1}}}))});
        builders.push_back({"box", share(box(0, 0, 0))});
        for (const auto& [name, c] : builders) {
            run.run(name + " validates", [&]() -> Fail {
                auto r = validate_complex(*c);
                if (!r.ok()) return r.str();
                return std::nullopt;
            });
            run.run(name + " sarkar squared ~ id", [&]() -> Fail {
                ChainMap s = sarkar_map(c);
                if (!are_homotopic(compose(s, s), identity_map(c)).found()) return "not homotopic";
                return std::nullopt;
            });
            run.run(name + " Phi^2 ~ 0 and Psi^2 ~ 0", [&]() -> Fail {
                auto pp = phi_psi(c);
                for (const auto* m : {&pp.phi, &pp.psi}) {
                    if (!is_chain_map(*m)) return "not a chain map";
                    ChainMap sq = compose(*m, *m);
                    ChainMap z = zero_map(c, c, sq.cls, sq.maslov_shift, sq.alexander_shift);
                    if (!are_homotopic(sq, z).found()) return "square not null-homotopic";
                }
                return std::nullopt;
            });
            run.run(name + " mirror twice is the identity", [&]() -> Fail {
                if (!(mirror(mirror(*c)) == *c)) return "differs";
                return std::nullopt;
            });
        }
        for (const auto& name : lib.names()) {
            const auto& e = lib.get(name);
            if (!is_staircase(*e.complex)) continue;
            run.run(name + " sarkar = id on staircase", [&]() -> Fail {
                if (!equal(sarkar_map(e.complex), identity_map(e.complex))) return "differs";
                return std::nullopt;
            });
            if (e.complex->size() <= 9) {
                run.run(name + " unique skew involution", [&]() -> Fail {
                    auto all = skew_involutions(e.complex);
                    if (all.size() != 1) return std::to_string(all.size()) + " involutions";
                    if (!equal(all.front(), strong_action_staircase(e.complex).action)) return "differs from the reflection";
                    return std::nullopt;
                });
            }
            if (e.alexander) {
                run.run(name + " Alexander round trip", [&]() -> Fail {
                    ComplexPtr c = e.construction.value("mirror", false) ? share(mirror(*e.complex)) : e.complex;
                    if (alexander_of_staircase(*c).exponents != *e.alexander) return "exponents differ";
                    return std::nullopt;
                });
            }
        }
        run.run("staircase [2,3] unique skew involution", [&]() -> Fail {
            ComplexPtr c = share(staircase_from_alexander({{2, 3}}));
            return expect_eq("involutions", skew_involutions(c).size(), std::size_t{1});
        });
        for (const auto& name : lib.names()) {
            const auto& e = lib.get(name);
            for (auto kind : kinds_of(e)) {
                const std::string label = name + " " + to_string(kind);
                run.run(label + " certificate", [&]() -> Fail {
                    auto p = action(name, kind);
                    auto again = certify(p.action, kind, p.certificate.assumptions);
                    if (!again.ok()) return again.failures.front();
                    if (again.square_target != p.certificate.square_target || again.square_exact != p.certificate.square_exact)
                        return "certificate not reproduced";
                    return std::nullopt;
                });
                run.run(label + " lower <= d <= upper", [&]() -> Fail {
                    auto t = terms(name, kind, flavor_for(kind));
                    if (t.d_lower <= t.d && t.d <= t.d_upper) return std::nullopt;
                    return terms_str(t);
                });
            }
            run.run(name + " homology invariant under permutation", [&]() -> Fail {
                AComplex a = a_minus(e.complex, 0);
                std::vector<std::size_t> perm(a.presentation.size());
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
                std::rotate(perm.begin(), perm.begin() + perm.size() / 2, perm.end());
                auto h1 = homology_over_U(a.presentation).module;
                auto h2 = homology_over_U(permute(a.presentation, perm)).module;
                if (!(h1 == h2)) return h1.str() + " vs " + h2.str();
                return std::nullopt;
            });
            run.run(name + " serialization round trip", [&]() -> Fail {
                ComplexDocument doc = document_for(e);
                for (auto kind : kinds_of(e)) doc.actions.emplace(to_string(kind), action(name, kind));
                std::string text = render_document(doc);
                ComplexDocument back = parse_document(text);
                if (!same_document(doc, back)) return "document differs after round trip";
                if (render_document(back) != text) return "rendering not byte-stable";
                return std::nullopt;
            });
        }
        for (const auto& name : lib.names()) {
            const auto& e = lib.get(name);
            auto tau = thin_tau(*e.complex);
            if (!tau || !listed(e, "periodic")) continue;
            run.run(name + " stable under adding a box", [&]() -> Fail {
                auto before = terms(name, ActionKind::periodic, Flavor::tau);
                KnotComplex pair = direct_sum(box(0, 4, 4 - *tau, "s"), box(0, 4, 4 - *tau, "t"));
                ComplexPtr c = share(direct_sum(*e.complex, pair));
                auto r = classify_periodic_type(c, bound + 6);
                if (r.status != Classifier::Status::complete) return "enumeration bound exceeded";
                if (r.classes.empty()) return "no extended action";
                for (const auto& p : r.classes) {
                    auto after = cone_invariants(induce_action_on_A(p), Flavor::tau).terms;
                    if (auto f = expect_terms(after, before.d, before.d_lower, before.d_upper)) return *f;
                }
                return std::nullopt;
            });
        }
        run.run("cone Q squares to zero", [&]() -> Fail {
            auto a = induce_action_on_A(action("4_1", ActionKind::periodic));
            gf2::Mat q = cone_q(a.presentation.size());
            if (!(q * q).is_zero()) return "Q^2 != 0";
            FComplex k = cone(a.presentation, *a.induced_action);
            if (!(k.d * q == q * k.d)) return "Q is not a chain map";
            return std::nullopt;
        });
    }

    if (run.enabled("iota-tau")) {
        run.at(8, "iota-tau");
        for (const auto& name : lib.names()) {
            const auto& e = lib.get(name);
            if (!is_staircase(*e.complex)) continue;
            run.run(name + " strong ~ iota", [&]() -> Fail {
                auto s = strong_action_staircase(e.complex);
                auto i = conjugation_action(e.complex, bound);
                if (!are_homotopic(s.action, i.action).found()) return "no homotopy";
                // independent of the reflection: the skew classes found by enumeration
                Classifier cl(e.complex, MapClass::skew, bound);
                if (cl.status() != Classifier::Status::complete) return "enumeration bound exceeded";
                if (cl.classes().size() != 1) return std::to_string(cl.classes().size()) + " skew classes";
                if (cl.class_of(s.action) != std::optional<std::size_t>(0)) return "strong action outside the skew class";
                return std::nullopt;
            });
            run.run(name + " tau and iota correction terms agree", [&]() -> Fail {
                auto t = cone_invariants(induce_action_on_A(strong_action_staircase(e.complex)), Flavor::tau).terms;
                auto i = cone_invariants(induce_action_on_A(conjugation_action(e.complex, bound)), Flavor::iota).terms;
                return expect_terms(i, t.d, t.d_lower, t.d_upper);
            });
        }
    }
    return report;
}

}  // namespace eqcfk
