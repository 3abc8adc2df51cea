#include "eqcfk/umodule.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace eqcfk {

std::optional<int> entry_power(int gs, int gt, int degree)
{
    int twice = gt - gs - degree;
    if (twice < 0 || twice % 2) return std::nullopt;
    return twice / 2;
}

bool homogeneous(const gf2::Mat& m, const std::vector<int>& src, const std::vector<int>& tgt, int degree)
{
    if (m.rows() != tgt.size() || m.cols() != src.size()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) && !entry_power(src[j], tgt[i], degree)) return false;
    return true;
}

void check_fcomplex(const FComplex& c)
{
    const std::size_t n = c.size();
    if (c.d.rows() != n || c.d.cols() != n || (!c.names.empty() && c.names.size() != n))
        throw std::invalid_argument("F[U] complex: shape mismatch");
    if (!homogeneous(c.d, c.gr, c.gr, -1)) throw std::invalid_argument("F[U] complex: differential not of degree -1");
    if (!(c.d * c.d).is_zero()) throw std::invalid_argument("F[U] complex: differential does not square to zero");
}

std::string GradedModule::str() const
{
    std::ostringstream os;
    os << "towers{";
    for (std::size_t i = 0; i < free_towers.size(); ++i) os << (i ? "," : "") << free_towers[i];
    os << "} torsion{";
    for (std::size_t i = 0; i < torsion_blocks.size(); ++i)
        os << (i ? "," : "") << torsion_blocks[i].top << "/" << torsion_blocks[i].length;
    os << "}";
    if (q_action) {
        os << " Q{";
        for (std::size_t i = 0; i < q_action->size(); ++i) {
            const auto& q = (*q_action)[i];
            os << (i ? "," : "") << q.from << "->" << q.to << "^" << q.u_power;
        }
        os << "}";
    }
    return os.str();
}

Homology homology_over_U(const FComplex& c)
{
    check_fcomplex(c);
    const std::size_t n = c.size();
    gf2::Mat d = c.d;
    gf2::Mat p = gf2::Mat::identity(n);
    gf2::Mat pinv = gf2::Mat::identity(n);
    std::vector<bool> active(n, true);
    std::vector<int> length(n, -1);

    // new generator s0 := s0 + U^k s1
    auto addmul = [&](std::size_t s0, std::size_t s1) {
        d.add_col(s0, s1);
        d.add_row(s1, s0);
        p.add_col(s0, s1);
        pinv.add_row(s1, s0);
    };

    for (;;) {
        std::optional<std::tuple<int, std::size_t, std::size_t>> best;
        for (std::size_t s = 0; s < n; ++s) {
            if (!active[s]) continue;
            for (std::size_t t = 0; t < n; ++t) {
                if (!active[t] || !d(t, s)) continue;
                int k = (c.gr[t] - c.gr[s] + 1) / 2;
                auto cand = std::make_tuple(k, s, t);
                if (!best || cand < *best) best = cand;
            }
        }
        if (!best) break;
        auto [k, s, t] = *best;
        for (std::size_t t2 = 0; t2 < n; ++t2)
            if (t2 != t && active[t2] && d(t2, s)) addmul(t, t2);
        for (std::size_t s2 = 0; s2 < n; ++s2)
            if (s2 != s && active[s2] && d(t, s2)) addmul(s2, s);
        active[s] = active[t] = false;
        length[t] = k;
    }

    struct Summand {
        bool tower;
        int top;
        int length;
        std::size_t gen;
    };
    std::vector<Summand> sums;
    for (std::size_t i = 0; i < n; ++i) {
        if (active[i]) sums.push_back({true, c.gr[i], 0, i});
        else if (length[i] > 0) sums.push_back({false, c.gr[i], length[i], i});
    }
    std::stable_sort(sums.begin(), sums.end(), [](const Summand& a, const Summand& b) {
        if (a.tower != b.tower) return a.tower;
        if (a.top != b.top) return a.top > b.top;
        return a.length > b.length;
    });

    Homology h;
    h.p_inv = pinv;
    h.red_gr = c.gr;
    h.pair_length = length;
    for (const auto& s : sums) {
        if (s.tower) h.module.free_towers.push_back(s.top);
        else h.module.torsion_blocks.push_back({s.top, s.length});
        std::vector<std::uint8_t> rep(n);
        for (std::size_t i = 0; i < n; ++i) rep[i] = p(i, s.gen);
        h.reps.push_back(std::move(rep));
        h.rep_gen.push_back(static_cast<int>(s.gen));
    }
    return h;
}

std::vector<QEntry> induced_on_homology(const Homology& h, const gf2::Mat& map, const std::vector<int>& gr, int degree)
{
    std::vector<QEntry> out;
    const std::size_t ntow = h.module.free_towers.size();
    for (std::size_t i = 0; i < h.reps.size(); ++i) {
        auto coords = h.p_inv.apply(map.apply(h.reps[i]));
        int gi = gr[h.rep_gen[i]];
        for (std::size_t j = 0; j < h.reps.size(); ++j) {
            int g = h.rep_gen[j];
            if (!coords[g]) continue;
            auto m = entry_power(gi, h.red_gr[g], degree);
            if (!m) throw std::logic_error("induced_on_homology: inhomogeneous image");
            if (j >= ntow && *m >= h.module.torsion_blocks[j - ntow].length) continue;
            out.push_back({static_cast<int>(i), static_cast<int>(j), *m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FComplex cone(const FComplex& c, const gf2::Mat& action)
{
    const std::size_t n = c.size();
    if (action.rows() != n || action.cols() != n) throw std::invalid_argument("cone: action shape mismatch");
    FComplex k;
    k.names = c.names;
    k.gr = c.gr;
    for (std::size_t i = 0; i < n; ++i) {
        k.names.push_back("Q·" + (c.names.empty() ? std::to_string(i) : c.names[i]));
        k.gr.push_back(c.gr[i] - 1);
    }
    k.d = gf2::Mat(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            k.d(i, j) = c.d(i, j);
            k.d(n + i, n + j) = c.d(i, j);
            k.d(n + i, j) = static_cast<std::uint8_t>((i == j) ^ action(i, j));
        }
    return k;
}

gf2::Mat cone_q(std::size_t n)
{
    gf2::Mat q(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) q(n + i, i) = 1;
    return q;
}

}  // namespace eqcfk
