#include "eqcfk/gf2.hpp"

#include <doctest.h>

#include <random>

using namespace eqcfk::gf2;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c)
{
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() & 1;
    return m;
}

}  // namespace

TEST_CASE("system solutions satisfy every row")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 10, rows = 1 + rng() % 12;
        Mat a = random_mat(rng, rows, n);
        std::vector<std::uint8_t> rhs(rows);
        for (auto& b : rhs) b = rng() & 1;
        System s(n);
        for (std::size_t i = 0; i < rows; ++i) {
            auto r = s.add_row();
            for (std::size_t j = 0; j < n; ++j)
                if (a(i, j)) s.flip(r, j);
            if (rhs[i]) s.flip_rhs(r);
        }
        // brute force solvability
        bool solvable = false;
        for (std::uint32_t x = 0; x < (1u << n) && !solvable; ++x) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = (x >> j) & 1;
            solvable = a.apply(v) == rhs;
        }
        auto sol = s.solve();
        REQUIRE(sol.has_value() == solvable);
        if (sol) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = (*sol)[j];
            CHECK(a.apply(v) == rhs);
        }
        auto ns = s.nullspace();
        CHECK(ns.size() == n - rank(a));
        for (const auto& k : ns) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = k[j];
            CHECK(a.apply(v) == std::vector<std::uint8_t>(rows, 0));
        }
    }
}

TEST_CASE("span reduction is a canonical coset representative")
{
    std::mt19937 rng(11);
    Span sp(12);
    std::vector<Row> gens;
    for (int i = 0; i < 5; ++i) {
        Row r(12);
        for (std::size_t j = 0; j < 12; ++j) r[j] = rng() & 1;
        sp.add(r);
        gens.push_back(r);
    }
    for (const auto& g : gens) CHECK(sp.contains(g));
    for (int t = 0; t < 30; ++t) {
        Row v(12), w(12);
        for (std::size_t j = 0; j < 12; ++j) v[j] = rng() & 1;
        w = v;
        for (const auto& g : gens)
            if (rng() & 1) w ^= g;
        CHECK(sp.reduce(v) == sp.reduce(w));
    }
    CHECK_FALSE(sp.add(gens[0] ^ gens[1]));
}

TEST_CASE("inverse and rank agree")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 7;
        Mat m = random_mat(rng, n, n);
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == n));
        if (inv) {
            CHECK(m * *inv == Mat::identity(n));
            CHECK(*inv * m == Mat::identity(n));
        }
        CHECK(rank(m.transpose()) == rank(m));
    }
}
