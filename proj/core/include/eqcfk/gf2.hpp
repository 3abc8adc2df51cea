#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace eqcfk::gf2 {

using Row = boost::dynamic_bitset<>;

// Linear system A x = b over GF(2). Rows are added incrementally.
class System {
public:
    explicit System(std::size_t nvars) : n_(nvars) {}

    std::size_t vars() const { return n_; }
    std::size_t rows() const { return rows_.size(); }

    std::size_t add_row();
    void flip(std::size_t row, std::size_t var);
    void flip_rhs(std::size_t row);

    // particular solution with free variables set to zero
    std::optional<Row> solve() const;
    // basis of the homogeneous solution space
    std::vector<Row> nullspace() const;

private:
    struct Echelon {
        std::vector<Row> rows;
        std::vector<std::size_t> pivots;
        bool consistent = true;
    };
    Echelon eliminate() const;

    std::size_t n_;
    std::vector<Row> rows_;  // n_ + 1 bits, last bit is the rhs
};

// Incrementally built span with reduction to a canonical coset representative.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}
    bool add(Row v);  // true if v was independent
    Row reduce(Row v) const;
    bool contains(const Row& v) const { return reduce(v).none(); }
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t dim_;
    std::vector<Row> basis_;
    std::vector<std::size_t> lead_;
};

// Dense matrix over GF(2). Used for homogeneous maps of free graded F[U]-modules,
// where the U-power of an entry is implied by the gradings.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, 0) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

    void add_row(std::size_t dst, std::size_t src);  // row dst += row src
    void add_col(std::size_t dst, std::size_t src);  // col dst += col src

    Mat transpose() const;
    bool is_zero() const;
    bool operator==(const Mat&) const = default;

    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::uint8_t> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);

std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

}  // namespace eqcfk::gf2
