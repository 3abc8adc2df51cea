#include "eqcfk/gf2.hpp"

#include <stdexcept>

namespace eqcfk::gf2 {

std::size_t System::add_row()
{
    rows_.emplace_back(n_ + 1);
    return rows_.size() - 1;
}

void System::flip(std::size_t row, std::size_t var) { rows_[row].flip(var); }
void System::flip_rhs(std::size_t row) { rows_[row].flip(n_); }

System::Echelon System::eliminate() const
{
    Echelon e;
    e.rows = rows_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < e.rows.size(); ++col) {
        std::size_t p = r;
        while (p < e.rows.size() && !e.rows[p][col]) ++p;
        if (p == e.rows.size()) continue;
        std::swap(e.rows[p], e.rows[r]);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (i != r && e.rows[i][col]) e.rows[i] ^= e.rows[r];
        e.pivots.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < e.rows.size(); ++i)
        if (e.rows[i][n_]) e.consistent = false;
    e.rows.resize(r);
    return e;
}

std::optional<Row> System::solve() const
{
    Echelon e = eliminate();
    if (!e.consistent) return std::nullopt;
    Row x(n_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.rows[i][n_]) x.set(e.pivots[i]);
    return x;
}

std::vector<Row> System::nullspace() const
{
    Echelon e = eliminate();
    std::vector<bool> is_pivot(n_, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        Row v(n_);
        v.set(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.rows[i][f]) v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Span::add(Row v)
{
    v = reduce(std::move(v));
    if (v.none()) return false;
    std::size_t lead = v.find_first();
    for (auto& b : basis_)
        if (b[lead]) b ^= v;
    basis_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
}

Row Span::reduce(Row v) const
{
    if (v.size() != dim_) throw std::invalid_argument("gf2::Span: dimension mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v[lead_[i]]) v ^= basis_[i];
    return v;
}

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Mat::add_row(std::size_t dst, std::size_t src)
{
    for (std::size_t j = 0; j < c_; ++j) a_[dst * c_ + j] ^= a_[src * c_ + j];
}

void Mat::add_col(std::size_t dst, std::size_t src)
{
    for (std::size_t i = 0; i < r_; ++i) a_[i * c_ + dst] ^= a_[i * c_ + src];
}

Mat Mat::transpose() const
{
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_zero() const
{
    for (auto x : a_)
        if (x) return false;
    return true;
}

std::vector<std::uint8_t> Mat::apply(const std::vector<std::uint8_t>& v) const
{
    if (v.size() != c_) throw std::invalid_argument("gf2::Mat::apply: size mismatch");
    std::vector<std::uint8_t> out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        std::uint8_t s = 0;
        for (std::size_t j = 0; j < c_; ++j) s ^= (*this)(i, j) & v[j];
        out[i] = s;
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("gf2::Mat: product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k))
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) ^= b(k, j);
    return c;
}

Mat operator+(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("gf2::Mat: sum shape mismatch");
    Mat c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) ^= b(i, j);
    return c;
}

std::size_t rank(const Mat& m)
{
    Span s(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) r.set(j);
        s.add(std::move(r));
    }
    return s.rank();
}

std::optional<Mat> inverse(const Mat& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Mat a = m, inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && !a(p, col)) ++p;
        if (p == n) return std::nullopt;
        if (p != col) {
            a.add_row(col, p);
            inv.add_row(col, p);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (i != col && a(i, col)) {
                a.add_row(i, col);
                inv.add_row(i, col);
            }
    }
    return inv;
}

}  // namespace eqcfk::gf2
