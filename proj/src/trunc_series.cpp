#include "qv/trunc_series.hpp"

namespace qv {

namespace {

TruncSeries det_cofactor(const std::vector<std::vector<TruncSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    TruncSeries acc = TruncSeries::zero(m[0][0].num_vars(), m[0][0].bound());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<TruncSeries>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<TruncSeries> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        TruncSeries term = m[0][j] * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

TruncSeries det_bareiss(std::vector<std::vector<TruncSeries>> a) {
    const std::size_t n = a.size();
    const int nv = a[0][0].num_vars();
    const int bd = a[0][0].bound();
    TruncSeries prev = TruncSeries::constant(nv, bd, Rational(1));
    Rational sign(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].constant_term().is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].constant_term().is_zero()) ++swap_row;
            if (swap_row == n)
                throw NonExactDivision("no invertible pivot for fraction-free elimination");
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = series_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return a[n - 1][n - 1] * sign;
}

}  // namespace

TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& mat, int d) {
    const std::size_t n = mat.size();
    if (n == 0) throw NonSquare("empty matrix");
    const int nv = mat[0][0].num_vars();
    std::vector<std::vector<TruncSeries>> work;
    work.reserve(n);
    for (const auto& row : mat) {
        if (row.size() != n) throw NonSquare();
        std::vector<TruncSeries> w;
        w.reserve(n);
        for (const auto& entry : row) {
            if (entry.num_vars() != nv) throw Error("determinant entries disagree on arity");
            if (entry.bound() < d) throw BoundExceeded("entry bound below requested degree");
            w.push_back(entry.truncated_to(d));
        }
        work.push_back(std::move(w));
    }
    return n <= 4 ? det_cofactor(work) : det_bareiss(std::move(work));
}

}  // namespace qv
