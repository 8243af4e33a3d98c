#include "valsemi/matrix.hpp"

namespace valsemi {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const Field& f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty())
        fail_validation("matrix literal must be nonempty");
    const Field f = rows.front().front().field();
    ExactMatrix m(rows.size(), rows.front().size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) fail_validation("ragged matrix literal");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.field() != field_) fail_validation("field mismatch");
    a_[i * cols_ + j] = v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    ExactMatrix s(rows_, cols.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, at(i, cols[j]));
    return s;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    ExactMatrix s(rows.size(), cols_, field_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.set(i, j, at(rows[i], j));
    return s;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) fail_validation("vector length mismatch in apply");
    std::vector<Scalar> y(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<Scalar> ExactMatrix::apply_left(const std::vector<Scalar>& x) const {
    if (x.size() != rows_) fail_validation("vector length mismatch in apply_left");
    std::vector<Scalar> y(cols_, Scalar::zero(field_));
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) y[j] += at(i, j) * x[i];
    return y;
}

namespace {

// Shared fraction-free forward elimination. Returns the pivot count; when
// want_det is set, also the sign-adjusted last pivot (Bareiss invariant: after
// step k the trailing entries are the k+1 minors, so the final pivot of a full
// sweep over a square matrix is the determinant).
struct Elimination {
    std::size_t rank = 0;
    Scalar det;
};

Elimination eliminate(ExactMatrix m, bool want_det) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const Field f = m.field();
    Elimination out;
    out.det = Scalar::one(f);
    int sign = 1;

    // working copy as a plain grid
    std::vector<std::vector<Scalar>> a(nr, std::vector<Scalar>(nc, Scalar::zero(f)));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    Scalar prev = Scalar::one(f);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // first nonzero entry in column order
        std::size_t piv = row;
        while (piv < nr && a[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != row) {
            std::swap(a[piv], a[row]);
            sign = -sign;
        }
        const Scalar pivot = a[row][col];
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[row][j]) / prev;
            }
            a[i][col] = Scalar::zero(f);
        }
        prev = pivot;
        ++row;
    }
    out.rank = row;
    if (want_det) {
        if (out.rank < nr) {
            out.det = Scalar::zero(f);
        } else {
            out.det = (sign < 0) ? -prev : prev;
        }
    }
    return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return eliminate(m, false).rank; }

Scalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) fail_validation("determinant requires a square matrix");
    if (m.rows() == 0) return Scalar::one(m.field());
    return eliminate(m, true).det;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    const Field f = m.field();

    std::vector<std::vector<Scalar>> a(nr, std::vector<Scalar>(nc, Scalar::zero(f)));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    // reduced row echelon form, first-nonzero pivoting
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        const Scalar inv = a[row][col].inverse();
        for (std::size_t j = col; j < nc; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Scalar factor = a[i][col];
            for (std::size_t j = col; j < nc; ++j)
                a[i][j] -= factor * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> x(nc, Scalar::zero(f));
        x[free] = Scalar::one(f);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            x[pivot_col[k]] = -a[k][free];
        basis.push_back(std::move(x));
    }

    // exactness check on every vector returned
    for (const auto& x : basis) {
        for (const Scalar& y : m.apply(x)) {
            if (!y.is_zero()) fail_internal("kernel vector fails Mx = 0");
        }
    }
    return basis;
}

}  // namespace valsemi
