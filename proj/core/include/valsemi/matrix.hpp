#pragma once

#include <cstddef>
#include <vector>

#include "valsemi/scalar.hpp"

namespace valsemi {

/// Dense matrix over one exact field. All entries share the field that the
/// matrix was created with; inserting a scalar from another field is a
/// "field mismatch" error.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const Field& f);

    static ExactMatrix identity(std::size_t n, const Field& f);
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);

    ExactMatrix transpose() const;
    /// Submatrix keeping the given column indices, in the order given.
    ExactMatrix select_columns(const std::vector<std::size_t>& cols) const;
    ExactMatrix select_rows(const std::vector<std::size_t>& rows) const;

    /// M x for a column vector x.
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
    /// x^T M for a row vector x.
    std::vector<Scalar> apply_left(const std::vector<Scalar>& x) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

/*
 * Exact rank, determinant and right null space.
 *
 * rank() and determinant() run fraction-free (Bareiss) elimination: every
 * intermediate entry is an exact field element and the division step divides
 * out the previous pivot exactly. Pivot choice is the first nonzero entry in
 * column order, so all downstream combinatorial output is deterministic.
 */
std::size_t rank(const ExactMatrix& m);
Scalar determinant(const ExactMatrix& m);
/// Basis of {x : Mx = 0} in reduced echelon normal form (one basis vector per
/// free column). Each returned vector is re-checked against M exactly.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

}  // namespace valsemi
