#pragma once

#include <cstddef>
#include <vector>

#include "w49/laurent.hpp"

namespace w49 {

// Dense square matrix of Laurent polynomials. Storage is 0-based; the
// cofactor entry point below speaks 1-based column indices because the
// surrounding linear algebra is phrased that way.
class PolyMatrix {
  public:
    explicit PolyMatrix(std::size_t n);
    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    LaurentPoly& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }
    const LaurentPoly& at(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> e_;
};

// 7x7 matrix with entry (i,j) = the ((i-j) mod 7 + 1)-th quartic group; each
// row is the previous row cyclically shifted right.
PolyMatrix build_matrix_A();

// Same circulant layout from the ell-th power groups.
PolyMatrix build_matrix_A_general(int ell);

// The structured 7x7 matrix with entries from {F1, -q F2, -q^2, q^5 F3, 0};
// its fourth power equals build_matrix_A().
PolyMatrix build_matrix_W();

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b);

// e >= 1, by repeated multiplication.
PolyMatrix matrix_power(const PolyMatrix& v, unsigned e);

// Order-5 determinant staged through the ten 3x3 bottom-row minors, then the
// explicit two-row combination. Throws DimensionMismatch unless dim == 5.
LaurentPoly det5(const PolyMatrix& m);

// Order-6 determinant expanded along the first row into six det5 calls.
LaurentPoly det6_first_row(const PolyMatrix& m);

// (-1)^(1+col) times the order-6 minor of a 7x7 matrix with row 1 and column
// `col` (1-based) deleted; the minor is computed by det6_first_row.
LaurentPoly cofactor_first_row(const PolyMatrix& a, int col);

// First-row cofactor expansion of a 7x7 determinant.
LaurentPoly det7_first_row(const PolyMatrix& a);

}  // namespace w49
