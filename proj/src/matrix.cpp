#include "w49/matrix.hpp"

#include <stdexcept>

#include "w49/errors.hpp"
#include "w49/symbolic.hpp"

namespace w49 {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::term(1);
    return m;
}

namespace {

PolyMatrix circulant7(const std::array<LaurentPoly, 7>& gen) {
    PolyMatrix m(7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = gen[(i + 7 - j) % 7];
    return m;
}

}  // namespace

PolyMatrix build_matrix_A() { return build_matrix_A_general(4); }

PolyMatrix build_matrix_A_general(int ell) {
    std::array<LaurentPoly, 7> gen;
    for (int g = 0; g < 7; ++g) gen[g] = build_A_general(ell, g + 1);
    return circulant7(gen);
}

PolyMatrix build_matrix_W() {
    std::array<LaurentPoly, 7> gen;
    gen[0] = LaurentPoly::term(1, 1, 0, 0, 0);    // F1
    gen[1] = LaurentPoly::term(-1, 0, 1, 0, 1);   // -q F2
    gen[2] = LaurentPoly::term(-1, 0, 0, 0, 2);   // -q^2
    gen[5] = LaurentPoly::term(1, 0, 0, 1, 5);    // q^5 F3
    return circulant7(gen);
}

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
    const std::size_t n = a.dim();
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc;
            for (std::size_t k = 0; k < n; ++k)
                acc = add(acc, mul(a.at(i, k), b.at(k, j)));
            out.at(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix matrix_power(const PolyMatrix& v, unsigned e) {
    if (e == 0) throw std::invalid_argument("matrix power exponent must be >= 1");
    PolyMatrix out = v;
    for (unsigned i = 1; i < e; ++i) out = matrix_multiply(out, v);
    return out;
}

namespace {

// det of rows 3..5 restricted to the given columns (all indices 0-based).
LaurentPoly det3_bottom(const PolyMatrix& m, std::size_t c1, std::size_t c2, std::size_t c3) {
    const auto minor2 = [&](std::size_t x, std::size_t y) {
        return sub(mul(m.at(3, x), m.at(4, y)), mul(m.at(4, x), m.at(3, y)));
    };
    LaurentPoly out = mul(m.at(2, c1), minor2(c2, c3));
    out = sub(out, mul(m.at(2, c2), minor2(c1, c3)));
    out = add(out, mul(m.at(2, c3), minor2(c1, c2)));
    return out;
}

}  // namespace

LaurentPoly det5(const PolyMatrix& m) {
    if (m.dim() != 5) throw DimensionMismatch("det5 needs a 5x5 matrix, got " +
                                              std::to_string(m.dim()));
    // Ten bottom-row minors, indexed by the column pair dropped.
    const LaurentPoly A = det3_bottom(m, 2, 3, 4);
    const LaurentPoly B = det3_bottom(m, 1, 3, 4);
    const LaurentPoly C = det3_bottom(m, 1, 2, 4);
    const LaurentPoly D = det3_bottom(m, 1, 2, 3);
    const LaurentPoly E = det3_bottom(m, 0, 3, 4);
    const LaurentPoly F = det3_bottom(m, 0, 2, 4);
    const LaurentPoly G = det3_bottom(m, 0, 2, 3);
    const LaurentPoly H = det3_bottom(m, 0, 1, 4);
    const LaurentPoly I = det3_bottom(m, 0, 1, 3);
    const LaurentPoly J = det3_bottom(m, 0, 1, 2);

    const auto row2 = [&](std::size_t c) -> const LaurentPoly& { return m.at(1, c); };
    LaurentPoly r = mul(m.at(0, 0), add(sub(mul(row2(1), A), mul(row2(2), B)),
                                        sub(mul(row2(3), C), mul(row2(4), D))));
    r = sub(r, mul(m.at(0, 1), add(sub(mul(row2(0), A), mul(row2(2), E)),
                                   sub(mul(row2(3), F), mul(row2(4), G)))));
    r = add(r, mul(m.at(0, 2), add(sub(mul(row2(0), B), mul(row2(1), E)),
                                   sub(mul(row2(3), H), mul(row2(4), I)))));
    r = sub(r, mul(m.at(0, 3), add(sub(mul(row2(0), C), mul(row2(1), F)),
                                   sub(mul(row2(2), H), mul(row2(4), J)))));
    r = add(r, mul(m.at(0, 4), add(sub(mul(row2(0), D), mul(row2(1), G)),
                                   sub(mul(row2(2), I), mul(row2(3), J)))));
    return r;
}

namespace {

PolyMatrix drop_row_col(const PolyMatrix& m, std::size_t row, std::size_t col) {
    PolyMatrix out(m.dim() - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i == row) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j == col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace

LaurentPoly det6_first_row(const PolyMatrix& m) {
    if (m.dim() != 6) throw DimensionMismatch("det6 needs a 6x6 matrix, got " +
                                              std::to_string(m.dim()));
    LaurentPoly r;
    for (std::size_t j = 0; j < 6; ++j) {
        if (m.at(0, j).is_zero()) continue;
        const LaurentPoly t = mul(m.at(0, j), det5(drop_row_col(m, 0, j)));
        r = (j % 2 == 0) ? add(r, t) : sub(r, t);
    }
    return r;
}

LaurentPoly cofactor_first_row(const PolyMatrix& a, int col) {
    if (a.dim() != 7) throw DimensionMismatch("cofactor expansion needs a 7x7 matrix");
    if (col < 1 || col > 7) throw IndexOutOfRange("cofactor column " + std::to_string(col));
    const LaurentPoly d = det6_first_row(drop_row_col(a, 0, static_cast<std::size_t>(col - 1)));
    return (1 + col) % 2 == 0 ? d : neg(d);
}

LaurentPoly det7_first_row(const PolyMatrix& a) {
    if (a.dim() != 7) throw DimensionMismatch("expansion needs a 7x7 matrix");
    LaurentPoly r;
    for (int col = 1; col <= 7; ++col) {
        const LaurentPoly& entry = a.at(0, static_cast<std::size_t>(col - 1));
        if (entry.is_zero()) continue;
        r = add(r, mul(entry, cofactor_first_row(a, col)));
    }
    return r;
}

}  // namespace w49
