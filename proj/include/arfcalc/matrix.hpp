#ifndef ARFCALC_MATRIX_HPP
#define ARFCALC_MATRIX_HPP

#include "arfcalc/poly.hpp"

namespace arfcalc {

/// Rectangular matrix over Z[x], row-major, entries normalized.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<IntPoly> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

    IntPoly& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const IntPoly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }
    /// Diagonal matrix from the given entries.
    static Mat diag(const std::vector<IntPoly>& d);
    /// Constant-entry matrix from integer grid.
    static Mat from_ints(const std::vector<std::vector<long long>>& grid);

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::string str() const;
};

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_scale(const Int& k, const Mat& a);
Mat transpose(const Mat& a);
/// Block diagonal [a 0; 0 b].
Mat block_diag(const Mat& a, const Mat& b);
/// Horizontal concatenation [a | b].
Mat hconcat(const Mat& a, const Mat& b);
/// Vertical concatenation [a ; b].
Mat vconcat(const Mat& a, const Mat& b);
Mat submat(const Mat& a, int r0, int c0, int r, int c);

bool is_zero(const Mat& a);
bool is_symmetric(const Mat& a);
/// Symmetric with every diagonal entry in 2Z[x] (the Quad_r condition).
bool is_quad(const Mat& a);

/// Exact determinant by fraction-free (Bareiss) elimination over Z[x].
IntPoly det(const Mat& a);
/// Adjugate matrix, adj(a) * a = det(a) * I.
Mat adjugate(const Mat& a);
/// det is a constant +1 or -1 (the units of Z[x]).
bool is_unimodular(const Mat& a);
/// If det = +-2^m returns (sign, m); otherwise nullopt-like flag via bool.
bool det_is_power_of_two(const Mat& a, int& sign, int& m);

/// All entries even.
bool mat_is_even(const Mat& a);
Mat mat_half(const Mat& a);

} // namespace arfcalc

#endif
