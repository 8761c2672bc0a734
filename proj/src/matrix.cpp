#include "arfcalc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace arfcalc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = IntPoly::constant(1);
    return m;
}

Mat Mat::diag(const std::vector<IntPoly>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long long>>& grid) {
    int r = static_cast<int>(grid.size());
    int c = r ? static_cast<int>(grid[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(grid[i].size()) != c) throw std::invalid_argument("from_ints: ragged grid");
        for (int j = 0; j < c; ++j) m.at(i, j) = IntPoly::constant(grid[i][j]);
    }
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

static void check_same_shape(const Mat& a, const Mat& b, const char* who) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

Mat mat_add(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "mat_add");
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_add(a.e[i], b.e[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "mat_sub");
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_sub(a.e[i], b.e[i]);
    return r;
}

Mat mat_neg(const Mat& a) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_neg(a.e[i]);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const IntPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = poly_add(r.at(i, j), poly_mul(aik, b.at(k, j)));
            }
        }
    return r;
}

Mat mat_scale(const Int& k, const Mat& a) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = poly_scale(k, a.e[i]);
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat r(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
    return r;
}

Mat hconcat(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hconcat: row mismatch");
    Mat r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Mat vconcat(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vconcat: column mismatch");
    Mat r(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

Mat submat(const Mat& a, int r0, int c0, int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = a.at(r0 + i, c0 + j);
    return m;
}

bool is_zero(const Mat& a) {
    for (const auto& p : a.e)
        if (!p.is_zero()) return false;
    return true;
}

bool is_symmetric(const Mat& a) {
    if (a.rows != a.cols) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.cols; ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

bool is_quad(const Mat& a) {
    if (!is_symmetric(a)) return false;
    for (int i = 0; i < a.rows; ++i)
        if (!is_even_poly(a.at(i, i))) return false;
    return true;
}

IntPoly det(const Mat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("det: matrix not square");
    int n = a.rows;
    if (n == 0) return IntPoly::constant(1);
    Mat w = a;
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return IntPoly();
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = poly_sub(poly_mul(w.at(k, k), w.at(i, j)), poly_mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = poly_divexact(num, prev);
            }
        prev = w.at(k, k);
    }
    IntPoly d = w.at(n - 1, n - 1);
    return sign < 0 ? poly_neg(d) : d;
}

Mat adjugate(const Mat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("adjugate: matrix not square");
    int n = a.rows;
    Mat r(n, n);
    if (n == 0) return r;
    if (n == 1) {
        r.at(0, 0) = IntPoly::constant(1);
        return r;
    }
    Mat minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int ii = 0, mi = 0; ii < n; ++ii) {
                if (ii == i) continue;
                for (int jj = 0, mj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    minor.at(mi, mj) = a.at(ii, jj);
                    ++mj;
                }
                ++mi;
            }
            IntPoly cof = det(minor);
            if ((i + j) % 2 != 0) cof = poly_neg(cof);
            r.at(j, i) = cof; // transpose of the cofactor matrix
        }
    return r;
}

bool is_unimodular(const Mat& a) {
    if (a.rows != a.cols) return false;
    IntPoly d = det(a);
    return d.degree() == 0 && (d.c[0] == 1 || d.c[0] == -1);
}

bool det_is_power_of_two(const Mat& a, int& sign, int& m) {
    IntPoly d = det(a);
    if (d.degree() != 0) return false;
    Int v = d.c[0];
    sign = v < 0 ? -1 : 1;
    if (v < 0) v = -v;
    m = 0;
    while (v > 1 && (v & 1) == 0) {
        v >>= 1;
        ++m;
    }
    return v == 1;
}

bool mat_is_even(const Mat& a) {
    for (const auto& p : a.e)
        if (!is_even_poly(p)) return false;
    return true;
}

Mat mat_half(const Mat& a) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = half(a.e[i]);
    return r;
}

} // namespace arfcalc
