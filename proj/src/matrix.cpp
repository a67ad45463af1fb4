#include "cyc/matrix.hpp"

#include <algorithm>

namespace cyc {

Mat Mat::identity(const RingPtr& R, int n) {
    Mat m(R, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const RingPtr& R, int c, const std::vector<Vec>& rows) {
    Mat m(R, static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.r; ++i) std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](Elt x) { return x == 0; });
}

void Mat::append_row(const Elt* v) {
    a.insert(a.end(), v, v + c);
    ++r;
}

void axpy(const Ring& R, Elt* y, const Elt* x, Elt s, int n) {
    if (s == 0) return;
    const Elt* mr = R.mul_row(s);
    if (s == 1) {
        for (int j = 0; j < n; ++j)
            if (x[j]) y[j] = R.add(y[j], x[j]);
        return;
    }
    for (int j = 0; j < n; ++j)
        if (x[j]) y[j] = R.add(y[j], mr[x[j]]);
}

Mat mul(const Mat& A, const Mat& B) {
    if (A.c != B.r) throw usage_error("matrix size mismatch in product");
    const RingPtr& R = A.R ? A.R : B.R;
    Mat C(R, A.r, B.c);
    if (!R) return C;
    for (int i = 0; i < A.r; ++i) {
        const Elt* ai = A.row(i);
        Elt* ci = C.row(i);
        for (int l = 0; l < A.c; ++l)
            if (ai[l]) axpy(*R, ci, B.row(l), ai[l], B.c);
    }
    return C;
}

static void same_shape(const Mat& A, const Mat& B) {
    if (A.r != B.r || A.c != B.c) throw usage_error("matrix size mismatch");
}

Mat add(const Mat& A, const Mat& B) {
    same_shape(A, B);
    Mat C = A;
    if (!C.R) C.R = B.R;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = C.R->add(A.a[i], B.a[i]);
    return C;
}

Mat sub(const Mat& A, const Mat& B) {
    same_shape(A, B);
    Mat C = A;
    if (!C.R) C.R = B.R;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = C.R->sub(A.a[i], B.a[i]);
    return C;
}

Mat neg(const Mat& A) {
    Mat C = A;
    for (auto& x : C.a) x = A.R->neg(x);
    return C;
}

Mat scale(const Mat& A, Elt s) {
    Mat C = A;
    for (auto& x : C.a) x = A.R->mul(x, s);
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(A.R, A.c, A.r);
    for (int i = 0; i < A.r; ++i)
        for (int j = 0; j < A.c; ++j) T(j, i) = A(i, j);
    return T;
}

Mat hcat(const Mat& A, const Mat& B) {
    if (A.r != B.r) throw usage_error("hcat row mismatch");
    Mat C(A.R ? A.R : B.R, A.r, A.c + B.c);
    for (int i = 0; i < A.r; ++i) {
        std::copy(A.row(i), A.row(i) + A.c, C.row(i));
        std::copy(B.row(i), B.row(i) + B.c, C.row(i) + A.c);
    }
    return C;
}

Mat vcat(const Mat& A, const Mat& B) {
    if (A.c != B.c) throw usage_error("vcat column mismatch");
    Mat C(A.R ? A.R : B.R, A.r + B.r, A.c);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Mat block_diag(const Mat& A, const Mat& B) {
    Mat C(A.R ? A.R : B.R, A.r + B.r, A.c + B.c);
    for (int i = 0; i < A.r; ++i) std::copy(A.row(i), A.row(i) + A.c, C.row(i));
    for (int i = 0; i < B.r; ++i) std::copy(B.row(i), B.row(i) + B.c, C.row(A.r + i) + A.c);
    return C;
}

Mat cols_range(const Mat& A, int c0, int c1) {
    Mat C(A.R, A.r, c1 - c0);
    for (int i = 0; i < A.r; ++i) std::copy(A.row(i) + c0, A.row(i) + c1, C.row(i));
    return C;
}

Mat rows_range(const Mat& A, int r0, int r1) {
    Mat C(A.R, r1 - r0, A.c);
    std::copy(A.a.begin() + static_cast<size_t>(r0) * A.c, A.a.begin() + static_cast<size_t>(r1) * A.c, C.a.begin());
    return C;
}

Mat map_entries(const Mat& A, const RingPtr& target, Elt (*f)(const Ring&, Elt)) {
    Mat C(target, A.r, A.c);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = f(*A.R, A.a[i]);
    return C;
}

Vec vec_mul(const Vec& x, const Mat& M) {
    if (static_cast<int>(x.size()) != M.r) throw usage_error("vector size mismatch");
    Vec y(M.c, 0);
    for (int i = 0; i < M.r; ++i)
        if (x[i]) axpy(*M.R, y.data(), M.row(i), x[i], M.c);
    return y;
}

Vec vec_add(const Ring& R, const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = R.add(x[i], y[i]);
    return z;
}

Vec vec_sub(const Ring& R, const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = R.sub(x[i], y[i]);
    return z;
}

Vec vec_scale(const Ring& R, const Vec& x, Elt s) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = R.mul(x[i], s);
    return z;
}

bool vec_is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](Elt v) { return v == 0; });
}

int field_rank(Mat A) {
    const Ring& R = *A.R;
    if (R.k() != 1) throw unsupported_error("field_rank needs a field");
    int rank = 0;
    for (int j = 0; j < A.c && rank < A.r; ++j) {
        int piv = -1;
        for (int i = rank; i < A.r; ++i)
            if (A(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int t = 0; t < A.c; ++t) std::swap(A(piv, t), A(rank, t));
        Elt inv = R.inv(A(rank, j));
        for (int i = 0; i < A.r; ++i) {
            if (i == rank || !A(i, j)) continue;
            axpy(R, A.row(i), A.row(rank), R.neg(R.mul(A(i, j), inv)), A.c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace cyc
