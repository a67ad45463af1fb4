#pragma once

#include <vector>

#include "cyc/ring.hpp"

namespace cyc {

using Vec = std::vector<Elt>;

// Dense matrix acting on row vectors: a map R^r -> R^c is an r x c matrix
// and x |-> x * M.  Composition "f then g" is mul(F, G).
struct Mat {
    RingPtr R;
    int r = 0, c = 0;
    std::vector<Elt> a;

    Mat() = default;
    Mat(RingPtr ring, int rows, int cols) : R(std::move(ring)), r(rows), c(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    Elt& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    Elt operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }
    Elt* row(int i) { return a.data() + static_cast<size_t>(i) * c; }
    const Elt* row(int i) const { return a.data() + static_cast<size_t>(i) * c; }
    Vec row_vec(int i) const { return Vec(row(i), row(i) + c); }

    static Mat identity(const RingPtr& R, int n);
    static Mat zero(const RingPtr& R, int r, int c) { return Mat(R, r, c); }
    static Mat from_rows(const RingPtr& R, int c, const std::vector<Vec>& rows);

    bool is_zero() const;
    bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
    void append_row(const Elt* v);
    void append_row(const Vec& v) { append_row(v.data()); }
};

Mat mul(const Mat& A, const Mat& B);
Mat add(const Mat& A, const Mat& B);
Mat sub(const Mat& A, const Mat& B);
Mat neg(const Mat& A);
Mat scale(const Mat& A, Elt s);
Mat transpose(const Mat& A);
Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat block_diag(const Mat& A, const Mat& B);
Mat cols_range(const Mat& A, int c0, int c1);
Mat rows_range(const Mat& A, int r0, int r1);
Mat map_entries(const Mat& A, const RingPtr& target, Elt (*f)(const Ring&, Elt));

Vec vec_mul(const Vec& x, const Mat& M);
Vec vec_add(const Ring& R, const Vec& x, const Vec& y);
Vec vec_sub(const Ring& R, const Vec& x, const Vec& y);
Vec vec_scale(const Ring& R, const Vec& x, Elt s);
bool vec_is_zero(const Vec& x);
// y += s * x over n entries
void axpy(const Ring& R, Elt* y, const Elt* x, Elt s, int n);

// independent Gaussian elimination over a field, used as a test oracle
int field_rank(Mat A);

}  // namespace cyc
