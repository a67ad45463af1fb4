#include "cyc/span.hpp"

#include <algorithm>

namespace cyc {

namespace {

bool row_zero(const Vec& v) { return vec_is_zero(v); }

Span restrict_from(const Span& H, int c0) {
    Span S;
    S.rows = Mat(H.rows.R, 0, H.rows.c - c0);
    for (int i = 0; i < H.size(); ++i) {
        if (H.pcol[i] < c0) continue;
        S.rows.append_row(H.rows.row(i) + c0);
        S.pcol.push_back(H.pcol[i] - c0);
        S.pexp.push_back(H.pexp[i]);
    }
    return S;
}

}  // namespace

int Span::length() const {
    if (!rows.R) return 0;
    int k = rows.R->k(), s = 0;
    for (int e : pexp) s += k - e;
    return s;
}

void Span::reduce(Elt* v) const {
    const Ring& R = *rows.R;
    for (int t = 0; t < size(); ++t) {
        Elt x = v[pcol[t]];
        if (!x) continue;
        Elt rm = R.rem_p(x, pexp[t]);
        if (rm == x) continue;
        Elt c = R.div_p(R.sub(x, rm), pexp[t]);
        axpy(R, v, rows.row(t), R.neg(c), rows.c);
    }
}

bool Span::contains(const Elt* v) const {
    Vec w(v, v + n());
    if (size() == 0) return row_zero(w);
    reduce(w.data());
    return row_zero(w);
}

Span howell(Mat A) {
    const RingPtr Rp = A.R;
    const Ring& R = *Rp;
    const int k = R.k(), n = A.c;
    std::vector<Vec> pool;
    for (int i = 0; i < A.r; ++i) {
        Vec v = A.row_vec(i);
        if (!row_zero(v)) pool.push_back(std::move(v));
    }
    Span S;
    S.rows = Mat(Rp, 0, n);
    for (int j = 0; j < n && !pool.empty(); ++j) {
        int best = -1, bv = k;
        for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
            int v = R.val(pool[i][j]);
            if (v < bv) {
                bv = v;
                best = i;
                if (v == 0) break;
            }
        }
        if (best < 0) continue;
        Vec r = std::move(pool[best]);
        pool.erase(pool.begin() + best);
        const int e = bv;
        Elt u = R.div_p(r[j], e);
        if (u != 1) r = vec_scale(R, r, R.inv(u));
        std::vector<Vec> next;
        next.reserve(pool.size() + 1);
        for (auto& w : pool) {
            if (w[j]) axpy(R, w.data(), r.data(), R.neg(R.div_p(w[j], e)), n);
            if (!row_zero(w)) next.push_back(std::move(w));
        }
        if (e > 0) {
            Vec ann = vec_scale(R, r, R.p_pow(k - e));
            if (!row_zero(ann)) next.push_back(std::move(ann));
        }
        pool = std::move(next);
        S.rows.append_row(r);
        S.pcol.push_back(j);
        S.pexp.push_back(e);
    }
    for (int t = 1; t < S.size(); ++t) {
        const int j = S.pcol[t], e = S.pexp[t];
        for (int s = 0; s < t; ++s) {
            Elt x = S.rows(s, j);
            if (!x) continue;
            Elt rm = R.rem_p(x, e);
            if (rm == x) continue;
            axpy(R, S.rows.row(s), S.rows.row(t), R.neg(R.div_p(R.sub(x, rm), e)), n);
        }
    }
    return S;
}

Span zero_span(const RingPtr& R, int n) {
    Span S;
    S.rows = Mat(R, 0, n);
    return S;
}

Span full_span(const RingPtr& R, int n) {
    Span S;
    S.rows = Mat::identity(R, n);
    for (int i = 0; i < n; ++i) {
        S.pcol.push_back(i);
        S.pexp.push_back(0);
    }
    return S;
}

Span span_sum(const Span& A, const Span& B) {
    if (B.size() == 0) return A;
    if (A.size() == 0) return B;
    return howell(vcat(A.rows, B.rows));
}

Span span_intersect(const Span& A, const Span& B) {
    const int n = A.n();
    if (A.size() == 0 || B.size() == 0) return zero_span(A.rows.R, n);
    Mat top = hcat(A.rows, A.rows);
    Mat bot = hcat(B.rows, Mat(A.rows.R, B.rows.r, n));
    return restrict_from(howell(vcat(top, bot)), n);
}

bool span_leq(const Span& A, const Span& B) {
    for (int i = 0; i < A.size(); ++i)
        if (!B.contains(A.rows.row(i))) return false;
    return true;
}

Span span_image(const Span& S, const Mat& M) { return span_image(S.rows, M); }

Span span_image(const Mat& gens, const Mat& M) {
    if (gens.r == 0) return zero_span(M.R, M.c);
    return howell(mul(gens, M));
}

Span kernel(const Mat& M) {
    return restrict_from(howell(hcat(M, Mat::identity(M.R, M.r))), M.c);
}

Span preimage(const Mat& M, const Span& S) {
    Mat top = hcat(M, Mat::identity(M.R, M.r));
    Mat bot = hcat(S.rows, Mat(M.R, S.size(), M.r));
    return restrict_from(howell(vcat(top, bot)), M.c);
}

Span preimage_in(const Span& U, const Mat& M, const Span& S) {
    if (U.size() == 0) return zero_span(M.R, M.r);
    Mat top = hcat(mul(U.rows, M), U.rows);
    Mat bot = hcat(S.rows, Mat(M.R, S.size(), M.r));
    return restrict_from(howell(vcat(top, bot)), M.c);
}

Span scaled(const Span& S, Elt s) { return howell(scale(S.rows, s)); }

Span direct_sum(const Span& A, const Span& B) { return howell(block_diag(A.rows, B.rows)); }

std::optional<Vec> solve(const Mat& M, const Vec& b, const Span& W) {
    const RingPtr& Rp = M.R;
    const Ring& R = *Rp;
    const int m = M.r, n = M.c;
    Mat big(Rp, m + W.size() + 1, n + 1 + m);
    for (int i = 0; i < m; ++i) {
        std::copy(M.row(i), M.row(i) + n, big.row(i));
        big(i, n + 1 + i) = 1;
    }
    for (int i = 0; i < W.size(); ++i) std::copy(W.rows.row(i), W.rows.row(i) + n, big.row(m + i));
    for (int j = 0; j < n; ++j) big(m + W.size(), j) = R.neg(b[j]);
    big(m + W.size(), n) = 1;
    Span H = howell(std::move(big));
    for (int t = 0; t < H.size(); ++t) {
        if (H.pcol[t] < n) continue;
        if (H.pcol[t] > n || H.pexp[t] != 0) return std::nullopt;
        const Elt* row = H.rows.row(t);
        return Vec(row + n + 1, row + n + 1 + m);
    }
    return std::nullopt;
}

Smith smith_form(const Mat& A) {
    const RingPtr& Rp = A.R;
    const Ring& R = *Rp;
    const int r = A.r, c = A.c, k = R.k();
    Smith S;
    S.D = A;
    S.P = Mat::identity(Rp, r);
    S.Q = Mat::identity(Rp, c);
    S.Qinv = Mat::identity(Rp, c);
    Mat& D = S.D;
    auto swap_rows = [](Mat& M, int i, int j) {
        if (i == j) return;
        for (int t = 0; t < M.c; ++t) std::swap(M(i, t), M(j, t));
    };
    auto swap_cols = [](Mat& M, int i, int j) {
        if (i == j) return;
        for (int t = 0; t < M.r; ++t) std::swap(M(t, i), M(t, j));
    };
    auto col_axpy = [&](Mat& M, int dst, int src, Elt s) {
        for (int t = 0; t < M.r; ++t)
            if (M(t, src)) M(t, dst) = R.add(M(t, dst), R.mul(s, M(t, src)));
    };
    for (int t = 0; t < std::min(r, c); ++t) {
        int bi = -1, bj = -1, bv = k;
        for (int i = t; i < r && bv > 0; ++i)
            for (int j = t; j < c; ++j) {
                int v = R.val(D(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break;
        swap_rows(D, t, bi);
        swap_rows(S.P, t, bi);
        swap_cols(D, t, bj);
        swap_cols(S.Q, t, bj);
        swap_rows(S.Qinv, t, bj);
        const int e = bv;
        Elt u = R.div_p(D(t, t), e);
        if (u != 1) {
            Elt ui = R.inv(u);
            for (int j = 0; j < c; ++j) D(t, j) = R.mul(D(t, j), ui);
            for (int j = 0; j < r; ++j) S.P(t, j) = R.mul(S.P(t, j), ui);
        }
        for (int i = t + 1; i < r; ++i) {
            if (!D(i, t)) continue;
            Elt f = R.neg(R.div_p(D(i, t), e));
            axpy(R, D.row(i), D.row(t), f, c);
            axpy(R, S.P.row(i), S.P.row(t), f, r);
        }
        for (int j = t + 1; j < c; ++j) {
            if (!D(t, j)) continue;
            Elt f = R.div_p(D(t, j), e);
            col_axpy(D, j, t, R.neg(f));
            col_axpy(S.Q, j, t, R.neg(f));
            axpy(R, S.Qinv.row(t), S.Qinv.row(j), f, c);
        }
        S.exps.push_back(e);
    }
    return S;
}

int SQBasis::length() const {
    int s = 0;
    for (int e : exps) s += e;
    return s;
}

bool SQBasis::in_U(const Elt* x) const { return try_coords(x).has_value(); }

std::optional<Vec> SQBasis::try_coords(const Elt* x) const {
    const Ring& Rr = *R;
    Vec v(n + g, 0);
    std::copy(x, x + n, v.begin());
    red.reduce(v.data());
    for (int j = 0; j < n; ++j)
        if (v[j]) return std::nullopt;
    Vec y(g);
    for (int j = 0; j < g; ++j) y[j] = Rr.neg(v[n + j]);
    Vec c = vec_mul(y, Qk);
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rr.rem_p(c[i], exps[i]);
    return c;
}

Vec SQBasis::coords(const Elt* x) const {
    auto c = try_coords(x);
    if (!c) throw std::logic_error("vector does not lie in the subquotient");
    return *c;
}

Vec SQBasis::lift(const Vec& c) const { return vec_mul(c, gens); }

SQBasis make_sqbasis(const Span& U0, const Span& W) {
    SQBasis B;
    B.R = U0.rows.R;
    B.n = U0.n();
    B.W = W;
    B.U = span_sum(U0, W);
    const Ring& R = *B.R;
    const int k = R.k(), n = B.n;
    const Mat& G = B.U.rows;
    B.g = G.r;
    Mat top = hcat(G, Mat::identity(B.R, B.g));
    Mat bot = hcat(W.rows, Mat(B.R, W.size(), B.g));
    B.red = howell(vcat(top, bot));
    Span rel = restrict_from(B.red, n);
    Smith S = smith_form(rel.rows);
    std::vector<int> keep;
    for (int i = 0; i < B.g; ++i) {
        int e = i < static_cast<int>(S.exps.size()) ? S.exps[i] : k;
        if (e >= 1) {
            keep.push_back(i);
            B.exps.push_back(e);
        }
    }
    Mat G2 = mul(S.Qinv, G);
    B.gens = Mat(B.R, 0, n);
    B.Qk = Mat(B.R, B.g, static_cast<int>(keep.size()));
    for (size_t t = 0; t < keep.size(); ++t) {
        B.gens.append_row(G2.row(keep[t]));
        for (int i = 0; i < B.g; ++i) B.Qk(i, static_cast<int>(t)) = S.Q(i, keep[t]);
    }
    return B;
}

}  // namespace cyc

namespace cyc {

std::optional<Mat> inverse(const Mat& A) {
    if (A.r != A.c) return std::nullopt;
    const int n = A.r;
    Span H = howell(hcat(A, Mat::identity(A.R, n)));
    if (H.size() < n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (H.pcol[i] != i || H.pexp[i] != 0) return std::nullopt;
    Mat inv(A.R, n, n);
    for (int i = 0; i < n; ++i) std::copy(H.rows.row(i) + n, H.rows.row(i) + 2 * n, inv.row(i));
    return inv;
}

}  // namespace cyc
