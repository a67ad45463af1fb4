#include "cyc/complex.hpp"

#include <algorithm>

namespace cyc {

Mat Cx::diff(int n) const {
    if (in_range(n) && in_range(n - 1)) return d[n - lo];
    return Mat(R, rank(n), rank(n - 1));
}

Span Cx::Uat(int n) const { return in_range(n) ? U[n - lo] : zero_span(R, 0); }
Span Cx::Wat(int n) const { return in_range(n) ? W[n - lo] : zero_span(R, 0); }

std::vector<int> Cx::weights(int n) const {
    if (!in_range(n)) return {};
    if (wt.empty()) return std::vector<int>(rank(n), 0);
    return wt[n - lo];
}

namespace {

Cx skeleton(const RingPtr& R, int lo, int hi, const std::function<int(int)>& rank) {
    Cx E;
    E.R = R;
    E.lo = lo;
    for (int n = lo; n <= hi; ++n) E.rk.push_back(rank(n));
    return E;
}

void fill(Cx& E, const CxFn& diff) {
    E.d.clear();
    for (int n = E.lo; n <= E.hi(); ++n) {
        if (n == E.lo) {
            E.d.push_back(Mat(E.R, E.rank(n), 0));
            continue;
        }
        Mat m = diff(n);
        if (m.r != E.rank(n) || m.c != E.rank(n - 1)) throw usage_error("differential has the wrong shape");
        if (!m.R) m.R = E.R;
        E.d.push_back(std::move(m));
    }
}

void fill_free(Cx& E) {
    E.U.clear();
    E.W.clear();
    for (int n = E.lo; n <= E.hi(); ++n) {
        E.U.push_back(full_span(E.R, E.rank(n)));
        E.W.push_back(zero_span(E.R, E.rank(n)));
    }
}

}  // namespace

Cx free_complex(const RingPtr& R, int lo, const std::vector<int>& ranks, const std::vector<Mat>& diffs) {
    const int hi = lo + static_cast<int>(ranks.size()) - 1;
    Cx E = skeleton(R, lo, hi, [&](int n) { return ranks[n - lo]; });
    fill(E, [&](int n) { return diffs[n - lo]; });
    fill_free(E);
    return E;
}

Cx free_complex(const RingPtr& R, int lo, int hi, const std::function<int(int)>& rank, const CxFn& diff) {
    Cx E = skeleton(R, lo, hi, rank);
    fill(E, diff);
    fill_free(E);
    return E;
}

Cx zero_complex(const RingPtr& R) {
    Cx E;
    E.R = R;
    return E;
}

Cx one_term(const RingPtr& R, int deg, int rank) {
    return free_complex(R, deg, {rank}, {Mat(R, rank, 0)});
}

bool is_free(const Cx& E) {
    for (int n = E.lo; n <= E.hi(); ++n)
        if (E.U[n - E.lo].length() != E.R->k() * E.rank(n) || E.W[n - E.lo].size() != 0) return false;
    return true;
}

bool is_valid(const Cx& E) {
    for (int n = E.lo; n <= E.hi(); ++n) {
        const Span& U = E.U[n - E.lo];
        const Span& W = E.W[n - E.lo];
        if (!span_leq(W, U)) return false;
        if (n - 1 < E.lo) continue;
        Mat d = E.diff(n);
        Span Ub = E.Uat(n - 1), Wb = E.Wat(n - 1);
        if (!span_leq(span_image(U, d), Ub)) return false;
        if (!span_leq(span_image(W, d), Wb)) return false;
        if (n - 2 >= E.lo) {
            Mat dd = mul(d, E.diff(n - 1));
            if (!span_leq(span_image(U, dd), E.Wat(n - 2))) return false;
        }
    }
    return true;
}

void require_valid(const Cx& E) {
    if (!is_valid(E)) throw usage_error("not a chain complex (d o d != 0)");
}

Mat CMap::at(int n, int rs, int rt, const RingPtr& R) const {
    auto it = f.find(n);
    if (it == f.end() || rs == 0 || rt == 0) return Mat(R, rs, rt);
    if (it->second.r != rs || it->second.c != rt) throw usage_error("chain map component has the wrong shape");
    return it->second;
}

CMap identity_map(const Cx& E) {
    CMap m;
    for (int n = E.lo; n <= E.hi(); ++n) m.f[n] = Mat::identity(E.R, E.rank(n));
    return m;
}

CMap zero_map(const Cx&, const Cx&) { return {}; }

CMap compose(const Cx& A, const Cx& B, const Cx& C, const CMap& f, const CMap& g) {
    CMap h;
    for (int n = std::min(A.lo, C.lo); n <= std::max(A.hi(), C.hi()); ++n) {
        if (!A.rank(n) || !C.rank(n)) continue;
        h.f[n] = mul(f.at(n, A, B), g.at(n, B, C));
    }
    return h;
}

CMap map_add(const Cx& S, const Cx& T, const CMap& f, const CMap& g) {
    CMap h;
    for (int n = S.lo; n <= S.hi(); ++n)
        if (T.rank(n) && S.rank(n)) h.f[n] = add(f.at(n, S, T), g.at(n, S, T));
    return h;
}

CMap map_neg(const Cx& S, const Cx& T, const CMap& f) {
    CMap h;
    for (int n = S.lo; n <= S.hi(); ++n)
        if (T.rank(n) && S.rank(n)) h.f[n] = neg(f.at(n, S, T));
    return h;
}

CMap map_scale(const Cx& S, const Cx& T, const CMap& f, Elt s) {
    CMap h;
    for (int n = S.lo; n <= S.hi(); ++n)
        if (T.rank(n) && S.rank(n)) h.f[n] = scale(f.at(n, S, T), s);
    return h;
}

Span cycles(const Cx& E, int n) {
    if (!E.in_range(n)) return zero_span(E.R, 0);
    return preimage_in(E.Uat(n), E.diff(n), E.Wat(n - 1).rows.R ? E.Wat(n - 1) : zero_span(E.R, 0));
}

Span boundaries(const Cx& E, int n) {
    if (!E.in_range(n)) return zero_span(E.R, 0);
    Span B = E.Wat(n);
    if (E.in_range(n + 1)) B = span_sum(span_image(E.Uat(n + 1), E.diff(n + 1)), B);
    return B;
}

int homology_length(const Cx& E, int n) { return cycles(E, n).length() - boundaries(E, n).length(); }

bool is_acyclic(const Cx& E) {
    for (int n = E.lo; n <= E.hi(); ++n)
        if (homology_length(E, n) != 0) return false;
    return true;
}

std::map<int, std::vector<int>> homology(const Cx& E) {
    std::map<int, std::vector<int>> h;
    for (int n = E.lo; n <= E.hi(); ++n) {
        Span Z = cycles(E, n), B = boundaries(E, n);
        if (Z.length() == B.length()) continue;
        auto ex = make_sqbasis(Z, B).exps;
        std::sort(ex.begin(), ex.end());
        h[n] = ex;
    }
    return h;
}

int module_length(const Cx& E, int n) {
    if (!E.in_range(n)) return 0;
    return E.U[n - E.lo].length() - E.W[n - E.lo].length();
}

Cx shift(const Cx& E, int m) {
    Cx F = E;
    F.lo += m;
    return F;
}

Cx direct_sum(const Cx& A, const Cx& B) {
    if (A.rk.empty()) return B;
    if (B.rk.empty()) return A;
    const int lo = std::min(A.lo, B.lo), hi = std::max(A.hi(), B.hi());
    Cx E = skeleton(A.R, lo, hi, [&](int n) { return A.rank(n) + B.rank(n); });
    fill(E, [&](int n) { return block_diag(A.diff(n), B.diff(n)); });
    for (int n = lo; n <= hi; ++n) {
        E.U.push_back(howell(block_diag(A.Uat(n).rows.R ? A.Uat(n).rows : Mat(A.R, 0, A.rank(n)),
                                        B.Uat(n).rows.R ? B.Uat(n).rows : Mat(A.R, 0, B.rank(n)))));
        E.W.push_back(howell(block_diag(A.Wat(n).rows.R ? A.Wat(n).rows : Mat(A.R, 0, A.rank(n)),
                                        B.Wat(n).rows.R ? B.Wat(n).rows : Mat(A.R, 0, B.rank(n)))));
        if (A.has_weights() || B.has_weights()) {
            auto w = A.weights(n);
            auto wb = B.weights(n);
            w.insert(w.end(), wb.begin(), wb.end());
            E.wt.push_back(w);
        }
    }
    return E;
}

namespace {

Mat rows_or_empty(const Span& S, const RingPtr& R, int n) { return S.rows.R ? S.rows : Mat(R, 0, n); }

Span sum_spans(const Span& a, int na, const Span& b, int nb, const RingPtr& R) {
    return howell(block_diag(rows_or_empty(a, R, na), rows_or_empty(b, R, nb)));
}

}  // namespace

Cx cone(const Cx& S, const Cx& T, const CMap& f) {
    if (S.rk.empty() && T.rk.empty()) return zero_complex(S.R);
    int lo = T.rk.empty() ? S.lo + 1 : (S.rk.empty() ? T.lo : std::min(T.lo, S.lo + 1));
    int hi = T.rk.empty() ? S.hi() + 1 : (S.rk.empty() ? T.hi() : std::max(T.hi(), S.hi() + 1));
    const RingPtr R = S.R ? S.R : T.R;
    Cx E = skeleton(R, lo, hi, [&](int n) { return T.rank(n) + S.rank(n - 1); });
    fill(E, [&](int n) {
        const int tn = T.rank(n), sn = S.rank(n - 1), tm = T.rank(n - 1), sm = S.rank(n - 2);
        Mat m(R, tn + sn, tm + sm);
        Mat dt = T.diff(n), ds = S.diff(n - 1);
        Mat fn = f.at(n - 1, S, T);
        const bool negate = ((n - 1) % 2 + 2) % 2 == 1;
        for (int i = 0; i < tn; ++i) std::copy(dt.row(i), dt.row(i) + tm, m.row(i));
        for (int i = 0; i < sn; ++i) {
            for (int j = 0; j < tm; ++j) m(tn + i, j) = negate ? R->neg(fn(i, j)) : fn(i, j);
            std::copy(ds.row(i), ds.row(i) + sm, m.row(tn + i) + tm);
        }
        return m;
    });
    for (int n = lo; n <= hi; ++n) {
        E.U.push_back(sum_spans(T.Uat(n), T.rank(n), S.Uat(n - 1), S.rank(n - 1), R));
        E.W.push_back(sum_spans(T.Wat(n), T.rank(n), S.Wat(n - 1), S.rank(n - 1), R));
        if (S.has_weights() || T.has_weights()) {
            auto w = T.weights(n);
            auto ws = S.weights(n - 1);
            w.insert(w.end(), ws.begin(), ws.end());
            E.wt.push_back(w);
        }
    }
    return E;
}

CMap cone_in(const Cx& S, const Cx& T) {
    CMap m;
    for (int n = T.lo; n <= T.hi(); ++n) {
        Mat a(T.R, T.rank(n), T.rank(n) + S.rank(n - 1));
        for (int i = 0; i < T.rank(n); ++i) a(i, i) = 1;
        m.f[n] = a;
    }
    return m;
}

CMap cone_out(const Cx& S, const Cx& T) {
    CMap m;
    for (int n = S.lo + 1; n <= S.hi() + 1; ++n) {
        Mat a(S.R, T.rank(n) + S.rank(n - 1), S.rank(n - 1));
        for (int i = 0; i < S.rank(n - 1); ++i) a(T.rank(n) + i, i) = 1;
        m.f[n] = a;
    }
    return m;
}

Cx with_sub(const Cx& E, const std::vector<Span>& U, const std::vector<Span>& W) {
    Cx F = E;
    for (size_t i = 0; i < F.rk.size(); ++i) {
        F.W[i] = W[i];
        F.U[i] = span_sum(U[i], W[i]);
    }
    return F;
}

Cx truncate_ge(const Cx& E, int m) {
    std::vector<Span> U = E.U, W = E.W;
    for (int n = E.lo; n <= E.hi(); ++n) {
        if (n < m) U[n - E.lo] = W[n - E.lo];
        if (n == m) U[n - E.lo] = cycles(E, n);
    }
    return with_sub(E, U, W);
}

Cx truncate_le(const Cx& E, int m) {
    std::vector<Span> U = E.U, W = E.W;
    for (int n = E.lo; n <= E.hi(); ++n) {
        if (n > m) W[n - E.lo] = U[n - E.lo];
        if (n == m) W[n - E.lo] = boundaries(E, n);
    }
    return with_sub(E, U, W);
}

Cx truncate(const Cx& E, int m, int n) {
    if (m > n) throw usage_error("empty truncation window");
    return truncate_le(truncate_ge(E, m), n);
}

Span filt(const Cx& E, int n, int j) {
    if (!E.in_range(n)) return zero_span(E.R, 0);
    const int r = E.rank(n);
    const auto w = E.weights(n);
    Mat coord(E.R, 0, r);
    for (int i = 0; i < r; ++i)
        if (w[i] >= j) {
            Vec e(r, 0);
            e[i] = 1;
            coord.append_row(e);
        }
    const Span& U = E.U[n - E.lo];
    Span F = static_cast<int>(coord.r) == r ? U : (coord.r == 0 ? zero_span(E.R, r) : span_intersect(U, howell(coord)));
    return span_sum(F, E.W[n - E.lo]);
}

Cx ftruncate(const Cx& E, int n, int m) {
    std::vector<Span> U = E.U, W = E.W;
    const bool has_lo = n != kNoBound, has_hi = m != -kNoBound;
    if (has_lo) {
        for (int i = E.lo; i <= E.hi(); ++i) {
            Span src = filt(E, i, n - i);
            if (E.in_range(i - 1))
                U[i - E.lo] = preimage_in(src, E.diff(i), filt(E, i - 1, n + 1 - i));
            else
                U[i - E.lo] = src;
        }
    }
    if (has_hi) {
        Cx Ep = with_sub(E, U, W);
        for (int i = E.lo; i <= E.hi(); ++i) {
            Span w = span_sum(W[i - E.lo], filt(Ep, i, m + 1 - i));
            if (E.in_range(i + 1)) w = span_sum(w, span_image(filt(Ep, i + 1, m - i), E.diff(i + 1)));
            W[i - E.lo] = w;
        }
    }
    return with_sub(E, U, W);
}

Cx ftruncate_ge(const Cx& E, int n) { return ftruncate(E, n, -kNoBound); }
Cx ftruncate_le(const Cx& E, int m) { return ftruncate(E, kNoBound, m); }

Cx graded(const Cx& E, int j) {
    std::vector<Span> U, W;
    for (int n = E.lo; n <= E.hi(); ++n) {
        U.push_back(filt(E, n, j));
        W.push_back(filt(E, n, j + 1));
    }
    return with_sub(E, U, W);
}

bool is_chain_map(const Cx& S, const Cx& T, const CMap& f) {
    for (int n = S.lo; n <= S.hi(); ++n) {
        Mat fn = f.at(n, S, T);
        const Span& U = S.U[n - S.lo];
        const Span& W = S.W[n - S.lo];
        Span Ut = T.in_range(n) ? T.U[n - T.lo] : zero_span(S.R, 0);
        Span Wt = T.in_range(n) ? T.W[n - T.lo] : zero_span(S.R, 0);
        if (T.rank(n)) {
            if (!span_leq(span_image(U, fn), Ut)) return false;
            if (!span_leq(span_image(W, fn), Wt)) return false;
        }
        if (T.rank(n - 1) && U.size()) {
            Mat lhs = mul(S.diff(n), f.at(n - 1, S, T));
            Mat rhs = mul(fn, T.diff(n));
            Mat delta = sub(mul(U.rows, lhs), mul(U.rows, rhs));
            for (int i = 0; i < delta.r; ++i)
                if (!T.W[n - 1 - T.lo].contains(delta.row(i))) return false;
        }
    }
    return true;
}

bool is_injective(const Cx& S, const Cx& T, const CMap& f) {
    for (int n = S.lo; n <= S.hi(); ++n) {
        if (!T.rank(n)) {
            if (module_length(S, n)) return false;
            continue;
        }
        Span K = preimage_in(S.U[n - S.lo], f.at(n, S, T), T.W[n - T.lo]);
        if (K.length() != S.W[n - S.lo].length()) return false;
    }
    return true;
}

bool is_surjective(const Cx& S, const Cx& T, const CMap& f) {
    for (int n = T.lo; n <= T.hi(); ++n) {
        Span im = T.W[n - T.lo];
        if (S.rank(n)) im = span_sum(span_image(S.U[n - S.lo], f.at(n, S, T)), im);
        if (im.length() != T.U[n - T.lo].length()) return false;
    }
    return true;
}

bool is_iso(const Cx& S, const Cx& T, const CMap& f) {
    return is_chain_map(S, T, f) && is_injective(S, T, f) && is_surjective(S, T, f);
}

bool is_zero_map(const Cx& S, const Cx& T, const CMap& f) {
    for (int n = S.lo; n <= S.hi(); ++n) {
        if (!T.rank(n)) continue;
        if (!span_leq(span_image(S.U[n - S.lo], f.at(n, S, T)), T.W[n - T.lo])) return false;
    }
    return true;
}

bool maps_equal(const Cx& S, const Cx& T, const CMap& f, const CMap& g) {
    return is_zero_map(S, T, map_add(S, T, f, map_neg(S, T, g)));
}

bool is_quasi_iso(const Cx& S, const Cx& T, const CMap& f) {
    return is_chain_map(S, T, f) && is_acyclic(cone(S, T, f));
}

Cx middle(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a) {
    std::vector<Span> U, W;
    for (int n = C.lo; n <= C.hi(); ++n) {
        const Span& Uc = C.U[n - C.lo];
        Span u = A.rank(n) ? preimage_in(Uc, a.at(n, C, A), A.W[n - A.lo]) : Uc;
        Span w = C.W[n - C.lo];
        if (B.rank(n)) w = span_sum(span_image(B.U[n - B.lo], b.at(n, B, C)), w);
        U.push_back(u);
        W.push_back(w);
    }
    return with_sub(C, U, W);
}

static void require_composite_zero(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a) {
    if (!is_zero_map(B, A, compose(B, C, A, b, a))) throw usage_error("a o b != 0");
}

bool is_quasiexact(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a) {
    require_composite_zero(B, C, A, b, a);
    return is_injective(B, C, b) && is_surjective(C, A, a) && is_acyclic(middle(B, C, A, b, a));
}

bool is_exact_seq(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a) {
    require_composite_zero(B, C, A, b, a);
    if (!is_injective(B, C, b) || !is_surjective(C, A, a)) return false;
    Cx M = middle(B, C, A, b, a);
    for (int n = M.lo; n <= M.hi(); ++n)
        if (module_length(M, n)) return false;
    return true;
}

Compressed compress(const Cx& E) {
    Compressed out;
    const RingPtr& R = E.R;
    const int k = R->k();
    for (int n = E.lo; n <= E.hi(); ++n) out.basis.emplace(n, make_sqbasis(E.U[n - E.lo], E.W[n - E.lo]));
    Cx& C = out.cx;
    C = skeleton(R, E.lo, E.hi(), [&](int n) { return out.basis.at(n).rank(); });
    fill(C, [&](int n) {
        const SQBasis& src = out.basis.at(n);
        const SQBasis& dst = out.basis.at(n - 1);
        Mat m(R, src.rank(), dst.rank());
        Mat img = mul(src.gens, E.diff(n));
        for (int i = 0; i < src.rank(); ++i) {
            Vec c = dst.coords(img.row(i));
            std::copy(c.begin(), c.end(), m.row(i));
        }
        return m;
    });
    for (int n = E.lo; n <= E.hi(); ++n) {
        const SQBasis& B = out.basis.at(n);
        C.U.push_back(full_span(R, B.rank()));
        Mat w(R, 0, B.rank());
        for (int i = 0; i < B.rank(); ++i)
            if (B.exps[i] < k) {
                Vec e(B.rank(), 0);
                e[i] = R->p_pow(B.exps[i]);
                w.append_row(e);
            }
        C.W.push_back(howell(w));
    }
    return out;
}

CMap compress_map(const Compressed& S, const Compressed& T, const Cx& Sbig, const CMap& f) {
    CMap g;
    const RingPtr& R = S.cx.R;
    for (const auto& [n, bs] : S.basis) {
        auto it = T.basis.find(n);
        if (it == T.basis.end() || !bs.rank() || !it->second.rank()) continue;
        Mat img = mul(bs.gens, f.at(n, Sbig.rank(n), it->second.n, R));
        Mat m(R, bs.rank(), it->second.rank());
        for (int i = 0; i < bs.rank(); ++i) {
            Vec c = it->second.coords(img.row(i));
            std::copy(c.begin(), c.end(), m.row(i));
        }
        g.f[n] = m;
    }
    return g;
}

CMap map_from(const Compressed& S, const CMap& f) {
    CMap g;
    for (const auto& [n, bs] : S.basis) {
        auto it = f.f.find(n);
        if (it == f.f.end() || !bs.rank()) continue;
        g.f[n] = mul(bs.gens, it->second);
    }
    return g;
}

CMap map_into(const Cx& S, const Compressed& T, const CMap& f) {
    CMap g;
    for (int n = S.lo; n <= S.hi(); ++n) {
        auto it = T.basis.find(n);
        if (it == T.basis.end() || !S.rank(n) || !it->second.rank()) continue;
        Mat img = f.at(n, S.rank(n), it->second.n, S.R);
        Mat m(S.R, S.rank(n), it->second.rank());
        for (int i = 0; i < S.rank(n); ++i) {
            Vec c = it->second.coords(img.row(i));
            std::copy(c.begin(), c.end(), m.row(i));
        }
        g.f[n] = m;
    }
    return g;
}

}  // namespace cyc
