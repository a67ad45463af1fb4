#include "cyc/tate.hpp"

#include <algorithm>

namespace cyc {

int tate_weight(int j, int p) { return floor_div(-j, p); }

TRefs tate_refs(const EqCx& E, int t, int w0, int w1) {
    TRefs out;
    const Cx& X = E.cx;
    if (!X.rk.size()) return out;
    for (int j = X.lo; j <= X.hi(); ++j) {
        int w = tate_weight(j, E.p);
        if (w < w0 || w > w1) continue;
        for (int i = 0; i < X.rank(j); ++i) out.push_back({j, i});
    }
    (void)t;
    return out;
}

TRefs window_refs(const EqCx& E, int t) { return tate_refs(E, t, INT_MIN / 2, INT_MAX / 2); }

namespace {

Elt sgn(const Ring& R, int a) { return (a % 2 == 0) ? 1 : R.neg(1); }

// horizontal map out of column a, on E_j
Mat horizontal(const EqCx& E, int j, int a) {
    return (a % 2 == 0) ? one_minus_sigma(E, j) : trace(E, j);
}

}  // namespace

Mat tate_diff(const EqCx& E, int t, const TRefs& src, const TRefs& tgt) {
    const RingPtr& R = E.cx.R;
    Mat M(R, static_cast<int>(src.size()), static_cast<int>(tgt.size()));
    if (src.empty() || tgt.empty()) return M;
    std::map<TRef, int> where;
    for (size_t i = 0; i < tgt.size(); ++i) where[tgt[i]] = static_cast<int>(i);
    std::map<int, Mat> hor, ver;
    for (size_t r = 0; r < src.size(); ++r) {
        const auto [j, idx] = src[r];
        const int a = t - j;
        if (!hor.count(j)) hor[j] = horizontal(E, j, a);
        if (!ver.count(j)) ver[j] = scale(E.cx.diff(j), sgn(*R, a));
        const Mat& h = hor[j];
        for (int c = 0; c < h.c; ++c) {
            if (!h(idx, c)) continue;
            auto it = where.find({j, c});
            if (it != where.end()) M(static_cast<int>(r), it->second) = R->add(M(static_cast<int>(r), it->second), h(idx, c));
        }
        const Mat& v = ver[j];
        for (int c = 0; c < v.c; ++c) {
            if (!v(idx, c)) continue;
            auto it = where.find({j - 1, c});
            if (it != where.end()) M(static_cast<int>(r), it->second) = R->add(M(static_cast<int>(r), it->second), v(idx, c));
        }
    }
    return M;
}

int TateBand::index(int t, const TRef& r) const {
    auto it = refs.find(t);
    if (it == refs.end()) return -1;
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), r);
    if (pos == it->second.end() || !(*pos == r)) return -1;
    return static_cast<int>(pos - it->second.begin());
}

TateBand tate_trunc(std::shared_ptr<const EqCx> Ep, int n, int m, bool modp) {
    const EqCx& E = *Ep;
    const RingPtr& R = E.cx.R;
    if (modp && R->k() != 2) throw usage_error("mod p band needs a k = 2 ring");
    TateBand B;
    B.n = n;
    B.m = m;
    B.modp = modp;
    B.E = Ep;
    if (E.cx.rk.empty() || m < n) {
        B.cx = zero_complex(R);
        return B;
    }
    int wmin = INT_MAX, wmax = INT_MIN;
    for (int j = E.cx.lo; j <= E.cx.hi(); ++j) {
        if (!E.cx.rank(j)) continue;
        wmin = std::min(wmin, tate_weight(j, E.p));
        wmax = std::max(wmax, tate_weight(j, E.p));
    }
    if (wmin == INT_MAX) {
        B.cx = zero_complex(R);
        return B;
    }
    const int lo = n - wmax, hi = m - wmin;
    for (int t = lo - 1; t <= hi + 1; ++t) B.refs[t] = tate_refs(E, t, n - t, m - t);
    Cx X;
    X.R = R;
    X.lo = lo;
    for (int t = lo; t <= hi; ++t) {
        const TRefs& band = B.refs[t];
        const int r = static_cast<int>(band.size());
        X.rk.push_back(r);
        X.d.push_back(t == lo ? Mat(R, r, 0) : tate_diff(E, t, band, B.refs[t - 1]));
        std::vector<int> w;
        for (auto& ref : band) w.push_back(tate_weight(ref.j, E.p));
        X.wt.push_back(w);
        // cycles condition: no component of weight n - t in degree t - 1
        TRefs low = tate_refs(E, t - 1, n - t, n - t);
        Span U;
        if (low.empty()) {
            U = full_span(R, r);
        } else {
            Mat M = tate_diff(E, t, band, low);
            U = modp ? preimage(M, scaled(full_span(R, M.c), R->p())) : kernel(M);
        }
        TRefs top = tate_refs(E, t + 1, m - t, m - t);
        Span W = top.empty() ? zero_span(R, r) : span_image(Mat::identity(R, static_cast<int>(top.size())), tate_diff(E, t + 1, top, band));
        if (modp) W = span_sum(W, scaled(full_span(R, r), R->p()));
        U = span_sum(U, W);
        X.U.push_back(U);
        X.W.push_back(W);
    }
    B.cx = std::move(X);
    return B;
}

Cx tate_window(const EqCx& E, int lo, int hi) {
    const RingPtr& R = E.cx.R;
    std::map<int, TRefs> refs;
    for (int t = lo - 1; t <= hi; ++t) refs[t] = window_refs(E, t);
    Cx X = free_complex(
        R, lo, hi, [&](int t) { return static_cast<int>(refs[t].size()); },
        [&](int t) { return tate_diff(E, t, refs[t], refs[t - 1]); });
    for (int t = lo; t <= hi; ++t) {
        std::vector<int> w;
        for (auto& ref : refs[t]) w.push_back(tate_weight(ref.j, E.p));
        X.wt.push_back(w);
    }
    return X;
}

CMap tate_band_map(const TateBand& S, const TateBand& T, const CMap& F) {
    CMap out;
    const Cx& X = S.cx;
    for (int t = X.lo; t <= X.hi(); ++t) {
        const TRefs& src = S.refs.at(t);
        const int rt = T.cx.rank(t);
        Mat M(X.R, static_cast<int>(src.size()), rt);
        std::map<int, Mat> cache;
        for (size_t r = 0; r < src.size(); ++r) {
            const auto [j, idx] = src[r];
            if (!cache.count(j)) cache[j] = F.at(j, S.E->cx, T.E->cx);
            const Mat& f = cache[j];
            for (int c = 0; c < f.c; ++c) {
                if (!f(idx, c)) continue;
                int pos = T.index(t, {j, c});
                if (pos >= 0) M(static_cast<int>(r), pos) = f(idx, c);
            }
        }
        out.f[t] = M;
    }
    return out;
}

std::pair<int, int> tate_module_lengths(const EqCx& E, int j) {
    const int r = E.cx.rank(j);
    if (!r) return {0, 0};
    const RingPtr& R = E.cx.R;
    Mat s = one_minus_sigma(E, j), tr = trace(E, j);
    auto len = [&](const Mat& out, const Mat& in) {
        Span Z = kernel(out);
        Span Bd = span_image(Mat::identity(R, r), in);
        return Z.length() - Bd.length();
    };
    // even column: ker(1 - sigma) / im tr, odd column: ker tr / im(1 - sigma)
    return {len(s, tr), len(tr, s)};
}

Cx frobenius_twist(const Cx& V) {
    Cx X = V;
    const Ring& R = *V.R;
    for (auto& m : X.d)
        for (auto& e : m.a) e = R.frob(e);
    return X;
}

namespace {

CMap phi_raw(const TateBand& B, const Cx& V) {
    const EqCx& E = *B.E;
    const int i = B.n;
    CMap out;
    std::vector<int> g;
    for (int t = B.cx.lo; t <= B.cx.hi(); ++t) {
        const int s = t - i;
        Mat M(B.cx.R, B.cx.rank(t), V.rank(s));
        for (int l = 0; l < V.rank(s); ++l) {
            g.assign(E.p, E.global(s, l));
            int pos = B.index(t, {E.p * s, E.pos.at(E.encode(g))});
            if (pos >= 0) M(pos, l) = 1;
        }
        out.f[t] = M;
    }
    return out;
}

// phi(D x) = r * d phi(x) on the cone of R[s-1] -> R[s-1] shifted so that
// the top sits in degree s
Elt phi_ratio(const RingPtr& R, int i, int s) {
    Cx V = free_complex(R, s - 1, {1, 1}, {Mat(R, 1, 0), Mat::identity(R, 1)});
    auto E = std::make_shared<const EqCx>(tensor_power(V, R->p()));
    TateBand B = tate_trunc(E, i, i);
    CMap phi = phi_raw(B, V);
    const int t = s + i;
    const Span& U = B.cx.U[t - B.cx.lo];
    const Mat& ph = phi.f.at(t);
    for (int r = 0; r < U.size(); ++r) {
        Vec v = vec_mul(U.rows.row_vec(r), ph);
        if (!R->is_unit(v[0])) continue;
        Vec x = vec_scale(*R, U.rows.row_vec(r), R->inv(v[0]));
        return vec_mul(vec_mul(x, B.cx.diff(t)), phi.f.at(t - 1))[0];
    }
    throw std::logic_error("no diagonal cycle in the universal case");
}

}  // namespace

CMap tate_phi(const TateBand& B, const Cx& V) {
    CMap out = phi_raw(B, V);
    const RingPtr R = Ring::get(V.R->p());
    const int i = B.n;
    // scalar per V degree, 1 on degree 0
    std::map<int, Elt> eps{{0, 1}};
    for (int s = 1; s <= V.hi(); ++s) eps[s] = R->mul(eps[s - 1], phi_ratio(R, i, s));
    for (int s = 0; s > V.lo; --s) eps[s - 1] = R->mul(eps[s], R->inv(phi_ratio(R, i, s)));
    for (auto& [t, M] : out.f) {
        const int s = t - i;
        if (eps.count(s)) M = scale(M, eps[s]);
    }
    return out;
}

CyclicExt cyclic_extension(const Cx& V, const TensorOptions& opt) {
    CyclicExt X;
    X.E = std::make_shared<const EqCx>(tensor_power(V, V.R->p(), opt));
    X.band = tate_trunc(X.E, 0, 1);
    X.C = X.band.cx;
    X.B1 = ftruncate(X.C, 1, 1);
    X.A = ftruncate(X.C, 0, 0);
    X.b = identity_map(X.C);
    X.a = identity_map(X.C);
    return X;
}

}  // namespace cyc

namespace cyc {

CMap cyclic_map(const CyclicExt& S, const CyclicExt& T, const Cx& V, const Cx& W, const CMap& f) {
    CMap F = tensor_power_map(*S.E, *T.E, V, W, f);
    return tate_band_map(S.band, T.band, F);
}

}  // namespace cyc
