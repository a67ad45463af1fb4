#include "cyc/cup.hpp"

namespace cyc {

namespace {

bool odd(int a) { return (a % 2 + 2) % 2 == 1; }

// sigma^i of a basis vector of E_j: (sign, index)
std::pair<Elt, int> sigma_pow(const EqCx& E, int j, int idx, int i) {
    const Ring& R = *E.cx.R;
    const Mat& s = E.sigma.at(j);
    Elt sg = 1;
    for (int k = 0; k < i; ++k) {
        int c = 0;
        while (!s(idx, c)) ++c;
        sg = R.mul(sg, s(idx, c));
        idx = c;
    }
    return {sg, idx};
}

struct Basis {
    std::vector<int> deg, loc;
    std::map<int, int> first;
    explicit Basis(const Cx& V) {
        for (int n = V.lo; n <= V.hi(); ++n) {
            first[n] = static_cast<int>(deg.size());
            for (int i = 0; i < V.rank(n); ++i) {
                deg.push_back(n);
                loc.push_back(i);
            }
        }
    }
    int size() const { return static_cast<int>(deg.size()); }
};

}  // namespace

TensorCx tensor_complex(const Cx& V, const Cx& W) {
    const RingPtr& R = V.R;
    const Basis bv(V), bw(W);
    TensorCx T;
    T.vdeg = bv.deg;
    T.wdeg = bw.deg;
    T.idx.assign(bv.size(), std::vector<int>(bw.size(), -1));
    if (!bv.size() || !bw.size()) {
        T.cx = zero_complex(R);
        return T;
    }
    const int lo = V.lo + W.lo, hi = V.hi() + W.hi();
    std::map<int, std::vector<std::pair<int, int>>> by;
    for (int g = 0; g < bv.size(); ++g)
        for (int h = 0; h < bw.size(); ++h) by[bv.deg[g] + bw.deg[h]].push_back({g, h});
    std::map<int, int> local;  // position within the degree
    std::vector<std::vector<int>> loc(bv.size(), std::vector<int>(bw.size()));
    int total = 0;
    for (int n = lo; n <= hi; ++n)
        for (size_t k = 0; k < by[n].size(); ++k) {
            auto [g, h] = by[n][k];
            T.idx[g][h] = total++;
            loc[g][h] = static_cast<int>(k);
        }
    T.cx = free_complex(
        R, lo, hi, [&](int n) { return static_cast<int>(by[n].size()); },
        [&](int n) {
            Mat m(R, static_cast<int>(by[n].size()), static_cast<int>(by[n - 1].size()));
            for (size_t row = 0; row < by[n].size(); ++row) {
                auto [g, h] = by[n][row];
                const int dv = bv.deg[g], dw = bw.deg[h];
                Elt* out = m.row(static_cast<int>(row));
                Mat a = V.diff(dv), b = W.diff(dw);
                for (int c = 0; c < a.c; ++c)
                    if (Elt e = a(bv.loc[g], c)) {
                        int col = loc[bv.first.at(dv - 1) + c][h];
                        out[col] = R->add(out[col], e);
                    }
                const Elt sg = odd(dv) ? R->neg(1) : Elt(1);
                for (int c = 0; c < b.c; ++c)
                    if (Elt e = b(bw.loc[h], c)) {
                        int col = loc[g][bw.first.at(dw - 1) + c];
                        out[col] = R->add(out[col], R->mul(sg, e));
                    }
            }
            return m;
        });
    return T;
}

Vec tensor_elt(const TensorCx& T, const Cx& V, const Cx& W, int i, const Vec& x, int j, const Vec& y) {
    const RingPtr& R = T.cx.R;
    const int n = i + j;
    Vec out(T.cx.rank(n), 0);
    int off = 0;
    for (int m = T.cx.lo; m < n; ++m) off += T.cx.rank(m);
    int gv = 0, gw = 0;
    for (int m = V.lo; m < i; ++m) gv += V.rank(m);
    for (int m = W.lo; m < j; ++m) gw += W.rank(m);
    for (size_t a = 0; a < x.size(); ++a)
        for (size_t b = 0; b < y.size(); ++b)
            if (x[a] && y[b]) {
                int k = T.idx[gv + a][gw + b] - off;
                out[k] = R->add(out[k], R->mul(x[a], y[b]));
            }
    return out;
}

Sparse cup(const CupData& D, int t, const TRefs& rx, const Vec& x, int s, const TRefs& ry, const Vec& y) {
    const EqCx &E = *D.E, &F = *D.F, &G = *D.G;
    const RingPtr& R = E.cx.R;
    const int p = E.p;
    Sparse out;
    std::vector<int> c(p);
    for (size_t u = 0; u < rx.size(); ++u) {
        if (!x[u]) continue;
        const auto [j, ix] = rx[u];
        const int a = t - j;
        for (size_t v = 0; v < ry.size(); ++v) {
            if (!y[v]) continue;
            const auto [k, iy] = ry[v];
            const int b = s - k;
            Elt coef = R->mul(x[u], y[v]);
            if (odd(j) && odd(b)) coef = R->neg(coef);
            // (i, k, sign) terms of the diagonal on columns (a, b)
            std::vector<std::tuple<int, int, bool>> terms;
            if (!odd(a)) {
                terms.push_back({0, 0, false});
            } else if (!odd(b)) {
                terms.push_back({0, 1, false});
            } else {
                for (int i0 = 0; i0 < p; ++i0)
                    for (int k0 = i0 + 1; k0 < p; ++k0) terms.push_back({i0, k0, true});
            }
            for (auto [i0, k0, minus] : terms) {
                auto [s1, e1] = sigma_pow(E, j, ix, i0);
                auto [s2, e2] = sigma_pow(F, k, iy, k0);
                auto g = E.decode(E.codes.at(j)[e1]);
                auto h = F.decode(F.codes.at(k)[e2]);
                int before = 0, swaps = 0;
                for (int q = 0; q < p; ++q) {
                    swaps += before * E.vbasis[g[q]].first;
                    before += F.vbasis[h[q]].first;
                    c[q] = D.T->idx[g[q]][h[q]];
                }
                Elt e = R->mul(coef, R->mul(s1, s2));
                if (minus != odd(swaps)) e = R->neg(e);
                long code = G.encode(c);
                TRef ref{j + k, G.pos.at(code)};
                Elt& slot = out[ref];
                slot = R->add(slot, e);
            }
        }
    }
    return out;
}

Vec to_vec(const RingPtr& R, const Sparse& v, const TRefs& refs) {
    Vec out(refs.size(), 0);
    for (size_t i = 0; i < refs.size(); ++i) {
        auto it = v.find(refs[i]);
        if (it != v.end()) out[i] = it->second;
    }
    (void)R;
    return out;
}

}  // namespace cyc
