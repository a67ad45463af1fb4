#include "cyc/random.hpp"

namespace cyc {

Mat random_matrix(const RingPtr& R, int r, int c, Rng& rng) {
    Mat M(R, r, c);
    for (auto& x : M.a) x = random_elt(*R, rng);
    return M;
}

Vec random_vec(const RingPtr& R, int n, Rng& rng) {
    Vec v(n);
    for (auto& x : v) x = random_elt(*R, rng);
    return v;
}

Mat random_invertible(const RingPtr& R, int n, Rng& rng) {
    for (;;) {
        Mat M = random_matrix(R, n, n, rng);
        if (inverse(M)) return M;
    }
}

Mat random_filtered_invertible(const RingPtr& R, const std::vector<int>& w, Rng& rng) {
    const int n = static_cast<int>(w.size());
    for (;;) {
        Mat M(R, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (w[j] >= w[i]) M(i, j) = random_elt(*R, rng);
        if (inverse(M)) return M;
    }
}

Cx change_basis(const Cx& E, const std::map<int, Mat>& P) {
    std::map<int, Mat> Pinv;
    for (const auto& [n, m] : P) Pinv[n] = *inverse(m);
    Cx F = free_complex(E.R, E.lo, E.hi(), [&](int n) { return E.rank(n); }, [&](int n) {
        return mul(mul(P.at(n), E.diff(n)), Pinv.at(n - 1));
    });
    F.wt = E.wt;
    return F;
}

Cx random_complex(const RingPtr& R, const RandomCxOptions& opt, Rng& rng) {
    const int lo = opt.lo, hi = opt.hi, len = hi - lo + 1;
    const bool torsion = R->k() == 2 && opt.torsion_pieces && !opt.acyclic;
    std::vector<int> used(len, 0);
    struct Piece {
        int deg;  // top degree; for free pieces the only degree
        bool pair;
        Elt coef;
    };
    std::vector<Piece> pieces;
    for (int n = hi; n >= lo; --n) {
        int i = n - lo;
        if (n > lo) {
            int room = std::min(opt.max_rank - used[i], opt.max_rank - used[i - 1]);
            int cnt = room > 0 ? uniform(rng, 0, room) : 0;
            for (int c = 0; c < cnt; ++c) {
                Elt coef = (torsion && rng() % 3 == 0) ? R->p_pow(1) : 1;
                pieces.push_back({n, true, coef});
                used[i]++;
                used[i - 1]++;
            }
        }
        if (!opt.acyclic) {
            int room = opt.max_rank - used[i];
            int cnt = room > 0 ? uniform(rng, 0, room) : 0;
            for (int c = 0; c < cnt; ++c) pieces.push_back({n, false, 0});
            used[i] += cnt;
        }
    }
    std::vector<std::vector<int>> slot(len), wts(len);
    std::vector<std::vector<std::pair<int, int>>> edges(len);  // (row in n, col in n-1)
    std::vector<std::vector<Elt>> coefs(len);
    std::vector<int> fillc(len, 0);
    for (const auto& pc : pieces) {
        int i = pc.deg - lo;
        int wa = opt.weighted ? uniform(rng, opt.wlo, opt.whi) : 0;
        int a = fillc[i]++;
        wts[i].push_back(wa);
        if (pc.pair) {
            int wb = opt.weighted ? uniform(rng, wa, opt.whi) : 0;
            int b = fillc[i - 1]++;
            wts[i - 1].push_back(wb);
            edges[i].push_back({a, b});
            coefs[i].push_back(pc.coef);
        }
    }
    Cx E = free_complex(R, lo, hi, [&](int n) { return fillc[n - lo]; }, [&](int n) {
        int i = n - lo;
        Mat m(R, fillc[i], fillc[i - 1]);
        for (size_t t = 0; t < edges[i].size(); ++t) m(edges[i][t].first, edges[i][t].second) = coefs[i][t];
        return m;
    });
    // weights were pushed in allocation order, which matches slot indices
    if (opt.weighted) E.wt = wts;
    std::map<int, Mat> P;
    for (int n = lo; n <= hi; ++n)
        P[n] = opt.weighted ? random_filtered_invertible(R, E.weights(n), rng) : random_invertible(R, E.rank(n), rng);
    return change_basis(E, P);
}

}  // namespace cyc

namespace cyc {

CMap random_homotopic(const Cx& V, const Cx& W, const CMap& base, Rng& rng) {
    const RingPtr& R = V.R;
    std::map<int, Mat> h;
    for (int n = V.lo - 1; n <= V.hi() + 1; ++n) h[n] = random_matrix(R, V.rank(n), W.rank(n + 1), rng);
    CMap f;
    for (int n = V.lo; n <= V.hi(); ++n) {
        Mat m = base.at(n, V, W);
        if (V.rank(n - 1)) m = add(m, mul(V.diff(n), h[n - 1]));
        if (W.rank(n + 1)) m = add(m, mul(h[n], W.diff(n + 1)));
        f.f[n] = m;
    }
    return f;
}

Vec random_in(const Span& S, Rng& rng) {
    if (!S.size()) return Vec(S.n(), 0);
    return vec_mul(random_vec(S.rows.R, S.size(), rng), S.rows);
}

}  // namespace cyc
