#include "cyc/lift.hpp"

namespace cyc {

namespace {

Cx sub_of(const Cx& E, const std::function<Span(int)>& U, const std::function<Span(int)>& W) {
    std::vector<Span> us, ws;
    for (int n = E.lo; n <= E.hi(); ++n) {
        us.push_back(U(n));
        ws.push_back(W(n));
    }
    return with_sub(E, us, ws);
}

Elt sign(const RingPtr& R, int n) { return (n % 2 + 2) % 2 ? R->neg(1) : Elt(1); }

Vec coords_in(const Compressed& X, int n, const Vec& v) { return X.basis.at(n).coords(v); }

}  // namespace

CMap scalar_map(const Cx& S, Elt s) {
    CMap f;
    for (int n = S.lo; n <= S.hi(); ++n) f.f[n] = scale(Mat::identity(S.R, S.rank(n)), s);
    return f;
}

Lifted lifted(const Cx& V, const TensorOptions& opt) {
    if (V.R->k() != 2) throw usage_error("lifted objects need a k = 2 ring");
    Lifted L;
    L.V = V;
    L.E = std::make_shared<const EqCx>(tensor_power(V, V.R->p(), opt));
    L.band = tate_trunc(L.E, 0, 1);
    L.bandp = tate_trunc(L.E, 0, 1, true);
    L.C = L.band.cx;
    L.Cp = L.bandp.cx;
    L.B1p = ftruncate(L.Cp, 1, 1);
    L.Ap = ftruncate(L.Cp, 0, 0);
    const Elt p = static_cast<Elt>(V.R->p());
    L.Crbar = sub_of(L.Cp, [&](int n) { return L.Ap.Wat(n); }, [&](int n) { return L.Cp.Wat(n); });
    L.Clbar = sub_of(L.Cp, [&](int n) { return L.Cp.Uat(n); }, [&](int n) { return L.B1p.Uat(n); });
    L.Cl = sub_of(
        L.C, [&](int n) { return L.C.Uat(n); }, [&](int n) { return span_sum(L.C.Wat(n), scaled(L.Crbar.Uat(n), p)); });
    L.Cr = sub_of(
        L.C, [&](int n) { return span_intersect(L.C.Uat(n), L.B1p.Uat(n)); }, [&](int n) { return L.C.Wat(n); });
    return L;
}

LiftSeqReport check_lift_sequences(const Lifted& L) {
    LiftSeqReport out;
    const Elt p = static_cast<Elt>(L.V.R->p());
    const CMap id = identity_map(L.C);
    out.p2_exact = is_exact_seq(L.Cp, L.C, L.Cp, scalar_map(L.Cp, p), id);
    TateBand b0 = tate_trunc(L.E, 0, 0), b0p = tate_trunc(L.E, 0, 0, true);
    TateBand b1 = tate_trunc(L.E, 1, 1), b1p = tate_trunc(L.E, 1, 1, true);
    out.q0_iso = is_chain_map(b0.cx, b0p.cx, identity_map(b0.cx)) && is_iso(b0.cx, b0p.cx, identity_map(b0.cx));
    out.q1_zero = is_chain_map(b1.cx, b1p.cx, identity_map(b1.cx)) && is_zero_map(b1.cx, b1p.cx, identity_map(b1.cx));
    out.left_seq = is_exact_seq(L.Crbar, L.C, L.Cl, scalar_map(L.Crbar, p), id);
    out.right_seq = is_exact_seq(L.Cr, L.C, L.Clbar, id, id);
    return out;
}

DGSplittings dg_splittings(const Lifted& L) {
    DGSplittings S;
    const RingPtr& R = L.C.R;
    const Elt p = static_cast<Elt>(R->p());
    S.cB1 = compress(L.B1p);
    S.cA = compress(L.Ap);
    S.cCp = compress(L.Cp);
    S.cCl = compress(L.Cl);
    S.cCr = compress(L.Cr);
    S.B = shift(S.cB1.cx, -1);
    S.coneB = cone(S.B, S.B, identity_map(S.B));
    S.coneA = cone(S.cA.cx, S.cA.cx, identity_map(S.cA.cx));
    S.b = compress_map(S.cB1, S.cCp, L.B1p, identity_map(L.B1p));
    S.a = compress_map(S.cCp, S.cA, L.Cp, identity_map(L.Cp));
    S.l = compress_map(S.cCl, S.cCp, L.Cl, identity_map(L.Cl));
    S.r = compress_map(S.cCp, S.cCr, L.Cp, scalar_map(L.Cp, p));
    S.alpha = cone_out(S.B, S.B);
    S.beta = cone_in(S.cA.cx, S.cA.cx);

    // lifts of the generators of tau_[1,1] C(V/p) into C(V)
    std::map<int, Mat> X;
    for (const auto& [n, bs] : S.cB1.basis) {
        const Span& U = L.C.Uat(n);
        Mat x(R, 0, L.C.rank(n));
        for (int i = 0; i < bs.rank(); ++i) {
            auto z = solve(U.rows, bs.gens.row_vec(i), L.Cp.Wat(n));
            if (!z) throw std::logic_error("q is not onto");
            x.append_row(vec_mul(*z, U.rows));
        }
        X[n] = x;
    }
    auto lift = [&](int n) { return X.count(n) ? X.at(n) : Mat(R, 0, L.C.rank(n)); };
    for (int n = S.coneB.lo; n <= S.coneB.hi(); ++n) {
        const int tn = S.B.rank(n), sn = S.B.rank(n - 1);
        if (!tn && !sn) continue;
        const int rc = S.cCl.cx.rank(n);
        Mat m(R, tn + sn, rc);
        if (tn) {
            Mat up = lift(n + 1), here = lift(n);
            Mat dx = mul(up, L.C.diff(n + 1));
            Mat dy = S.cB1.cx.diff(n + 1);
            Mat v = scale(sub(dx, here.r ? mul(dy, here) : Mat(R, tn, L.C.rank(n))), sign(R, n));
            for (int i = 0; i < tn; ++i) {
                Vec c = coords_in(S.cCl, n, v.row_vec(i));
                std::copy(c.begin(), c.end(), m.row(i));
            }
        }
        Mat x = lift(n);
        for (int i = 0; i < sn; ++i) {
            Vec c = coords_in(S.cCl, n, x.row_vec(i));
            std::copy(c.begin(), c.end(), m.row(tn + i));
        }
        S.bl.f[n] = m;
    }

    // a^r: the weight -n part of x is divisible by p; its quotient lands in A
    auto top = [&](int n, const Vec& x) {
        const auto w = L.C.weights(n);
        Vec u(x.size(), 0);
        for (size_t i = 0; i < x.size(); ++i)
            if (w[i] == -n) u[i] = R->div_p(x[i], 1);
        if (!S.cA.basis.count(n)) return Vec();
        return coords_in(S.cA, n, u);
    };
    for (const auto& [n, bs] : S.cCr.basis) {
        if (!bs.rank()) continue;
        const int an = S.cA.cx.rank(n), am = S.cA.cx.rank(n - 1);
        Mat m(R, bs.rank(), an + am);
        for (int i = 0; i < bs.rank(); ++i) {
            Vec x = bs.gens.row_vec(i);
            Vec t = top(n, x);
            std::copy(t.begin(), t.end(), m.row(i));
            if (!am) continue;
            Vec dt = top(n - 1, vec_mul(x, L.C.diff(n)));
            Vec s = vec_sub(*R, dt, an ? vec_mul(t, S.cA.cx.diff(n)) : Vec(am, 0));
            s = vec_scale(*R, s, sign(R, n - 1));
            std::copy(s.begin(), s.end(), m.row(i) + an);
        }
        S.ar.f[n] = m;
    }
    return S;
}

SplitReport check_left(const DGSplittings& S) {
    SplitReport out;
    const Cx &K = S.coneB, &Cl = S.cCl.cx, &Cp = S.cCp.cx, &B1 = S.cB1.cx, &A = S.cA.cx;
    out.chain = is_chain_map(K, Cl, S.bl);
    if (!out.chain) return out;
    out.square = maps_equal(K, Cp, compose(K, Cl, Cp, S.bl, S.l), compose(K, B1, Cp, S.alpha, S.b));
    const CMap al = compose(Cl, Cp, A, S.l, S.a);
    out.quasiexact = is_quasiexact(K, Cl, A, S.bl, al);
    out.quasi_iso = is_quasi_iso(Cl, A, al);
    // Cone(B) -> Cl x_C B[1]
    Cx P = direct_sum(Cl, B1);
    std::vector<Span> U, W;
    for (int n = P.lo; n <= P.hi(); ++n) {
        Mat g = vcat(S.l.at(n, Cl, Cp), neg(S.b.at(n, B1, Cp)));
        U.push_back(preimage_in(P.Uat(n), g, Cp.Wat(n)));
        W.push_back(P.Wat(n));
    }
    P = with_sub(P, U, W);
    CMap h;
    for (int n = K.lo; n <= K.hi(); ++n) h.f[n] = hcat(S.bl.at(n, K, Cl), S.alpha.at(n, K, B1));
    out.strict = is_chain_map(K, P, h) && is_iso(K, P, h);
    return out;
}

SplitReport check_right(const DGSplittings& S) {
    SplitReport out;
    const Cx &Cr = S.cCr.cx, &KA = S.coneA, &Cp = S.cCp.cx, &B1 = S.cB1.cx, &A = S.cA.cx;
    out.chain = is_chain_map(Cr, KA, S.ar);
    if (!out.chain) return out;
    out.square = maps_equal(Cp, KA, compose(Cp, Cr, KA, S.r, S.ar), compose(Cp, A, KA, S.a, S.beta));
    const CMap rb = compose(B1, Cp, Cr, S.b, S.r);
    out.quasiexact = is_quasiexact(B1, Cr, KA, rb, S.ar);
    out.quasi_iso = is_quasi_iso(B1, Cr, rb);
    // Cr +_C A -> Cone(A)
    Cx Q = direct_sum(Cr, A);
    std::vector<Span> U, W;
    for (int n = Q.lo; n <= Q.hi(); ++n) {
        Mat g = hcat(S.r.at(n, Cp, Cr), neg(S.a.at(n, Cp, A)));
        W.push_back(span_sum(Q.Wat(n), span_image(Cp.Uat(n), g)));
        U.push_back(Q.Uat(n));
    }
    Q = with_sub(Q, U, W);
    CMap h;
    for (int n = Q.lo; n <= Q.hi(); ++n) h.f[n] = vcat(S.ar.at(n, Cr, KA), S.beta.at(n, A, KA));
    out.strict = is_chain_map(Q, KA, h) && is_iso(Q, KA, h);
    return out;
}

bool check_lr(const DGSplittings& S) {
    Cx Clr = cone(S.cCl.cx, S.cCp.cx, S.l);
    return homology(Clr) == homology(S.cCr.cx);
}

CMap lifted_map(const Lifted& S, const Lifted& T, const CMap& f) {
    CMap F = tensor_power_map(*S.E, *T.E, S.V, T.V, f);
    return tate_band_map(S.band, T.band, F);
}

}  // namespace cyc

namespace cyc {

CMap classifying_map(const Cx& V, const Vec& v) {
    const RingPtr& R = V.R;
    CMap f;
    Mat a(R, 1, V.rank(0));
    std::copy(v.begin(), v.end(), a.row(0));
    f.f[0] = a;
    Mat b(R, 1, V.rank(-1));
    if (V.rank(-1)) {
        Vec dv = vec_mul(v, V.diff(0));
        std::copy(dv.begin(), dv.end(), b.row(0));
    }
    f.f[-1] = b;
    return f;
}

Section make_section(const RingPtr& R, const TensorOptions& opt) {
    Section S;
    Cx one = one_term(R, 0);
    S.K = shift(cone(one, one, identity_map(one)), -1);
    S.LK = lifted(S.K, opt);
    Lifted L0 = lifted(one, opt), L1 = lifted(one_term(R, -1), opt);
    CMap alpha, beta;
    alpha.f[0] = Mat::identity(R, 1);
    beta.f[-1] = Mat::identity(R, 1);
    const Mat A = lifted_map(S.LK, L0, alpha).f.at(0);
    const Mat B = lifted_map(L1, S.LK, beta).f.at(-1);
    const Mat U0 = S.LK.Cl.Uat(0).rows, U1 = L1.Cl.Uat(-1).rows;
    const Mat D = S.LK.C.diff(0);
    const int c0 = A.c, c1 = D.c;
    Mat top = hcat(mul(U0, A), mul(U0, D));
    Mat bot = hcat(Mat(R, U1.r, c0), neg(mul(U1, B)));
    Vec rhs(c0 + c1, 0);
    rhs[L0.band.index(0, {0, 0})] = 1;
    auto z = solve(vcat(top, bot), rhs, direct_sum(L0.Cl.Wat(0), S.LK.Cl.Wat(-1)));
    if (!z) throw std::logic_error("no s_0");
    Vec z0(z->begin(), z->begin() + U0.r);
    S.s0 = vec_mul(z0, U0);
    return S;
}

Vec stilde(const Section& S, const Lifted& L, const Vec& v) {
    CMap F = lifted_map(S.LK, L, classifying_map(L.V, v));
    return vec_mul(S.s0, F.at(0, S.LK.C, L.C));
}

Vec power_class(const Lifted& L, const Vec& v) {
    std::vector<std::pair<int, Vec>> xs(L.E->p, {0, v});
    auto [deg, t] = pure_tensor(*L.E, xs);
    Vec out(L.C.rank(0), 0);
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i]) out[L.band.index(0, {deg, static_cast<int>(i)})] = t[i];
    return out;
}

Vec vnsh_sum(const Lifted& L, const Vec& v, const Vec& w) {
    const EqCx& E = *L.E;
    const RingPtr& R = L.C.R;
    const int p = E.p;
    Vec acc(E.cx.rank(0), 0);
    const Mat tr = trace(E, 0);
    for (int mask = 1; mask < (1 << p) - 1; ++mask) {
        // kappa: the lexicographically least rotation stands for its class
        bool least = true;
        for (int r = 1; r < p; ++r) {
            int rot = ((mask << r) | (mask >> (p - r))) & ((1 << p) - 1);
            if (rot < mask) least = false;
        }
        if (!least) continue;
        std::vector<std::pair<int, Vec>> xs;
        int ones = 0;
        for (int k = 0; k < p; ++k) {
            const bool isw = (mask >> (p - 1 - k)) & 1;
            ones += isw;
            xs.push_back({0, isw ? w : v});
        }
        Vec t = vec_mul(pure_tensor(E, xs).second, tr);
        axpy(*R, acc.data(), t.data(), R->p_pow(std::min(ones, R->k())), static_cast<int>(acc.size()));
    }
    Vec out(L.C.rank(0), 0);
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i]) out[L.band.index(0, {0, static_cast<int>(i)})] = acc[i];
    return out;
}

bool same_in_cl(const Lifted& L, int n, const Vec& x, const Vec& y) { return L.Cl.Wat(n).contains(vec_sub(*L.C.R, x, y)); }

}  // namespace cyc
