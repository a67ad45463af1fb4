#include "cyc/dgdiff.hpp"

#include <climits>

namespace cyc {

namespace {

struct Block {
    int i, j;
    Mat m;
};

Mat blocks(const RingPtr& R, const std::vector<int>& rs, const std::vector<int>& cs, const std::vector<Block>& bs) {
    std::vector<int> ro(rs.size() + 1, 0), co(cs.size() + 1, 0);
    for (size_t k = 0; k < rs.size(); ++k) ro[k + 1] = ro[k] + rs[k];
    for (size_t k = 0; k < cs.size(); ++k) co[k + 1] = co[k] + cs[k];
    Mat M(R, ro.back(), co.back());
    for (const auto& b : bs)
        for (int r = 0; r < b.m.r; ++r)
            for (int c = 0; c < b.m.c; ++c) M(ro[b.i] + r, co[b.j] + c) = b.m(r, c);
    return M;
}

int lo_of(std::initializer_list<const Cx*> xs) {
    int lo = INT_MAX;
    for (auto x : xs)
        if (!x->rk.empty()) lo = std::min(lo, x->lo);
    return lo == INT_MAX ? 0 : lo;
}

int hi_of(std::initializer_list<const Cx*> xs) {
    int hi = INT_MIN;
    for (auto x : xs)
        if (!x->rk.empty()) hi = std::max(hi, x->hi());
    return hi == INT_MIN ? -1 : hi;
}

Cx two_term(const Cx& X1, const Cx& X0, const Mat& d) {
    const RingPtr& R = X0.R;
    Cx C = free_complex(R, 0, {X0.rank(0), X1.rank(0)}, {Mat(R, X0.rank(0), 0), d});
    C.U = {X0.Uat(0), X1.Uat(0)};
    C.W = {X0.Wat(0), X1.Wat(0)};
    return C;
}

struct SubParts {
    Cx raw;
    CMap in, out;
};

SubParts sub_parts(const DGElem& X, const LeftSpl& S, const DGExt& E) {
    SubParts P;
    const RingPtr& R = X.C.R;
    const Cx K = cone_of(X.B);
    const CMap beta = cone_in(X.B, X.B);
    P.raw = direct_sum(S.Cl, E.E);
    const int lo = lo_of({&P.raw, &X.B, &X.A}) - 1, hi = hi_of({&P.raw, &X.B, &X.A}) + 1;
    for (int n = lo; n <= hi; ++n) {
        const int rb = X.B.rank(n), rl = S.Cl.rank(n), re = E.E.rank(n), ra = X.A.rank(n);
        Mat bbl = mul(beta.at(n, X.B, K), S.bl.at(n, K, S.Cl));
        P.in.f[n] = blocks(R, {rb}, {rl, re}, {{0, 0, bbl}, {0, 1, E.b.at(n, X.B, E.E)}});
        Mat la = mul(S.l.at(n, S.Cl, X.C), X.a.at(n, X.C, X.A));
        P.out.f[n] = blocks(R, {rl, re}, {ra}, {{0, 0, la}, {1, 0, neg(E.a.at(n, E.E, X.A))}});
    }
    return P;
}

struct DiffParts {
    Cx Cb, KA, K;
    CMap in, out;
    CMap b, a;
};

DiffParts diff_parts(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2) {
    DiffParts P;
    const RingPtr& R = X.C.R;
    Cx Xs = direct_sum(S1.Cl, S2.Cl);
    CMap f;
    const int lo = lo_of({&Xs, &X.C, &X.A, &X.B}) - 2, hi = hi_of({&Xs, &X.C, &X.A, &X.B}) + 2;
    for (int n = lo; n <= hi; ++n)
        f.f[n] = blocks(R, {S1.Cl.rank(n), S2.Cl.rank(n)}, {X.C.rank(n)},
                        {{0, 0, S1.l.at(n, S1.Cl, X.C)}, {1, 0, neg(S2.l.at(n, S2.Cl, X.C))}});
    P.Cb = shift(cone(Xs, X.C, f), -1);
    P.KA = shift(cone(X.A, X.A, identity_map(X.A)), -1);
    P.K = cone_of(X.B);
    const Cx B1 = shift(X.B, 1);
    for (int n = lo; n <= hi; ++n) {
        const int c1 = X.C.rank(n + 1), r1 = S1.Cl.rank(n), r2 = S2.Cl.rank(n);
        const int a1 = X.A.rank(n + 1), a0 = X.A.rank(n);
        P.in.f[n] = blocks(R, {P.K.rank(n)}, {c1, r1, r2},
                           {{0, 1, S1.bl.at(n, P.K, S1.Cl)}, {0, 2, S2.bl.at(n, P.K, S2.Cl)}});
        Mat la1 = mul(S1.l.at(n, S1.Cl, X.C), X.a.at(n, X.C, X.A));
        Mat la2 = mul(S2.l.at(n, S2.Cl, X.C), X.a.at(n, X.C, X.A));
        P.out.f[n] = blocks(R, {c1, r1, r2}, {a1, a0},
                            {{0, 0, X.a.at(n + 1, X.C, X.A)}, {1, 1, la1}, {2, 1, neg(la2)}});
        P.b.f[n] = blocks(R, {X.B.rank(n)}, {c1, r1, r2}, {{0, 0, X.b.at(n + 1, B1, X.C)}});
        P.a.f[n] = blocks(R, {c1, r1, r2}, {a0}, {{1, 0, la1}});
    }
    return P;
}

}  // namespace

Cx cone_of(const Cx& B) { return cone(B, B, identity_map(B)); }

bool is_dg_elementary(const DGElem& X) {
    const Cx B1 = shift(X.B, 1);
    return is_chain_map(B1, X.C, X.b) && is_chain_map(X.C, X.A, X.a) && is_quasiexact(B1, X.C, X.A, X.b, X.a);
}

bool is_left_splitting(const DGElem& X, const LeftSpl& S) {
    const Cx K = cone_of(X.B), B1 = shift(X.B, 1);
    if (!is_chain_map(S.Cl, X.C, S.l) || !is_chain_map(K, S.Cl, S.bl)) return false;
    if (!maps_equal(K, X.C, compose(K, S.Cl, X.C, S.bl, S.l), compose(K, B1, X.C, cone_out(X.B, X.B), X.b))) return false;
    return is_quasiexact(K, S.Cl, X.A, S.bl, compose(S.Cl, X.C, X.A, S.l, X.a));
}

bool is_strict_left(const DGElem& X, const LeftSpl& S) {
    const Cx K = cone_of(X.B), B1 = shift(X.B, 1);
    const CMap alpha = cone_out(X.B, X.B);
    Cx P = direct_sum(S.Cl, B1);
    std::vector<Span> U, W;
    for (int n = P.lo; n <= P.hi(); ++n) {
        Mat g = vcat(S.l.at(n, S.Cl, X.C), neg(X.b.at(n, B1, X.C)));
        U.push_back(preimage_in(P.Uat(n), g, X.C.Wat(n)));
        W.push_back(P.Wat(n));
    }
    P = with_sub(P, U, W);
    CMap h;
    for (int n = K.lo; n <= K.hi(); ++n) h.f[n] = hcat(S.bl.at(n, K, S.Cl), alpha.at(n, K, B1));
    return is_chain_map(K, P, h) && is_iso(K, P, h);
}

bool is_dg_extension(const DGElem& X, const DGExt& E) {
    return is_chain_map(X.B, E.E, E.b) && is_chain_map(E.E, X.A, E.a) && is_quasiexact(X.B, E.E, X.A, E.b, E.a);
}

LeftSpl dg_sub(const DGElem& X, const LeftSpl& S, const DGExt& E) {
    SubParts P = sub_parts(X, S, E);
    const RingPtr& R = X.C.R;
    const Cx K = cone_of(X.B);
    LeftSpl out;
    out.Cl = middle(X.B, P.raw, X.A, P.in, P.out);
    for (int n = P.raw.lo; n <= P.raw.hi(); ++n) {
        out.l.f[n] = blocks(R, {S.Cl.rank(n), E.E.rank(n)}, {X.C.rank(n)}, {{0, 0, S.l.at(n, S.Cl, X.C)}});
        out.bl.f[n] = blocks(R, {K.rank(n)}, {S.Cl.rank(n), E.E.rank(n)}, {{0, 0, S.bl.at(n, K, S.Cl)}});
    }
    return out;
}

DGExt dg_diff(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2) {
    DiffParts P = diff_parts(X, S1, S2);
    DGExt out;
    out.E = middle(P.K, P.Cb, P.KA, P.in, P.out);
    out.b = P.b;
    out.a = P.a;
    return out;
}

StrictDiff strict_diff(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2) {
    const RingPtr& R = X.C.R;
    const Cx K = cone_of(X.B);
    Cx Xs = direct_sum(S1.Cl, S2.Cl);
    CMap in, out;
    for (int n = Xs.lo - 1; n <= Xs.hi() + 1; ++n) {
        in.f[n] = hcat(S1.bl.at(n, K, S1.Cl), S2.bl.at(n, K, S2.Cl));
        out.f[n] = vcat(S1.l.at(n, S1.Cl, X.C), neg(S2.l.at(n, S2.Cl, X.C)));
    }
    StrictDiff D;
    D.K = middle(K, Xs, X.C, in, out);
    for (int n = Xs.lo; n <= Xs.hi(); ++n) {
        const int r = Xs.rank(n);
        D.to_diff.f[n] = blocks(R, {r}, {X.C.rank(n + 1), r}, {{0, 1, Mat::identity(R, r)}});
    }
    return D;
}

DGExt trivial_dg_extension(const DGElem& X) {
    const RingPtr& R = X.C.R;
    DGExt E;
    E.E = direct_sum(X.B, X.A);
    for (int n = E.E.lo; n <= E.E.hi(); ++n) {
        const int rb = X.B.rank(n), ra = X.A.rank(n);
        E.b.f[n] = blocks(R, {rb}, {rb, ra}, {{0, 0, Mat::identity(R, rb)}});
        E.a.f[n] = blocks(R, {rb, ra}, {ra}, {{1, 0, Mat::identity(R, ra)}});
    }
    return E;
}

std::pair<DGElem, LeftSpl> dg_from_module(const ElemExt& M, const ModSplit& S) {
    const RingPtr& R = M.C0.R;
    DGElem X;
    X.B = M.B;
    X.A = M.A;
    X.C = two_term(M.C1, M.C0, map0(M.d, M.C1, M.C0));
    X.b.f[1] = map0(M.b, M.B, M.C1);
    X.a.f[0] = map0(M.a, M.C0, M.A);
    LeftSpl L;
    const Mat c1 = map0(S.c1, M.C1, S.C01), c0 = map0(S.c0, S.C01, M.C0), b = map0(M.b, M.B, M.C1);
    L.Cl = two_term(M.C1, S.C01, c1);
    L.l.f[1] = Mat::identity(R, M.C1.rank(0));
    L.l.f[0] = c0;
    L.bl.f[1] = b;
    L.bl.f[0] = mul(b, c1);
    return {X, L};
}

DGExt dg_ext_from_module(const ElemExt& M, const ModExt& E) {
    DGExt D;
    D.E = E.E;
    D.b = E.b;
    D.a = E.a;
    (void)M;
    return D;
}

DGDiffReport check_dg_differences(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2, const DGExt& E) {
    DGDiffReport rep;
    const RingPtr& R = X.C.R;
    LeftSpl Sx = dg_sub(X, S1, E);
    rep.sub_is_splitting = is_left_splitting(X, Sx);
    DGExt D = dg_diff(X, S1, S2);
    rep.diff_is_extension = is_dg_extension(X, D);
    StrictDiff SD = strict_diff(X, S1, S2);
    rep.strict_map_chain = is_chain_map(SD.K, D.E, SD.to_diff);
    rep.self_diff_split = homology(dg_diff(X, S1, S1).E) == homology(direct_sum(X.B, X.A));

    // E <- E x_A Cl -> Cl - (Cl - E)
    {
        DGExt M = dg_diff(X, S1, Sx);
        Cx P = direct_sum(E.E, S1.Cl);
        std::vector<Span> U, W;
        for (int n = P.lo; n <= P.hi(); ++n) {
            Mat la = mul(S1.l.at(n, S1.Cl, X.C), X.a.at(n, X.C, X.A));
            Mat g = vcat(E.a.at(n, E.E, X.A), neg(la));
            U.push_back(preimage_in(P.Uat(n), g, X.A.Wat(n)));
            W.push_back(P.Wat(n));
        }
        P = with_sub(P, U, W);
        CMap pE, pM;
        for (int n = P.lo; n <= P.hi(); ++n) {
            const int re = E.E.rank(n), rl = S1.Cl.rank(n);
            pE.f[n] = blocks(R, {re, rl}, {re}, {{0, 0, Mat::identity(R, re)}});
            pM.f[n] = blocks(R, {re, rl}, {X.C.rank(n + 1), rl, rl, re},
                             {{0, 3, Mat::identity(R, re)}, {1, 1, Mat::identity(R, rl)}, {1, 2, Mat::identity(R, rl)}});
        }
        rep.ext_roof = is_chain_map(P, E.E, pE) && is_chain_map(P, M.E, pM) && is_quasi_iso(P, E.E, pE) &&
                       is_quasi_iso(P, M.E, pM);
    }

    // Cl <- R -> S2 - (S2 - Cl): R is the target before dividing out Cone(B)
    {
        DGExt M2 = dg_diff(X, S2, S1);
        LeftSpl T = dg_sub(X, S2, M2);
        DiffParts dp = diff_parts(X, S2, S1);
        SubParts sp = sub_parts(X, S2, M2);
        std::vector<Span> U, W;
        for (int n = T.Cl.lo; n <= T.Cl.hi(); ++n) {
            Span w = direct_sum(S2.Cl.Wat(n), dp.Cb.Wat(n));
            if (X.B.rank(n)) w = span_sum(w, span_image(X.B.Uat(n), sp.in.at(n, X.B, T.Cl)));
            W.push_back(w);
            U.push_back(T.Cl.Uat(n));
        }
        Cx Rx = with_sub(T.Cl, U, W);
        CMap pT = identity_map(Rx), pC;
        for (int n = Rx.lo; n <= Rx.hi(); ++n) {
            const int rt = S2.Cl.rank(n), rl = S1.Cl.rank(n);
            pC.f[n] = blocks(R, {rt, X.C.rank(n + 1), rt, rl}, {rl}, {{3, 0, Mat::identity(R, rl)}});
        }
        rep.split_roof = is_valid(Rx) && is_chain_map(Rx, S1.Cl, pC) && is_chain_map(Rx, T.Cl, pT) &&
                         is_quasi_iso(Rx, S1.Cl, pC) && is_quasi_iso(Rx, T.Cl, pT);
    }
    return rep;
}

}  // namespace cyc
