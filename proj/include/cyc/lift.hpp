#pragma once

#include "cyc/tate.hpp"

namespace cyc {

// Objects of the mod p^2 layer for a free complex V over a k = 2 ring.
// Everything is a subquotient of the ambient of the [0,1] band of the
// Tate complex of V^{(x)p}.
struct Lifted {
    Cx V;
    std::shared_ptr<const EqCx> E;
    TateBand band, bandp;
    Cx C;      // C(V)
    Cx Cp;     // C(V/p)
    Cx B1p;    // tau_[1,1] C(V/p)
    Cx Ap;     // tau_[0,0] C(V/p)
    Cx Crbar;  // ker(C(V/p) -> Ap)
    Cx Clbar;  // C(V/p) / B1p
    Cx Cl;     // C(V) / p Crbar
    Cx Cr;     // ker(C(V) -> Clbar)
};

Lifted lifted(const Cx& V, const TensorOptions& opt = {});
// multiplication by s on a shared ambient
CMap scalar_map(const Cx& S, Elt s);

struct LiftSeqReport {
    bool p2_exact = false;
    bool q0_iso = false;
    bool q1_zero = false;
    bool left_seq = false;   // 0 -> Crbar -p-> C -> Cl -> 0
    bool right_seq = false;  // 0 -> Cr -> C -> Clbar -> 0
};
LiftSeqReport check_lift_sequences(const Lifted& L);

// The left and right DG splittings of C(V/p), on compressed presentations.
struct DGSplittings {
    Compressed cB1, cA, cCp, cCl, cCr;
    Cx B, coneB, coneA;
    CMap b, a;      // cB1 -> cCp -> cA
    CMap l, bl;     // cCl -> cCp, coneB -> cCl
    CMap alpha;     // coneB -> cB1
    CMap r, ar;     // cCp -> cCr, cCr -> coneA
    CMap beta;      // cA -> coneA
};
DGSplittings dg_splittings(const Lifted& L);

struct SplitReport {
    bool chain = false;
    bool square = false;
    bool quasiexact = false;
    bool strict = false;
    bool quasi_iso = false;  // a l resp. r b
};
SplitReport check_left(const DGSplittings& S);
SplitReport check_right(const DGSplittings& S);
// homology of Cone(l) against that of Cr
bool check_lr(const DGSplittings& S);

// C^l(f) and C^r(f) as ambient maps, for f : V -> W over the k = 2 ring
CMap lifted_map(const Lifted& S, const Lifted& T, const CMap& f);

}  // namespace cyc

namespace cyc {

// s~ : V_0 -> C^l_0(V), from the element s_0 over K = Cone(R)[-1]
struct Section {
    Cx K;
    Lifted LK;
    Vec s0;  // band ambient of C^l_0(K)
};
Section make_section(const RingPtr& R, const TensorOptions& opt = {});
// classifying map K -> V of v in V_0
CMap classifying_map(const Cx& V, const Vec& v);
Vec stilde(const Section& S, const Lifted& L, const Vec& v);
// v^{(x)p} in column 0 of the band, v in V_0
Vec power_class(const Lifted& L, const Vec& v);
// sum_{i>=1} p^i sum over rotation classes of tr(mu_kappa(v, w)), in the band
Vec vnsh_sum(const Lifted& L, const Vec& v, const Vec& w);
// class equality in C^l_n(V)
bool same_in_cl(const Lifted& L, int n, const Vec& x, const Vec& y);

}  // namespace cyc
