#pragma once

#include "cyc/tate.hpp"

namespace cyc {

// V (x) W with the Koszul differential; basis by degree, then pairs
// (v, w) in lexicographic order of global indices
struct TensorCx {
    Cx cx;
    std::vector<std::vector<int>> idx;  // [global v][global w] -> global index
    std::vector<int> vdeg, wdeg;
};
TensorCx tensor_complex(const Cx& V, const Cx& W);
// x (x) y for x in V_i, y in W_j, as a vector in degree i + j
Vec tensor_elt(const TensorCx& T, const Cx& V, const Cx& W, int i, const Vec& x, int j, const Vec& y);

using Sparse = std::map<TRef, Elt>;

// cup product of Tate chains: x in degree t of the Tate complex of
// V^{(x)p} and y in degree s of that of W^{(x)p}, landing in the Tate
// complex of (V (x) W)^{(x)p}
struct CupData {
    const EqCx* E;
    const EqCx* F;
    const EqCx* G;
    const TensorCx* T;
};
Sparse cup(const CupData& D, int t, const TRefs& rx, const Vec& x, int s, const TRefs& ry, const Vec& y);
Vec to_vec(const RingPtr& R, const Sparse& v, const TRefs& refs);

}  // namespace cyc
