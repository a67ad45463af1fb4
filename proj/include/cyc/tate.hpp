#pragma once

#include <memory>

#include "cyc/tensor.hpp"

namespace cyc {

// basis element of the Tate total complex in degree t: copy of E_j basis
// vector idx, sitting in column t - j
struct TRef {
    int j, idx;
    bool operator<(const TRef& o) const { return j != o.j ? j < o.j : idx < o.idx; }
    bool operator==(const TRef& o) const { return j == o.j && idx == o.idx; }
};
using TRefs = std::vector<TRef>;

int tate_weight(int j, int p);
// basis refs of degree t with weight in [w0, w1]
TRefs tate_refs(const EqCx& E, int t, int w0, int w1);
// total differential from refs of degree t to refs of degree t-1
Mat tate_diff(const EqCx& E, int t, const TRefs& src, const TRefs& tgt);

// filtered truncation tau^F_{[n,m]} of the Tate complex of E, on the
// finite band of basis vectors with weight in [n-t, m-t].  With modp the
// result is computed for E/p (E over a k = 2 ring).
struct TateBand {
    Cx cx;
    int n = 0, m = 0;
    bool modp = false;
    std::map<int, TRefs> refs;
    std::shared_ptr<const EqCx> E;
    int index(int t, const TRef& r) const;
};

TateBand tate_trunc(std::shared_ptr<const EqCx> E, int n, int m, bool modp = false);
// full Tate total complex on degrees [lo, hi] with the inherited weights
Cx tate_window(const EqCx& E, int lo, int hi);
TRefs window_refs(const EqCx& E, int t);
// map between bands (same n, m) induced by a degreewise map of tensor powers
CMap tate_band_map(const TateBand& S, const TateBand& T, const CMap& F);

// Tate cohomology lengths of one degree of E: (even column, odd column)
std::pair<int, int> tate_module_lengths(const EqCx& E, int j);

Cx frobenius_twist(const Cx& V);
// tau^F_{[i,i]} -> V^{(1)}[i]: the coefficient of e^{(x)p} on diagonal tuples
CMap tate_phi(const TateBand& B, const Cx& V);

struct CyclicExt {
    std::shared_ptr<const EqCx> E;
    TateBand band;  // tau^F_{[0,1]}
    Cx B1, C, A;    // tau_[1,1] C and tau_[0,0] C on the ambient of C
    CMap b, a;
};
CyclicExt cyclic_extension(const Cx& V, const TensorOptions& opt = {});

}  // namespace cyc

namespace cyc {
// C(f) for a chain map f : V -> W of free complexes
CMap cyclic_map(const CyclicExt& S, const CyclicExt& T, const Cx& V, const Cx& W, const CMap& f);
}  // namespace cyc
