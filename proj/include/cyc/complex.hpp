#pragma once

#include <climits>
#include <functional>
#include <map>

#include "cyc/span.hpp"

namespace cyc {

// Subquotient chain complex: a graded ambient free module with a degree -1
// map d, and per degree submodules W <= U of the ambient with d(U) <= U,
// d(W) <= W and d(d(U)) <= W.  The complex is U/W.  Free complexes have
// U = everything and W = 0.  Weights (filtration levels) live on the
// ambient basis.
struct Cx {
    RingPtr R;
    int lo = 0;
    std::vector<int> rk;
    std::vector<Mat> d;  // d[i]: degree lo+i -> lo+i-1
    std::vector<Span> U, W;
    std::vector<std::vector<int>> wt;

    int hi() const { return lo + static_cast<int>(rk.size()) - 1; }
    bool in_range(int n) const { return n >= lo && n <= hi(); }
    int rank(int n) const { return in_range(n) ? rk[n - lo] : 0; }
    Mat diff(int n) const;
    Span Uat(int n) const;
    Span Wat(int n) const;
    std::vector<int> weights(int n) const;
    bool has_weights() const { return !wt.empty(); }
};

using CxFn = std::function<Mat(int)>;

Cx free_complex(const RingPtr& R, int lo, const std::vector<int>& ranks, const std::vector<Mat>& diffs);
// builds with U = full, W = 0
Cx free_complex(const RingPtr& R, int lo, int hi, const std::function<int(int)>& rank, const CxFn& diff);
Cx zero_complex(const RingPtr& R);
Cx one_term(const RingPtr& R, int deg, int rank = 1);
bool is_free(const Cx& E);

// checks d^2 = 0 modulo W, and d(U) <= U, d(W) <= W
bool is_valid(const Cx& E);
void require_valid(const Cx& E);

struct CMap {
    std::map<int, Mat> f;
    Mat at(int n, int rs, int rt, const RingPtr& R) const;
    Mat at(int n, const Cx& S, const Cx& T) const { return at(n, S.rank(n), T.rank(n), S.R); }
};

CMap identity_map(const Cx& E);
CMap zero_map(const Cx& S, const Cx& T);
CMap compose(const Cx& A, const Cx& B, const Cx& C, const CMap& f, const CMap& g);  // f then g
CMap map_add(const Cx& S, const Cx& T, const CMap& f, const CMap& g);
CMap map_neg(const Cx& S, const Cx& T, const CMap& f);
CMap map_scale(const Cx& S, const Cx& T, const CMap& f, Elt s);

// per degree: Z = cycles, B = boundaries (both in the ambient)
Span cycles(const Cx& E, int n);
Span boundaries(const Cx& E, int n);
int homology_length(const Cx& E, int n);
bool is_acyclic(const Cx& E);
// degree -> sorted exponents of the cyclic factors of H_n (nonzero degrees only)
std::map<int, std::vector<int>> homology(const Cx& E);
int module_length(const Cx& E, int n);

Cx shift(const Cx& E, int m);
Cx direct_sum(const Cx& A, const Cx& B);
Cx cone(const Cx& S, const Cx& T, const CMap& f);
// inclusion T -> Cone(f) and projection Cone(f) -> S[1]
CMap cone_in(const Cx& S, const Cx& T);
CMap cone_out(const Cx& S, const Cx& T);

Cx truncate_ge(const Cx& E, int m);
Cx truncate_le(const Cx& E, int m);
Cx truncate(const Cx& E, int m, int n);

constexpr int kNoBound = INT_MIN / 4;
// filtered truncation tau^F_{[n,m]}; n = kNoBound or m = -kNoBound drop a side
Cx ftruncate(const Cx& E, int n, int m);
Cx ftruncate_ge(const Cx& E, int n);
Cx ftruncate_le(const Cx& E, int m);
// F^j of the degree-n term of E as a submodule of the ambient (contains W)
Span filt(const Cx& E, int n, int j);
// graded piece gr^j_F E as its own complex
Cx graded(const Cx& E, int j);

// E with new U/W, same ambient
Cx with_sub(const Cx& E, const std::vector<Span>& U, const std::vector<Span>& W);

bool is_chain_map(const Cx& S, const Cx& T, const CMap& f);
bool is_injective(const Cx& S, const Cx& T, const CMap& f);
bool is_surjective(const Cx& S, const Cx& T, const CMap& f);
bool is_iso(const Cx& S, const Cx& T, const CMap& f);
bool is_zero_map(const Cx& S, const Cx& T, const CMap& f);
bool is_quasi_iso(const Cx& S, const Cx& T, const CMap& f);
bool maps_equal(const Cx& S, const Cx& T, const CMap& f, const CMap& g);
// Ker a / Im b as a subquotient of the middle ambient
Cx middle(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a);
bool is_quasiexact(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a);
bool is_exact_seq(const Cx& B, const Cx& C, const Cx& A, const CMap& b, const CMap& a);

// small canonical presentation: ambient = one basis vector per cyclic factor
struct Compressed {
    Cx cx;
    std::map<int, SQBasis> basis;
};
Compressed compress(const Cx& E);
CMap compress_map(const Compressed& S, const Compressed& T, const Cx& Sbig, const CMap& f);
// a map into a compressed target from an arbitrary source
CMap map_into(const Cx& S, const Compressed& T, const CMap& f);
// map from a compressed source, precomposed with the generator lifts
CMap map_from(const Compressed& S, const CMap& f);

}  // namespace cyc
