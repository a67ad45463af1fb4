#pragma once

#include <functional>

#include "cyc/trace.hpp"
#include "cyc/witt.hpp"

namespace cyc {

// c x v in C01(V) = C1(V) x V, C1 = coinvariants (canonical coordinates)
struct El01 {
    Vec c, v;
    bool operator==(const El01& o) const { return c == o.c && v == o.v; }
    bool operator<(const El01& o) const { return c != o.c ? c < o.c : v < o.v; }
};

// picks the orbit representative: given the orbit words in rotation order
// starting from the lexicographically smallest, return an index
using KappaFn = std::function<int(const std::vector<std::vector<int>>&)>;
int kappa_lex_min(const std::vector<std::vector<int>>& orbit);

// canonical splitting of the cyclic extension of V = R^n (degree 0)
struct Split01 {
    TraceData T;

    explicit Split01(const RingPtr& R, int n) : T(trace_data(R, n)) {}
    int n() const { return T.n; }
    const RingPtr& ring() const { return T.R; }

    // differential C1 -> C0 (ambient vector in the invariants); minus the trace
    Vec delta(const Vec& c) const;
    Vec stilde(const Vec& v) const { return pth_power(T, v); }
    Vec cocycle(const Vec& v1, const Vec& v2, const KappaFn& kappa = kappa_lex_min) const;

    El01 zero() const;
    El01 add(const El01& x, const El01& y) const;
    El01 neg(const El01& x) const;
    El01 c1(const Vec& c) const { return {c, Vec(n(), 0)}; }
    Vec c0(const El01& x) const;
    // coinvariant arithmetic in canonical coordinates
    Vec cadd(const Vec& a, const Vec& b) const;
    Vec cneg(const Vec& a) const;
    std::vector<El01> elements() const;
};

// (x1 (x) ... (x) xp) . (y1 (x) ... (x) yp) = (x1 (x) y1) (x) ... in (V (x) V')^{(x)p}
Vec shuffle_product(const Split01& A, const Split01& B, const Split01& AB, const Vec& x, const Vec& y);
Vec kron(const Ring& R, const Vec& v, const Vec& w);
// products on coinvariants/invariants; c, c' in canonical coordinates,
// invariants as ambient vectors
Vec coinv_times_inv(const Split01& A, const Split01& B, const Split01& AB, const Vec& c, const Vec& i);
Vec inv_times_coinv(const Split01& A, const Split01& B, const Split01& AB, const Vec& i, const Vec& c);
El01 split_mul(const Split01& A, const Split01& B, const Split01& AB, const El01& x, const El01& y);

// C01(R) <-> W_2(R): (c, v) <-> (x0 = v, x1 = c)
Witt2 to_witt(const Split01& S, const El01& x);
El01 from_witt(const Split01& S, const Witt2& w);

struct CocycleReport {
    bool normalized = true, symmetric = true, associative = true, boundary = true, kappa_free = true;
    bool group = true;
    bool ok() const { return normalized && symmetric && associative && boundary && kappa_free && group; }
};
// exhaustive over V = R^n
CocycleReport check_cocycle(const RingPtr& R, int n);
// order of C01(F_p) and whether it is cyclic
std::pair<int, bool> c01_order_cyclic(const RingPtr& R);

struct MulReport {
    bool left_linear = true, right_linear = true, associative = true, unital = true, sym = true;
    int cases = 0;
    bool ok() const { return left_linear && right_linear && associative && unital && sym; }
};
// exhaustive when samples = 0, otherwise random samples
MulReport check_split_mul(const RingPtr& R, int n, int samples, unsigned long long seed);

struct RegularReport {
    int count = 0;             // regular endomorphisms found by enumeration
    bool are_right_mults = false;
    bool add_table = false, mul_table = false;
    bool square_zero = false;
    bool ok() const { return are_right_mults && add_table && mul_table && square_zero; }
};
RegularReport check_regular_endomorphisms(const RingPtr& R);

}  // namespace cyc
