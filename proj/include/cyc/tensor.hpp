#pragma once

#include <unordered_map>

#include "cyc/complex.hpp"

namespace cyc {

int floor_div(int a, int b);

// p-th tensor power of a free complex with its cyclic action.
// Basis of degree n: p-tuples of V basis vectors, lexicographic in the
// global V index (V basis ordered by degree, then position).
struct EqCx {
    Cx cx;
    std::map<int, Mat> sigma;
    int p = 2;
    int vrank = 0;
    std::vector<std::pair<int, int>> vbasis;  // global -> (degree, local)
    std::map<int, int> vstart;                // degree -> first global index
    std::map<int, std::vector<long>> codes;   // degree -> sorted tuple codes
    std::unordered_map<long, int> pos;        // code -> position within its degree

    long encode(const std::vector<int>& g) const;
    std::vector<int> decode(long code) const;
    int degree_of(long code) const;
    int global(int deg, int local) const { return vstart.at(deg) + local; }
};

struct TensorOptions {
    long max_rank = 4096;
};

EqCx tensor_power(const Cx& V, int p, const TensorOptions& opt = {});
// id - sigma and the trace on degree n
Mat one_minus_sigma(const EqCx& E, int n);
Mat trace(const EqCx& E, int n);
// f^{(x)p} for f : V -> V' of degree 0 (no signs)
CMap tensor_power_map(const EqCx& S, const EqCx& T, const Cx& V, const Cx& V2, const CMap& f);
// x_1 (x) ... (x) x_p of homogeneous elements (degree, coordinates); returns degree and vector
std::pair<int, Vec> pure_tensor(const EqCx& E, const std::vector<std::pair<int, Vec>>& xs);
// coinvariant-normalized scalar sign for sigma on (R[i])^{(x)p}
Elt sigma_on_line(const RingPtr& R, int i, int p);

}  // namespace cyc
