#pragma once

#include <random>

#include "cyc/complex.hpp"

namespace cyc {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1)); }
inline Elt random_elt(const Ring& R, Rng& rng) { return static_cast<Elt>(rng() % static_cast<unsigned long long>(R.size())); }

Mat random_matrix(const RingPtr& R, int r, int c, Rng& rng);
Vec random_vec(const RingPtr& R, int n, Rng& rng);
Mat random_invertible(const RingPtr& R, int n, Rng& rng);
// invertible and compatible with the weight filtration
Mat random_filtered_invertible(const RingPtr& R, const std::vector<int>& w, Rng& rng);

struct RandomCxOptions {
    int lo = 0, hi = 2;
    int max_rank = 2;
    bool acyclic = false;
    bool weighted = false;
    int wlo = -1, whi = 1;
    bool torsion_pieces = true;  // R --p--> R summands when k = 2
};

// sum of R[n], Cone(R)[n] and (k = 2) p-multiplication pieces, then a random change of basis
Cx random_complex(const RingPtr& R, const RandomCxOptions& opt, Rng& rng);
// conjugate a free complex by invertible matrices (weights kept)
Cx change_basis(const Cx& E, const std::map<int, Mat>& P);

}  // namespace cyc

namespace cyc {
// base + d h + h d for a random h of degree +1 (base may be empty)
CMap random_homotopic(const Cx& V, const Cx& W, const CMap& base, Rng& rng);
// random element of a submodule
Vec random_in(const Span& S, Rng& rng);
}  // namespace cyc
