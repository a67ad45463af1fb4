#pragma once

#include "cyc/complex.hpp"
#include "cyc/random.hpp"

namespace cyc {

// modules are complexes concentrated in degree 0
Cx module_sq(const Span& U, const Span& W);
Mat map0(const CMap& f, const Cx& S, const Cx& T);

// 0 -> B -> C1 -> C0 -> A -> 0
struct ElemExt {
    Cx B, C1, C0, A;
    CMap b, d, a;
};
struct ModSplit {
    Cx C01;
    CMap c1, c0;
};
// 0 -> B -> E -> A -> 0
struct ModExt {
    Cx E;
    CMap b, a;
};

bool is_elementary(const ElemExt& X);
bool is_splitting(const ElemExt& X, const ModSplit& S);
bool is_extension(const ElemExt& X, const ModExt& E);

// random extension with a splitting built from a filtered module
std::pair<ElemExt, ModSplit> random_split_elementary(const RingPtr& R, int rank, Rng& rng);
ModExt random_extension(const ElemExt& X, Rng& rng);
ModExt trivial_extension(const ElemExt& X);

// C - E (a splitting) and C' - C (an extension)
ModSplit split_minus_ext(const ElemExt& X, const ModSplit& C, const ModExt& E);
ModExt split_minus_split(const ElemExt& X, const ModSplit& C1, const ModSplit& C2);

// the natural maps C -> C' - (C' - C) and E -> C - (C - E); true when they
// are isomorphisms compatible with the structure maps
bool check_split_iso(const ElemExt& X, const ModSplit& C, const ModSplit& Cp);
bool check_ext_iso(const ElemExt& X, const ModSplit& C, const ModExt& E);
// an extension is split when b has a retraction
bool is_split_extension(const ElemExt& X, const ModExt& E);

}  // namespace cyc
