#pragma once

#include "cyc/difference.hpp"

namespace cyc {

// quasiexact B[1] -b-> C -a-> A
struct DGElem {
    Cx B, C, A;
    CMap b, a;
};
// left DG splitting: l : Cl -> C, bl : Cone(B) -> Cl
struct LeftSpl {
    Cx Cl;
    CMap l, bl;
};
// quasiexact B -> E -> A
struct DGExt {
    Cx E;
    CMap b, a;
};

Cx cone_of(const Cx& B);
bool is_dg_elementary(const DGElem& X);
bool is_left_splitting(const DGElem& X, const LeftSpl& S);
bool is_strict_left(const DGElem& X, const LeftSpl& S);
bool is_dg_extension(const DGElem& X, const DGExt& E);

LeftSpl dg_sub(const DGElem& X, const LeftSpl& S, const DGExt& E);
DGExt dg_diff(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2);
// kernel version for strict splittings, with the comparison map into dg_diff
struct StrictDiff {
    Cx K;
    CMap to_diff;
};
StrictDiff strict_diff(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2);

DGExt trivial_dg_extension(const DGElem& X);

// DG elementary extension and left splitting attached to module data
std::pair<DGElem, LeftSpl> dg_from_module(const ElemExt& X, const ModSplit& S);
DGExt dg_ext_from_module(const ElemExt& X, const ModExt& E);

struct DGDiffReport {
    bool sub_is_splitting = false;
    bool diff_is_extension = false;
    bool strict_map_chain = false;
    bool self_diff_split = false;  // S - S has the homology of B + A
    bool ext_roof = false;         // E <- E x_A Cl -> Cl - (Cl - E), both quasi-isos
    bool split_roof = false;       // Cl <- R -> S2 - (S2 - Cl), both quasi-isos
    bool all() const { return sub_is_splitting && diff_is_extension && strict_map_chain && self_diff_split && ext_roof && split_roof; }
};
DGDiffReport check_dg_differences(const DGElem& X, const LeftSpl& S1, const LeftSpl& S2, const DGExt& E);

}  // namespace cyc
