#pragma once

#include "cyc/ring.hpp"

namespace cyc {

struct Witt2 {
    RingPtr ring;  // k = 1
    Elt x0 = 0, x1 = 0;
    bool operator==(const Witt2& o) const { return ring == o.ring && x0 == o.x0 && x1 == o.x1; }
};

Elt carry_cocycle(const Ring& R, Elt x, Elt y);
Scalar carry_cocycle(const Scalar& x, const Scalar& y);

Witt2 witt_add(const Witt2& u, const Witt2& v);
Witt2 witt_mul(const Witt2& u, const Witt2& v);
Witt2 witt_neg(const Witt2& u);
// into Z/p^2 as an integer in [0, p^2)
int witt_ghost_iso(const Witt2& u);

// all p^{2d} elements, x0 major
std::vector<Witt2> witt_elements(const RingPtr& R);

}  // namespace cyc
