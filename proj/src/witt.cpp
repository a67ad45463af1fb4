#include "cyc/witt.hpp"

namespace cyc {

namespace {
long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
void check(const Witt2& u, const Witt2& v) {
    if (u.ring != v.ring) throw usage_error("Witt vectors over different rings");
    if (u.ring->k() != 1) throw usage_error("Witt components must lie in a field");
}
}  // namespace

Elt carry_cocycle(const Ring& R, Elt x, Elt y) {
    const int p = R.p();
    Elt s = 0;
    for (int i = 1; i < p; ++i) {
        Elt coef = R.from_int(binom(p, i) / p);
        s = R.add(s, R.mul(coef, R.mul(R.pow(x, i), R.pow(y, p - i))));
    }
    return s;
}

Scalar carry_cocycle(const Scalar& x, const Scalar& y) {
    if (x.ring != y.ring) throw usage_error("scalars from different rings");
    return {x.ring, carry_cocycle(*x.ring, x.v, y.v)};
}

Witt2 witt_add(const Witt2& u, const Witt2& v) {
    check(u, v);
    const Ring& R = *u.ring;
    return {u.ring, R.add(u.x0, v.x0), R.add(R.add(u.x1, v.x1), carry_cocycle(R, u.x0, v.x0))};
}

Witt2 witt_mul(const Witt2& u, const Witt2& v) {
    check(u, v);
    const Ring& R = *u.ring;
    return {u.ring, R.mul(u.x0, v.x0), R.add(R.mul(R.frob(u.x0), v.x1), R.mul(u.x1, R.frob(v.x0)))};
}

Witt2 witt_neg(const Witt2& u) {
    Witt2 m{u.ring, u.ring->neg(u.x0), 0};
    // second coordinate from m + u = 0
    m.x1 = u.ring->neg(witt_add(m, u).x1);
    return m;
}

int witt_ghost_iso(const Witt2& u) {
    const Ring& R = *u.ring;
    if (R.d() != 1) throw unsupported_error("ghost isomorphism needs d = 1");
    const int p = R.p(), p2 = p * p;
    long a = u.x0, b = u.x1;
    long t = 1;
    for (int i = 0; i < p; ++i) t = t * a % p2;
    return static_cast<int>(((t - p * b) % p2 + p2) % p2);
}

std::vector<Witt2> witt_elements(const RingPtr& R) {
    std::vector<Witt2> out;
    for (int a = 0; a < R->size(); ++a)
        for (int b = 0; b < R->size(); ++b) out.push_back({R, static_cast<Elt>(a), static_cast<Elt>(b)});
    return out;
}

}  // namespace cyc
