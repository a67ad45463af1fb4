#pragma once

#include "cyc/tate.hpp"

namespace cyc {

// V^{(x)p} for V = R^n in degree 0 with coinvariants, invariants and the
// trace between them
struct TraceData {
    RingPtr R;
    int n = 0, p = 2;
    EqCx E;
    Mat one_minus_sigma, tr;
    SQBasis coinv;  // R^N / Im(id - sigma)
    Span inv;       // Ker(id - sigma)
};

TraceData trace_data(const RingPtr& R, int n);
// v |-> class of v^{(x)p} in coinvariants (canonical coordinates)
Vec psi(const TraceData& T, const Vec& v);
// ambient vector of v^{(x)p}
Vec pth_power(const TraceData& T, const Vec& v);
// invariants -> V^{(1)}: coefficients of e_g^{(x)p}
Mat diagonal_projection(const TraceData& T);

struct TraceSeqReport {
    bool psi_injective = false, psi_into_kernel = false, psi_onto_kernel = false;
    bool psi_additive = false, psi_semilinear = false;
    bool exact_at_invariants = false, projection_onto = false;
    bool ok() const {
        return psi_injective && psi_into_kernel && psi_onto_kernel && psi_additive && psi_semilinear && exact_at_invariants &&
               projection_onto;
    }
};
// exhaustive over V, so only for small |V|
TraceSeqReport check_trace_sequence(const RingPtr& R, int n);

// all elements of R^n in lexicographic order of codes
std::vector<Vec> all_vectors(const RingPtr& R, int n);

}  // namespace cyc
