#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyc {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct nonunit_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct unsupported_error : std::logic_error {
    using std::logic_error::logic_error;
};

// p prime, d field degree, k in {1,2}; poly low-to-high, monic, length d+1
struct RingSpec {
    int p = 2;
    int d = 1;
    int k = 1;
    std::vector<int> poly;
    bool operator==(const RingSpec&) const = default;
};

bool is_prime(int n);
std::vector<int> default_poly(int p, int d);
RingSpec make_spec(int p, int d = 1, int k = 1);

using Elt = std::uint16_t;

// Finite chain ring (Z/p^k)[t]/(f).  Elements are packed into codes
// sum c_i q^i, q = p^k, and all arithmetic goes through tables.
class Ring {
public:
    static std::shared_ptr<const Ring> get(const RingSpec& spec);
    static std::shared_ptr<const Ring> get(int p, int d = 1, int k = 1) { return get(make_spec(p, d, k)); }

    const RingSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int d() const { return spec_.d; }
    int k() const { return spec_.k; }
    int q() const { return q_; }
    int size() const { return n_; }
    std::string name() const;

    Elt add(Elt a, Elt b) const { return add_[a * n_ + b]; }
    Elt sub(Elt a, Elt b) const { return add_[a * n_ + neg_[b]]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * n_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    const Elt* add_row(Elt a) const { return &add_[a * n_]; }
    const Elt* mul_row(Elt a) const { return &mul_[a * n_]; }
    const Elt* neg_table() const { return neg_.data(); }

    // v_p of a; k for zero
    int val(Elt a) const { return val_[a]; }
    bool is_unit(Elt a) const { return val_[a] == 0; }
    Elt inv(Elt a) const;
    Elt pow(Elt a, long e) const;

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long v) const;
    Elt p_pow(int e) const { return ppow_[e]; }

    Elt from_coeffs(const std::vector<int>& c) const;
    std::vector<int> coeffs(Elt a) const;

    // a = p^e * z with canonical z (coefficients divided by p^e); needs val(a) >= e
    Elt div_p(Elt a, int e) const;
    // canonical representative of a modulo p^e R
    Elt rem_p(Elt a, int e) const;

    Elt frob(Elt a) const;
    Elt frob_inv(Elt a) const;

    // residue field for k = 2 (itself for k = 1) and the coefficientwise maps
    std::shared_ptr<const Ring> residue() const;
    Elt to_residue(Elt a) const;
    Elt lift_residue(Elt a) const;

    explicit Ring(const RingSpec& spec);

private:
    RingSpec spec_;
    int q_ = 0, n_ = 0;
    std::vector<Elt> add_, mul_, neg_, inv_;
    std::vector<std::uint8_t> val_;
    std::vector<Elt> ppow_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Scalar {
    RingPtr ring;
    Elt v = 0;
    bool operator==(const Scalar& o) const { return ring == o.ring && v == o.v; }
};

Scalar scalar(const RingPtr& R, const std::vector<int>& coeffs);
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_inv(const Scalar& a);
Scalar frobenius(const Scalar& a);
std::string to_string(const Scalar& a);

}  // namespace cyc
