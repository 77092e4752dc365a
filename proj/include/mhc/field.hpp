#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mhc {

enum class FieldKind { rationals, cyclotomic };

/// Q or Q(zeta_d). Elements are residues modulo the d-th cyclotomic
/// polynomial. Instances are interned: compare fields by pointer.
class Field {
public:
    FieldKind kind() const { return kind_; }
    unsigned order() const { return order_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    /// Coefficients of Phi_d, constant term first. Monic.
    const std::vector<mpz_class>& modulus() const { return modulus_; }
    std::string name() const;

private:
    friend const Field* make_field(FieldKind, unsigned);
    Field(FieldKind kind, unsigned order, std::vector<mpz_class> modulus)
        : kind_(kind), order_(order), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    unsigned order_;
    std::vector<mpz_class> modulus_;
};

/// make_field(cyclotomic, 1) returns the rationals (modulus x - 1).
/// make_field(cyclotomic, 2) is a degree-1 field with zeta = -1.
const Field* make_field(FieldKind kind, unsigned d = 1);
inline const Field* rationals() { return make_field(FieldKind::rationals); }

std::vector<mpz_class> cyclotomic_polynomial(unsigned d);
unsigned euler_phi(unsigned d);

/// Exact element of a Field. Degree-1 fields share the rational fast path
/// and mix freely with any other field.
class Scalar {
public:
    Scalar() : field_(rationals()), q_(0) {}
    Scalar(long v) : field_(rationals()), q_(v) {}  // NOLINT(implicit)
    Scalar(const mpq_class& q) : field_(rationals()), q_(q) {}  // NOLINT
    Scalar(const Field* f, std::vector<mpq_class> coeffs);

    static Scalar zero(const Field* f);
    static Scalar one(const Field* f);
    /// zeta_d^k for the field's d; negative k allowed.
    static Scalar zeta(const Field* f, long k = 1);
    /// Parses "p/q" (rational) or a JSON-free list form is handled by callers.
    static Scalar parse_rational(const std::string& s);

    const Field* field() const { return field_; }
    bool wide() const { return !ext_.empty(); }
    /// Coefficients on 1, zeta, ..., zeta^{deg-1} (length 1 for degree-1 fields).
    std::vector<mpq_class> coeffs() const;
    const mpq_class& rational() const { return q_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Rough size used as a pivoting heuristic (bits in numerators/denominators).
    std::size_t height() const;
    std::string str() const;

private:
    void widen(const Field* f);
    static const Field* join(const Field* a, const Field* b);

    const Field* field_;
    mpq_class q_;                  // value when the field has degree 1
    std::vector<mpq_class> ext_;   // residue coefficients when degree > 1
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mhc
