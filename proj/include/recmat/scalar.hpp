#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "recmat/errors.hpp"

namespace recmat {

enum class FieldKind : std::uint8_t { Rational, Gaussian, Prime };

/// Ground field tag. The three supported fields are Q, Q(i) and F_p
/// (p prime, p < 2^31 so products fit in signed 64-bit).
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::int64_t p = 0;  // modulus, Prime only

    static Field rational() { return Field{FieldKind::Rational, 0}; }
    static Field gaussian() { return Field{FieldKind::Gaussian, 0}; }
    static Field prime(std::int64_t p);  // throws NotPrimeError

    bool operator==(const Field&) const = default;
    std::string str() const;

    /// Parses "Q", "Qi", "Fp:<p>".
    static Field parse(std::string_view text);
};

bool is_prime_modulus(std::int64_t p);

/// Exact field element: rational, Gaussian rational, or prime-field residue.
/// Values are immutable in spirit: all arithmetic returns fresh scalars and
/// results are always canonical (lowest terms, positive denominators,
/// residues in [0,p)). Mixing fields throws FieldMismatchError.
class Scalar {
  public:
    Scalar() : field_(Field::rational()) {}

    static Scalar zero(const Field& f) { return integer(0, f); }
    static Scalar one(const Field& f) { return integer(1, f); }
    static Scalar integer(long v, const Field& f);
    static Scalar rational(mpq_class v);
    static Scalar rational(long num, long den);
    static Scalar gaussian(mpq_class re, mpq_class im);
    static Scalar prime(std::int64_t v, std::int64_t p);
    static Scalar prime(std::int64_t v, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;  // integer exponent, negative allowed for units

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Accessors; only meaningful for the matching field kind.
    const mpq_class& rat() const { return re_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    std::int64_t residue() const { return fp_; }

    /// True when the value is an integer of the ambient field (denominators 1).
    bool is_integral() const;

    /// Canonical text form, see the scalar grammar: "-1/3", "-1+1i", "5".
    std::string str() const;

    /// Parses the grammar for the given field; canonicalizes. Throws ParseError.
    static Scalar parse(std::string_view text, const Field& f);

  private:
    Field field_;
    mpq_class re_;  // rational value / real part
    mpq_class im_;  // imaginary part (Gaussian only)
    std::int64_t fp_ = 0;  // residue (Prime only)

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatchError();
    }
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace recmat
