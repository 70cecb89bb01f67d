#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "traceideal/errors.hpp"

namespace traceideal {

enum class FieldKind : uint8_t { Rational, Gaussian, Prime };

// Which exact field coefficients live in: QQ, QQ(i), or F_p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    unsigned long p = 0;  // modulus, Prime only

    static FieldSpec QQ() { return {FieldKind::Rational, 0}; }
    static FieldSpec QQi() { return {FieldKind::Gaussian, 0}; }
    static FieldSpec Fp(unsigned long p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // Whether sqrt(-1) exists: always in QQ(i), in F_p iff p = 1 mod 4.
    bool has_imaginary_unit() const;
    // Residue representing sqrt(-1) in F_p (requires has_imaginary_unit).
    unsigned long fp_imaginary_unit() const;

    std::string str() const;
    static FieldSpec parse(const std::string& text);
};

// An exact scalar in QQ, QQ(i) or F_p.  Immutable value type; arithmetic
// between elements of different specs raises ContextError.
class FieldElement {
  public:
    FieldElement() = default;  // zero of QQ

    static FieldElement zero(const FieldSpec& f);
    static FieldElement one(const FieldSpec& f);
    static FieldElement from_int(const FieldSpec& f, long v);
    static FieldElement from_mpq(const FieldSpec& f, const mpq_class& v);
    // a + b*i; requires f.has_imaginary_unit() unless b == 0.
    static FieldElement gaussian(const FieldSpec& f, const mpq_class& a, const mpq_class& b);
    static FieldElement imaginary_unit(const FieldSpec& f);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // o nonzero
    FieldElement operator-() const;
    FieldElement invert() const;  // *this nonzero

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Rational / Gaussian parts (Rational and Gaussian kinds).
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    // Residue in [0, p) (Prime kind).
    unsigned long residue() const { return fp_; }

    std::string str() const;

  private:
    FieldSpec spec_ = FieldSpec::QQ();
    mpq_class re_ = 0;
    mpq_class im_ = 0;
    unsigned long fp_ = 0;

    void check_same(const FieldElement& o) const;
};

}  // namespace traceideal
