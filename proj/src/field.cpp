#include "traceideal/field.hpp"

#include <sstream>

namespace traceideal {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
    // p prime, a != 0 mod p
    return powmod(a, p - 2, p);
}

unsigned long mpz_mod_ul(const mpz_class& z, unsigned long p) {
    mpz_class m = z % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return m.get_ui();
}

unsigned long mpq_mod_ul(const mpq_class& q, unsigned long p) {
    unsigned long num = mpz_mod_ul(q.get_num(), p);
    unsigned long den = mpz_mod_ul(q.get_den(), p);
    if (den == 0) throw DomainError("denominator not invertible mod " + std::to_string(p));
    return mulmod(num, invmod(den, p), p);
}

}  // namespace

FieldSpec FieldSpec::Fp(unsigned long p) {
    if (!is_prime(p)) throw DomainError("F_p modulus must be prime, got " + std::to_string(p));
    return {FieldKind::Prime, p};
}

bool FieldSpec::has_imaginary_unit() const {
    switch (kind) {
        case FieldKind::Rational: return false;
        case FieldKind::Gaussian: return true;
        case FieldKind::Prime: return p % 4 == 1;
    }
    return false;
}

unsigned long FieldSpec::fp_imaginary_unit() const {
    if (kind != FieldKind::Prime || p % 4 != 1)
        throw DomainError("sqrt(-1) does not exist in " + str());
    // a^((p-1)/4) squares to -1 whenever a is a quadratic nonresidue.
    for (unsigned long a = 2; a < p; ++a) {
        unsigned long t = powmod(a, (p - 1) / 4, p);
        if (mulmod(t, t, p) == p - 1) return t;
    }
    throw DomainError("sqrt(-1) search failed in " + str());
}

std::string FieldSpec::str() const {
    switch (kind) {
        case FieldKind::Rational: return "QQ";
        case FieldKind::Gaussian: return "QQi";
        case FieldKind::Prime: return "Fp:" + std::to_string(p);
    }
    return "?";
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "QQ") return QQ();
    if (text == "QQi" || text == "QQ(i)") return QQi();
    if (text.rfind("Fp:", 0) == 0) {
        try {
            return Fp(std::stoul(text.substr(3)));
        } catch (const std::logic_error&) {
            throw ParseError("bad F_p modulus in field spec '" + text + "'");
        }
    }
    throw ParseError("unknown field spec '" + text + "' (expected QQ, QQi or Fp:<p>)");
}

FieldElement FieldElement::zero(const FieldSpec& f) {
    FieldElement e;
    e.spec_ = f;
    return e;
}

FieldElement FieldElement::one(const FieldSpec& f) {
    FieldElement e = zero(f);
    if (f.kind == FieldKind::Prime)
        e.fp_ = 1 % f.p;
    else
        e.re_ = 1;
    return e;
}

FieldElement FieldElement::from_int(const FieldSpec& f, long v) {
    return from_mpq(f, mpq_class(v));
}

FieldElement FieldElement::from_mpq(const FieldSpec& f, const mpq_class& v) {
    FieldElement e = zero(f);
    if (f.kind == FieldKind::Prime)
        e.fp_ = mpq_mod_ul(v, f.p);
    else
        e.re_ = v;
    return e;
}

FieldElement FieldElement::gaussian(const FieldSpec& f, const mpq_class& a, const mpq_class& b) {
    if (b == 0) return from_mpq(f, a);
    if (f.kind == FieldKind::Gaussian) {
        FieldElement e = zero(f);
        e.re_ = a;
        e.im_ = b;
        return e;
    }
    if (f.kind == FieldKind::Prime && f.has_imaginary_unit()) {
        unsigned long i = f.fp_imaginary_unit();
        FieldElement e = zero(f);
        e.fp_ = (mpq_mod_ul(a, f.p) + mulmod(mpq_mod_ul(b, f.p), i, f.p)) % f.p;
        return e;
    }
    throw DomainError("imaginary unit not available over " + f.str());
}

FieldElement FieldElement::imaginary_unit(const FieldSpec& f) {
    return gaussian(f, 0, 1);
}

bool FieldElement::is_zero() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return re_ == 0;
        case FieldKind::Gaussian: return re_ == 0 && im_ == 0;
        case FieldKind::Prime: return fp_ == 0;
    }
    return true;
}

bool FieldElement::is_one() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return re_ == 1;
        case FieldKind::Gaussian: return re_ == 1 && im_ == 0;
        case FieldKind::Prime: return fp_ == 1 % spec_.p;
    }
    return false;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (spec_ != o.spec_)
        throw ContextError("field mismatch: " + spec_.str() + " vs " + o.spec_.str());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: r.re_ = re_ + o.re_; break;
        case FieldKind::Gaussian:
            r.re_ = re_ + o.re_;
            r.im_ = im_ + o.im_;
            break;
        case FieldKind::Prime: r.fp_ = (fp_ + o.fp_) % spec_.p; break;
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator-() const {
    FieldElement r = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: r.re_ = -re_; break;
        case FieldKind::Gaussian:
            r.re_ = -re_;
            r.im_ = -im_;
            break;
        case FieldKind::Prime: r.fp_ = fp_ == 0 ? 0 : spec_.p - fp_; break;
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement r = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: r.re_ = re_ * o.re_; break;
        case FieldKind::Gaussian:
            // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
            r.re_ = re_ * o.re_ - im_ * o.im_;
            r.im_ = re_ * o.im_ + im_ * o.re_;
            break;
        case FieldKind::Prime: r.fp_ = mulmod(fp_, o.fp_, spec_.p); break;
    }
    return r;
}

FieldElement FieldElement::invert() const {
    if (is_zero()) throw DomainError("inverting zero in " + spec_.str());
    FieldElement r = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: r.re_ = 1 / re_; break;
        case FieldKind::Gaussian: {
            mpq_class n = re_ * re_ + im_ * im_;
            r.re_ = re_ / n;
            r.im_ = -im_ / n;
            break;
        }
        case FieldKind::Prime: r.fp_ = invmod(fp_, spec_.p); break;
    }
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.invert();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ != o.spec_) return false;
    switch (spec_.kind) {
        case FieldKind::Rational: return re_ == o.re_;
        case FieldKind::Gaussian: return re_ == o.re_ && im_ == o.im_;
        case FieldKind::Prime: return fp_ == o.fp_;
    }
    return false;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    switch (spec_.kind) {
        case FieldKind::Rational: os << re_.get_str(); break;
        case FieldKind::Gaussian:
            if (im_ == 0) {
                os << re_.get_str();
            } else if (re_ == 0) {
                if (im_ == 1)
                    os << "i";
                else if (im_ == -1)
                    os << "-i";
                else
                    os << im_.get_str() << "*i";
            } else {
                os << re_.get_str();
                if (im_ > 0) os << "+";
                if (im_ == 1)
                    os << "i";
                else if (im_ == -1)
                    os << "-i";
                else
                    os << im_.get_str() << "*i";
            }
            break;
        case FieldKind::Prime: os << fp_; break;
    }
    return os.str();
}

}  // namespace traceideal
