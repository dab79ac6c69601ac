#include "recmat/scalar.hpp"

#include <cctype>
#include <ostream>

namespace recmat {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_modulus(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime_modulus(p)) throw NotPrimeError(p);
    return Field{FieldKind::Prime, p};
}

std::string Field::str() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Gaussian: return "Qi";
        case FieldKind::Prime: return "Fp:" + std::to_string(p);
    }
    return "?";
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rational();
    if (text == "Qi") return gaussian();
    if (text.rfind("Fp:", 0) == 0) {
        std::int64_t p = 0;
        for (std::size_t i = 3; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("bad modulus in field tag", i);
            p = p * 10 + (text[i] - '0');
        }
        return prime(p);
    }
    throw ParseError("unknown field tag \"" + std::string(text) + "\"", 0);
}

Scalar Scalar::integer(long v, const Field& f) {
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
        case FieldKind::Rational:
        case FieldKind::Gaussian: s.re_ = v; break;
        case FieldKind::Prime: s.fp_ = ((v % f.p) + f.p) % f.p; break;
    }
    return s;
}

Scalar Scalar::rational(mpq_class v) {
    Scalar s;
    s.field_ = Field::rational();
    v.canonicalize();
    s.re_ = std::move(v);
    return s;
}

Scalar Scalar::rational(long num, long den) {
    return rational(mpq_class(num, den));
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    Scalar s;
    s.field_ = Field::gaussian();
    re.canonicalize();
    im.canonicalize();
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    return s;
}

Scalar Scalar::prime(std::int64_t v, std::int64_t p) {
    return prime(v, Field::prime(p));
}

Scalar Scalar::prime(std::int64_t v, const Field& f) {
    Scalar s;
    s.field_ = f;
    s.fp_ = ((v % f.p) + f.p) % f.p;
    return s;
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::Rational: return sgn(re_) == 0;
        case FieldKind::Gaussian: return sgn(re_) == 0 && sgn(im_) == 0;
        case FieldKind::Prime: return fp_ == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind) {
        case FieldKind::Rational: return re_ == 1;
        case FieldKind::Gaussian: return re_ == 1 && sgn(im_) == 0;
        case FieldKind::Prime: return fp_ == 1 % field_.p;
    }
    return false;
}

bool Scalar::is_integral() const {
    switch (field_.kind) {
        case FieldKind::Rational: return re_.get_den() == 1;
        case FieldKind::Gaussian: return re_.get_den() == 1 && im_.get_den() == 1;
        case FieldKind::Prime: return true;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Rational: s.re_ = re_ + o.re_; break;
        case FieldKind::Gaussian: s.re_ = re_ + o.re_; s.im_ = im_ + o.im_; break;
        case FieldKind::Prime: s.fp_ = (fp_ + o.fp_) % field_.p; break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Rational: s.re_ = re_ - o.re_; break;
        case FieldKind::Gaussian: s.re_ = re_ - o.re_; s.im_ = im_ - o.im_; break;
        case FieldKind::Prime: s.fp_ = ((fp_ - o.fp_) % field_.p + field_.p) % field_.p; break;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Rational: s.re_ = re_ * o.re_; break;
        case FieldKind::Gaussian:
            s.re_ = re_ * o.re_ - im_ * o.im_;
            s.im_ = re_ * o.im_ + im_ * o.re_;
            break;
        case FieldKind::Prime: s.fp_ = mulmod(fp_, o.fp_, field_.p); break;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Rational: s.re_ = -re_; break;
        case FieldKind::Gaussian: s.re_ = -re_; s.im_ = -im_; break;
        case FieldKind::Prime: s.fp_ = (field_.p - fp_) % field_.p; break;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Rational: s.re_ = 1 / re_; break;
        case FieldKind::Gaussian: {
            mpq_class n = re_ * re_ + im_ * im_;
            s.re_ = re_ / n;
            s.im_ = -im_ / n;
            break;
        }
        case FieldKind::Prime: s.fp_ = powmod(fp_, field_.p - 2, field_.p); break;
    }
    return s;
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
    Scalar acc = one(field_);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    switch (field_.kind) {
        case FieldKind::Rational: return re_ == o.re_;
        case FieldKind::Gaussian: return re_ == o.re_ && im_ == o.im_;
        case FieldKind::Prime: return fp_ == o.fp_;
    }
    return false;
}

namespace {

std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

}  // namespace

std::string Scalar::str() const {
    switch (field_.kind) {
        case FieldKind::Rational: return rat_str(re_);
        case FieldKind::Gaussian: {
            if (sgn(im_) == 0) return rat_str(re_);
            std::string s = rat_str(re_);
            s += sgn(im_) < 0 ? "-" : "+";
            mpq_class a = abs(im_);
            s += rat_str(a) + "i";
            return s;
        }
        case FieldKind::Prime: return std::to_string(fp_);
    }
    return "?";
}

namespace {

// Parses [sign] digits [ "/" digits ] starting at pos; advances pos.
mpq_class parse_rat(std::string_view text, std::size_t& pos, bool sign_required) {
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    } else if (sign_required) {
        throw ParseError("expected sign", pos);
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected digits", pos);
    std::string num;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        num += text[pos++];
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected denominator digits", pos);
        den.clear();
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            den += text[pos++];
    }
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw ParseError("zero denominator", start);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, const Field& f) {
    std::size_t pos = 0;
    if (text.empty()) throw ParseError("empty scalar", 0);
    switch (f.kind) {
        case FieldKind::Rational: {
            mpq_class q = parse_rat(text, pos, false);
            if (pos != text.size()) throw ParseError("trailing characters", pos);
            return rational(q);
        }
        case FieldKind::Gaussian: {
            mpq_class first = parse_rat(text, pos, false);
            if (pos == text.size()) return gaussian(first, 0);
            if (text[pos] == 'i') {
                // pure imaginary "3i" accepted; canonical form still prints the real part
                ++pos;
                if (pos != text.size()) throw ParseError("trailing characters", pos);
                return gaussian(0, first);
            }
            mpq_class second = parse_rat(text, pos, true);
            if (pos >= text.size() || text[pos] != 'i')
                throw ParseError("expected 'i' suffix on imaginary part", pos);
            ++pos;
            if (pos != text.size()) throw ParseError("trailing characters", pos);
            return gaussian(first, second);
        }
        case FieldKind::Prime: {
            bool neg = false;
            if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';
            std::int64_t v = 0;
            if (pos >= text.size()) throw ParseError("expected digits", pos);
            for (; pos < text.size(); ++pos) {
                if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("expected digits", pos);
                v = (v * 10 + (text[pos] - '0')) % f.p;
            }
            return prime(neg ? -v : v, f);
        }
    }
    throw ParseError("bad field", 0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace recmat
