#include "groupcast/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace groupcast {

namespace {

using Int = Rational::Int;

Int gcd128(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
    return r;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
}

Rational Rational::make(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd128(a.den_, b.den_);
    Int bd = b.den_ / g;
    Int num = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
    Int den = checked_mul(a.den_, bd);
    return Rational::make(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd128(a.num_, b.den_);
    Int g2 = gcd128(b.num_, a.den_);
    return Rational::make(checked_mul(a.num_ / g1, b.num_ / g2),
                          checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return a * Rational::make(b.den_, b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u != 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("cannot parse rational: '" + s + "'"); };
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) bad();
    Int num = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        num = checked_add(checked_mul(num, 10), s[i++] - '0');
    }
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) bad();
        den = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            den = checked_add(checked_mul(den, 10), s[i++] - '0');
        }
        if (den == 0) bad();
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            num = checked_add(checked_mul(num, 10), s[i++] - '0');
            den = checked_mul(den, 10);
        }
    }
    skip_ws();
    if (i != s.size()) bad();
    return Rational::make(neg ? -num : num, den);
}

long long Rational::floor_ll() const {
    Int q = num_ / den_;
    if (num_ < 0 && num_ % den_ != 0) --q;
    return static_cast<long long>(q);
}

long long Rational::ceil_ll() const {
    Int q = num_ / den_;
    if (num_ > 0 && num_ % den_ != 0) ++q;
    return static_cast<long long>(q);
}

}  // namespace groupcast
