#include "tkk/rational.hpp"

#include <charconv>
#include <climits>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tkk {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr long long kMax = LLONG_MAX;

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned long long gcd64(long long a, long long b) {
    return std::gcd(static_cast<unsigned long long>(a < 0 ? -a : a), static_cast<unsigned long long>(b < 0 ? -b : b));
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<unsigned long long>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<unsigned long long>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_ll(long long v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), v);
    return r;
}

bool mpz_fits_ll(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(LONG_MIN);
}

}  // namespace

Rational::Rational(long long v) {
    if (v == LLONG_MIN) {
        set_from_mpq(mpq_class(mpz_from_ll(v)));
    } else {
        num_ = v;
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    set_from_i128(n, d);
}

Rational::Rational(const mpz_class& v) { set_from_mpq(mpq_class(v)); }

Rational::Rational(const mpq_class& v) {
    mpq_class q(v);
    q.canonicalize();
    set_from_mpq(std::move(q));
}

void Rational::set_from_mpq(mpq_class&& q) {
    if (mpz_fits_ll(q.get_num()) && mpz_fits_ll(q.get_den())) {
        num_ = mpz_get_si(q.get_num_mpz_t());
        den_ = mpz_get_si(q.get_den_mpz_t());
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::set_from_i128(i128 num, i128 den) {
    if (fits(num) && fits(den)) {
        num_ = static_cast<long long>(num);
        den_ = static_cast<long long>(den);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
        set_from_mpq(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text)) throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
        return Rational(to_mpz(text));
    }
    auto n = trim(text.substr(0, slash));
    auto d = trim(text.substr(slash + 1));
    if (!valid_int(n) || !valid_int(d)) throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    mpz_class dz = to_mpz(d);
    if (dz == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(mpq_class(to_mpz(n), dz));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_ll(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_ll(den_); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_ll(num_), mpz_from_ll(den_));
}

long long Rational::to_int() const {
    if (big_ || den_ != 1) throw std::overflow_error("Rational::to_int: not a small integer: " + str());
    return num_;
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::short_str() const {
    if (is_integer()) return big_ ? big_->get_num().get_str() : std::to_string(num_);
    return str();
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_from_mpq(mpq_class(-*big_));
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            r.set_from_i128(static_cast<i128>(a.num_) + b.num_, 1);
            return r;
        }
        long long g = static_cast<long long>(gcd64(a.den_, b.den_));
        i128 num = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
        i128 den = static_cast<i128>(a.den_) * (b.den_ / g);
        if (num == 0) return r;
        u128 g2 = gcd128(uabs(num), static_cast<u128>(den));
        if (g2 > 1) {
            num /= static_cast<i128>(g2);
            den /= static_cast<i128>(g2);
        }
        r.set_from_i128(num, den);
        return r;
    }
    r.set_from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!b.big_) {
        Rational nb;
        nb.num_ = -b.num_;
        nb.den_ = b.den_;
        return a + nb;
    }
    Rational r;
    r.set_from_mpq(mpq_class(a.to_mpq() - b.to_mpq()));
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return r;
        if (a.den_ == 1 && b.den_ == 1) {
            r.set_from_i128(static_cast<i128>(a.num_) * b.num_, 1);
            return r;
        }
        long long g1 = static_cast<long long>(gcd64(a.num_, b.den_));
        long long g2 = static_cast<long long>(gcd64(b.num_, a.den_));
        i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        r.set_from_i128(num, den);
        return r;
    }
    r.set_from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!b.big_) {
        Rational inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }
    Rational r;
    r.set_from_mpq(mpq_class(a.to_mpq() / b.to_mpq()));
    return r;
}

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never equals a small one
}

int Rational::compare(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return (l > r) - (l < r);
    }
    return cmp(a.to_mpq(), b.to_mpq());
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(str());
    std::size_t h = std::hash<long long>{}(num_);
    return h ^ (std::hash<long long>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tkk
