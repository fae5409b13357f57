#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace tkk {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; everything else lives in a heap-allocated `mpq_class`.
/// The representation is canonical: a value is stored inline whenever it fits.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int v) noexcept : num_(v) {}
    Rational(long v) : Rational(static_cast<long long>(v)) {}
    Rational(long long v);
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& v);
    explicit Rational(const mpq_class& v);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "n" or "n/d" (optional leading minus sign); throws std::invalid_argument.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const noexcept { return !big_; }
    int sign() const;

    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;
    /// Numerator as int64; throws std::overflow_error when it does not fit or the value is not integral.
    long long to_int() const;
    double to_double() const;

    /// Canonical "num/den" text (denominator always written).
    std::string str() const;
    /// Short text: "num" for integers, "num/den" otherwise.
    std::string short_str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }
    static int compare(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    void set_from_mpq(mpq_class&& q);
    void set_from_i128(__int128 num, __int128 den);

    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

}  // namespace tkk

template <>
struct std::hash<tkk::Rational> {
    std::size_t operator()(const tkk::Rational& r) const { return r.hash(); }
};
