#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcrit {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a", "-a", "a/b".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const;
    std::string str() const { return q_.get_str(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of the prime field F_p. The modulus travels with the value;
/// mixing moduli is an error.
class Fp {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

    Fp() = default;
    Fp(std::int64_t v, std::uint64_t p);
    /// Reduction of a rational; throws if p divides the denominator.
    static Fp from_rational(const Rational& r, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % (p_ == 0 ? 1 : p_); }

    Fp operator-() const;
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const;
    std::string str() const { return std::to_string(v_); }

private:
    void check_same(const Fp& o) const;
    std::uint64_t v_ = 0;
    std::uint64_t p_ = kDefaultPrime;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Field traits used by the generic matrix kernels.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    using Context = int;  // unused
    static Rational zero(Context = 0) { return Rational(); }
    static Rational one(Context = 0) { return Rational(1); }
    static Rational from_rational(const Rational& r, Context = 0) { return r; }
};

template <>
struct FieldOps<Fp> {
    using Context = std::uint64_t;  // the prime
    static Fp zero(Context p) { return Fp(0, p); }
    static Fp one(Context p) { return Fp(1, p); }
    static Fp from_rational(const Rational& r, Context p) { return Fp::from_rational(r, p); }
};

bool is_probable_prime(std::uint64_t p);

}  // namespace dcrit
