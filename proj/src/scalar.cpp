#include "dcrit/scalar.hpp"

#include <string>

namespace dcrit {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty input");
    if (s.front() == '+')
        s.erase(s.begin());
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad number '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p)
{
    if (p < 2)
        throw std::invalid_argument("Fp: modulus must be >= 2");
    auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
    if (m < 0)
        m += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(m);
}

Fp Fp::from_rational(const Rational& r, std::uint64_t p)
{
    mpz_class pz(std::to_string(p));
    mpz_class n = r.num() % pz;
    mpz_class d = r.den() % pz;
    if (n < 0)
        n += pz;
    if (d == 0)
        throw std::domain_error("Fp: prime divides denominator");
    Fp a(0, p), b(0, p);
    a.v_ = std::stoull(n.get_str());
    b.v_ = std::stoull(d.get_str());
    return a / b;
}

void Fp::check_same(const Fp& o) const
{
    if (p_ != o.p_)
        throw std::invalid_argument("Fp: mismatched moduli");
}

Fp Fp::operator-() const
{
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp& Fp::operator+=(const Fp& o)
{
    check_same(o);
    v_ += o.v_;
    if (v_ >= p_)
        v_ -= p_;
    return *this;
}

Fp& Fp::operator-=(const Fp& o)
{
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o)
{
    check_same(o);
    v_ = mulmod(v_, o.v_, p_);
    return *this;
}

Fp Fp::inverse() const
{
    if (v_ == 0)
        throw std::domain_error("Fp: inverse of zero");
    Fp r = *this;
    r.v_ = powmod(v_, p_ - 2, p_);
    return r;
}

Fp& Fp::operator/=(const Fp& o)
{
    check_same(o);
    return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

bool is_probable_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (p % q == 0)
            return p == q;
    }
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, p);
        if (x == 1 || x == p - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

}  // namespace dcrit
