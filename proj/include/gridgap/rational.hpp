#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gridgap {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator; every
/// operation is exact. The only lossy accessor is to_double(), which is
/// for human-readable export and must never feed a verification path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}             // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0)
            v_ = Raw(-num, -den);
        else
            v_ = Raw(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" (or a bare integer "p"). The canonical form produced by
    /// str() always carries the "/q" part, q > 0, lowest terms.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    std::string str() const {
        return numerator().str() + "/" + denominator().str();
    }

    /// Lossy float approximation; display only.
    double to_double() const { return static_cast<double>(v_); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    using Raw = boost::multiprecision::cpp_rational;
    Raw v_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
    };
    if (text.empty())
        throw bad();
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto to_big = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')  // cpp_int rejects an explicit plus
            s.remove_prefix(1);
        return BigInt(std::string(s));
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text))
                throw bad();
            return Rational(to_big(text));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw bad();
        return Rational(to_big(num), to_big(den));
    } catch (const std::domain_error&) {
        throw;  // zero denominator: keep the precise message
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace gridgap
