#include "ncmoments/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ncmoments {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw InvalidArgument("Rational: zero denominator");
    }
    normalize();
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
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(const std::string& text) {
    auto strip = [](std::string s) {
        const char* ws = " \t";
        auto b = s.find_first_not_of(ws);
        auto e = s.find_last_not_of(ws);
        if (b == std::string::npos) return std::string();
        return s.substr(b, e - b + 1);
    };
    std::string s = strip(text);
    if (s.empty()) {
        throw InvalidArgument("Rational: empty string");
    }
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt n(strip(s.substr(0, slash)));
        BigInt d(strip(s.substr(slash + 1)));
        return Rational(std::move(n), std::move(d));
    } catch (const std::runtime_error&) {
        throw InvalidArgument("Rational: cannot parse '" + text + "'");
    }
}

double Rational::to_double() const {
    using boost::multiprecision::cpp_rational;
    return static_cast<double>(cpp_rational(num_, den_));
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw InvalidArgument("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

BigInt factorial(int n) {
    if (n < 0) {
        throw InvalidArgument("factorial: negative argument");
    }
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

BigInt catalan(int n) {
    if (n < 0) {
        throw InvalidArgument("catalan: negative argument");
    }
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) {
        throw InvalidArgument("ipow: negative exponent");
    }
    BigInt out = 1;
    for (int k = 0; k < exp; ++k) {
        out *= base;
    }
    return out;
}

}  // namespace ncmoments
