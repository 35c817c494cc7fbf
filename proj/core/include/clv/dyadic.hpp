#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace clv {

// Element of Z[1/2], kept as numerator / 2^exponent with gcd(numerator, 2^exponent) = 1.
// Zero is stored as 0 / 2^0.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(mpz_class n) : num_(std::move(n)), exp_(0) {}
    Dyadic(mpz_class n, unsigned m) : num_(std::move(n)), exp_(m) { normalize(); }

    const mpz_class& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    Dyadic& operator+=(const Dyadic& o) {
        unsigned m = std::max(exp_, o.exp_);
        mpz_class a = num_ << (m - exp_);
        mpz_class b = o.num_ << (m - o.exp_);
        num_ = a + b;
        exp_ = m;
        normalize();
        return *this;
    }
    Dyadic& operator-=(const Dyadic& o) { return *this += -o; }
    Dyadic& operator*=(const Dyadic& o) {
        num_ *= o.num_;
        exp_ += o.exp_;
        normalize();
        return *this;
    }

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    // Prints "p" when the exponent is zero and "p/2^m" otherwise.
    std::string str() const {
        if (exp_ == 0) return num_.get_str();
        return num_.get_str() + "/2^" + std::to_string(exp_);
    }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
            num_ >>= 1;
            --exp_;
        }
    }

    mpz_class num_;
    unsigned exp_;
};

} // namespace clv
