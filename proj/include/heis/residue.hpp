#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heis {

struct modulus_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct coprime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// alpha_(n): the unique representative of [alpha]_n in {0,...,n-1},
// i.e. alpha - floor(alpha/n)*n with mathematical floor.
inline long long basic_rep(long long alpha, long long n) {
    if (n <= 0) throw modulus_error("basic_rep: modulus must be positive");
    long long r = alpha % n;
    return r < 0 ? r + n : r;
}

// Hat map: alpha_(n) + floor(alpha_(n)/2)*n. The argument is reduced to the
// basic representative first; representative-independence mod 2n holds for
// n = 2(2k+1) and is asserted in tests, not here.
inline long long hat(long long alpha, long long n) {
    long long r = basic_rep(alpha, n);
    return r + (r / 2) * n;
}

// Integer residue class with its modulus attached. Mixed-modulus arithmetic
// is a hard error.
class Residue {
public:
    Residue() : value_(0), modulus_(1) {}
    Residue(long long value, long long modulus)
        : value_(basic_rep(value, modulus)), modulus_(modulus) {}

    long long value() const { return value_; }
    long long modulus() const { return modulus_; }

    friend Residue operator+(Residue x, Residue y) {
        x.check(y);
        return Residue(x.value_ + y.value_, x.modulus_);
    }
    friend Residue operator-(Residue x, Residue y) {
        x.check(y);
        return Residue(x.value_ - y.value_, x.modulus_);
    }
    friend Residue operator*(Residue x, Residue y) {
        x.check(y);
        return Residue(x.value_ * y.value_, x.modulus_);
    }
    Residue operator-() const { return Residue(-value_, modulus_); }

    friend bool operator==(const Residue& x, const Residue& y) {
        return x.value_ == y.value_ && x.modulus_ == y.modulus_;
    }
    friend bool operator!=(const Residue& x, const Residue& y) { return !(x == y); }

private:
    void check(const Residue& other) const {
        if (modulus_ != other.modulus_)
            throw modulus_error("Residue: modulus mismatch (" +
                                std::to_string(modulus_) + " vs " +
                                std::to_string(other.modulus_) + ")");
    }
    long long value_;
    long long modulus_;
};

// mu1*d2 - mu2*d1 = 1.
struct BezoutPair {
    long long mu1;
    long long mu2;
    long long d1;
    long long d2;
};

BezoutPair bezout(long long d1, long long d2);

std::pair<Residue, Residue> crt_decompose(const Residue& r, long long d1, long long d2);
Residue crt_compose(const Residue& a, const Residue& b);

}  // namespace heis
