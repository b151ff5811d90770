#ifndef BETTIPAIR_FP_HPP
#define BETTIPAIR_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace bettipair {

using i64 = std::int64_t;

// Arithmetic in Z/p for a prime p. Elements are canonical representatives
// in [0, p).  p stays small (default 32003), so products fit in i64 with
// room to spare.
class PrimeField {
public:
    explicit PrimeField(i64 p = 32003) : p_(p) {
        if (p < 2) throw std::invalid_argument("modulus must be >= 2");
        for (i64 q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("modulus must be prime");
    }

    i64 p() const { return p_; }

    i64 reduce(i64 a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    i64 add(i64 a, i64 b) const { i64 r = a + b; return r >= p_ ? r - p_ : r; }
    i64 sub(i64 a, i64 b) const { i64 r = a - b; return r < 0 ? r + p_ : r; }
    i64 neg(i64 a) const { return a == 0 ? 0 : p_ - a; }
    i64 mul(i64 a, i64 b) const { return (a * b) % p_; }

    i64 pow(i64 a, i64 e) const {
        i64 r = 1 % p_;
        a = reduce(a);
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    i64 inv(i64 a) const {
        a = reduce(a);
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    i64 p_;
};

} // namespace bettipair

#endif
