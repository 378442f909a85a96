#pragma once

#include <cstdint>

namespace groupcast {

// GF(2^q) for 1 <= q <= 16. Addition is XOR; multiplication reduces modulo
// the numerically smallest irreducible polynomial of degree q (0x11B for q=8).
class Field {
public:
    explicit Field(int degree);

    int degree() const { return q_; }
    uint32_t modulus() const { return poly_; }
    uint32_t size() const { return 1u << q_; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, unsigned long long e) const;
    uint32_t inv(uint32_t a) const;  // throws on 0
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    static uint32_t smallest_irreducible(int degree);

private:
    int q_;
    uint32_t poly_;  // with the x^q bit set
};

}  // namespace groupcast
