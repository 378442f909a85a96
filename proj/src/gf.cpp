#include "groupcast/gf.hpp"

#include <stdexcept>

namespace groupcast {

namespace {

int poly_degree(uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

uint32_t poly_mod(uint32_t a, uint32_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (a != 0 && da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

bool is_irreducible(uint32_t p) {
    int d = poly_degree(p);
    for (uint32_t div = 2; poly_degree(div) <= d / 2; ++div) {
        if (poly_mod(p, div) == 0) return false;
    }
    return true;
}

}  // namespace

uint32_t Field::smallest_irreducible(int degree) {
    if (degree < 1 || degree > 16) throw std::invalid_argument("field degree must be in 1..16");
    uint32_t lo = 1u << degree;
    for (uint32_t p = lo + 1; p < (lo << 1); p += 2) {  // constant term must be 1
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(int degree) : q_(degree), poly_(smallest_irreducible(degree)) {}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << q_)) a ^= poly_;
    }
    return r;
}

uint32_t Field::pow(uint32_t a, unsigned long long e) const {
    uint32_t r = 1;
    while (e != 0) {
        if (e & 1ull) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    return pow(a, size() - 2);
}

}  // namespace groupcast
