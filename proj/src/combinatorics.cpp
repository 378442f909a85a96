#include "groupcast/combinatorics.hpp"

#include <stdexcept>

namespace groupcast {

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n > 62) throw std::invalid_argument("binomial: n too large for exact 64-bit evaluation");
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        // multiply before divide stays exact because r already holds C(n', i-1)
        __int128 t = (__int128)r * (unsigned)(n - k + i);
        r = (unsigned long long)(t / i);
    }
    return (long long)r;
}

std::vector<uint32_t> subsets_of_size(int n, int k) {
    if (n > 32) throw std::invalid_argument("subset bitmasks support at most 32 elements");
    std::vector<uint32_t> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;  // 0-based users
    while (true) {
        uint32_t mask = 0;
        for (int i : idx) mask |= (1u << i);
        out.push_back(mask);
        int p = k - 1;
        while (p >= 0 && idx[p] == n - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int j = p + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<int> subset_elements(uint32_t mask) {
    std::vector<int> els;
    for (int u = 1; mask != 0; ++u, mask >>= 1) {
        if (mask & 1u) els.push_back(u);
    }
    return els;
}

bool subset_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    uint32_t d = a ^ b;
    uint32_t lowest = d & (~d + 1u);
    return (a & lowest) != 0;
}

std::string subset_str(uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int u : subset_elements(mask)) {
        if (!first) s += ",";
        s += std::to_string(u);
        first = false;
    }
    return s + "}";
}

}  // namespace groupcast
