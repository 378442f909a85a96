#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace groupcast {

// C(n,k); 0 when k < 0 or k > n. Exact for the instance sizes this library
// accepts (n <= 62 guarded).
long long binomial(int n, int k);

// All k-subsets of {1..n} as bitmasks (bit u-1 set means user u is a member),
// ordered lexicographically by their sorted element lists.
std::vector<uint32_t> subsets_of_size(int n, int k);

std::vector<int> subset_elements(uint32_t mask);

// lexicographic order on sorted element lists: a < b iff the smallest element
// on which they differ belongs to a
bool subset_lex_less(uint32_t a, uint32_t b);

std::string subset_str(uint32_t mask);  // "{1,3}"

}  // namespace groupcast
