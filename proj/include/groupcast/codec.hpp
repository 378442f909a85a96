#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupcast/coloring.hpp"
#include "groupcast/conflict_graph.hpp"
#include "groupcast/gf.hpp"
#include "groupcast/rational.hpp"

namespace groupcast {

// chi_l x |c| Vandermonde generator over GF(2^q): row i, column j holds
// alpha_j^i with alpha_j the (j+1)-th nonzero field element. Any subset of
// at most chi_l columns is linearly independent.
struct GeneratorMatrix {
    int rows = 0;
    int cols = 0;
    int q = 8;
    std::vector<uint32_t> a;  // row-major

    uint32_t at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

GeneratorMatrix build_mds_generator(int k, int ncols, int q);

// smallest degree >= q_requested with 2^q > ncols
int auto_field_degree(int ncols, int q_requested);

// rank of the submatrix formed by the given columns
int generator_subset_rank(const GeneratorMatrix& gen, const std::vector<int>& columns);

using SymbolMap = std::map<PacketLabel, uint32_t>;

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// X = sum over distinct requested packets s of omega_s * v_{color(s)}.
// The coloring must be packet-consistent; symbols must cover every packet in
// the graph.
std::vector<uint32_t> encode(const ConflictGraph& g, const LocalColoringResult& col,
                             const GeneratorMatrix& gen, const SymbolMap& symbols);

// Subtracts the user's cached contributions from the codeword and solves the
// residual system by Gaussian elimination; every requested symbol must come
// out uniquely determined (anything else indicates an encoder/coloring bug).
SymbolMap decode_user(const ConflictGraph& g, const LocalColoringResult& col,
                      const GeneratorMatrix& gen, int user, const std::vector<uint32_t>& codeword,
                      const SymbolMap& cached_symbols);

// Baseline: smallest nu such that nu x |S| random coding matrices leave every
// user's requested packets uniquely decodable in all trials; returns
// nu / C(n,t) file units. Deterministic for a fixed seed.
Rational random_linear_rate(const ConflictGraph& g, int trials, int q = 16,
                            uint64_t seed = 0x67726f757063ULL);

std::string codeword_to_hex(const std::vector<uint32_t>& codeword, int q);
std::vector<uint32_t> codeword_from_hex(const std::string& text, int q);

// Splits raw file bytes into num_chunks equal packets of GF(2^q) symbols
// (zero-padded); q must be 8 or 16.
std::vector<std::vector<uint32_t>> split_file_symbols(const std::vector<uint8_t>& bytes,
                                                      long long num_chunks, int q);

}  // namespace groupcast
