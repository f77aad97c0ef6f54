#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ringcode/chain_ring.hpp"
#include "ringcode/poly.hpp"

namespace ringcode {

/// A cyclic code of length n over a chain ring: the smallest subset of
/// R[z]/(z^n - 1) containing the generators and closed under addition,
/// scalar multiplication, and multiplication by z. The codeword set is
/// enumerated in full, sorted by packed value.
class CyclicCode {
public:
    static constexpr uint64_t kDefaultMaxWords = 1ull << 24;

    /// Builds the code by worklist closure. Throws std::length_error when
    /// |R|^n exceeds max_words and std::invalid_argument when a generator
    /// lives in a different ring or has a different length.
    static CyclicCode span(const ChainRing& ring, uint32_t n,
                           const std::vector<CyclicPoly>& generators,
                           uint64_t max_words = kDefaultMaxWords);

    const ChainRing& ring() const { return *ring_; }
    uint32_t length() const { return n_; }
    uint64_t size() const { return words_.size(); }
    const std::vector<CyclicPoly>& generators() const { return gens_; }

    /// Codewords as packed values, ascending.
    const std::vector<uint64_t>& packed_words() const { return words_; }
    CyclicPoly word(uint64_t i) const { return CyclicPoly::unpack(ring_, n_, words_.at(i)); }

    bool contains(const CyclicPoly& w) const;
    bool contains_packed(uint64_t packed) const;

    /// Order-independent hash of the codeword set; equal codes hash equal.
    /// Used for dedup prefiltering, always confirmed by same_words.
    uint64_t fingerprint() const { return fingerprint_; }
    bool same_words(const CyclicCode& o) const;

    /// The canonical generating sequence (f_0, i_0), ..., (f_m, i_m):
    /// degrees strictly increase, leading valuations i_j strictly decrease,
    /// each f_j is a codeword of minimal degree whose leading valuation
    /// drops below everything emitted before it. Empty for the zero code.
    const std::vector<std::pair<CyclicPoly, uint32_t>>& minimal_generators() const {
        return sgens_;
    }
    /// The (degree, leading valuation) shape of minimal_generators.
    std::vector<std::pair<uint32_t, uint32_t>> degree_profile() const;

private:
    CyclicCode(const ChainRing* ring, uint32_t n) : ring_(ring), n_(n) {}
    void extract_minimal_generators();

    const ChainRing* ring_;
    uint32_t n_;
    std::vector<CyclicPoly> gens_;
    std::vector<uint64_t> words_;
    uint64_t fingerprint_ = 0;
    std::vector<std::pair<CyclicPoly, uint32_t>> sgens_;
};

/// True iff the leading coefficient of f has valuation exactly i and every
/// coefficient has valuation at least i, so f = gamma^i * h with h having a
/// unit leading coefficient.
bool leading_structure_ok(const CyclicPoly& f, uint32_t i);

}  // namespace ringcode
