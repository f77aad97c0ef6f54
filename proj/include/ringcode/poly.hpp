#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/chain_ring.hpp"

namespace ringcode {

/// A word of length n over a chain ring, viewed as the residue of a
/// polynomial in R[z]/(z^n - 1). Coefficients are stored as canonical ring
/// indices, ascending powers of z, always exactly n of them.
class CyclicPoly {
public:
    CyclicPoly(const ChainRing* ring, uint32_t n) : ring_(ring), c_(n, 0) {}
    static CyclicPoly from_indices(const ChainRing* ring, std::vector<uint32_t> coeffs);
    static CyclicPoly constant(const ChainRing* ring, uint32_t n, const RingElem& value);

    const ChainRing& ring() const { return *ring_; }
    const ChainRing* ring_ptr() const { return ring_; }
    uint32_t length() const { return static_cast<uint32_t>(c_.size()); }

    RingElem coef(uint32_t i) const { return ring_->element(c_.at(i)); }
    uint32_t coef_idx(uint32_t i) const { return c_.at(i); }
    void set_coef(uint32_t i, const RingElem& value);

    bool is_zero() const;
    /// Largest i with a nonzero coefficient; empty for the zero word.
    std::optional<uint32_t> degree() const;
    RingElem leading_coef() const;

    CyclicPoly operator+(const CyclicPoly& o) const;
    CyclicPoly operator-(const CyclicPoly& o) const;
    CyclicPoly operator-() const;
    /// Cyclic convolution, i.e. the product in R[z]/(z^n - 1).
    CyclicPoly operator*(const CyclicPoly& o) const;
    CyclicPoly scaled(const RingElem& s) const;
    /// Multiplication by z^j, a cyclic shift of the coefficients.
    CyclicPoly shifted(uint32_t j) const;
    CyclicPoly pow(uint64_t e) const;

    bool operator==(const CyclicPoly& o) const { return ring_ == o.ring_ && c_ == o.c_; }
    bool operator!=(const CyclicPoly& o) const { return !(*this == o); }

    /// z^deg * a(1/z): the coefficient list reversed down to the degree.
    /// The zero word reciprocates to itself.
    CyclicPoly reciprocal() const;
    /// The word read back to front: coefficient i moves to n-1-i.
    CyclicPoly reversed_word() const;
    /// Coefficientwise complement under (u,k), then word reversal.
    CyclicPoly rc_image(const RingElem& u, const RingElem& k) const;

    /// Mixed-radix encoding sum c_i * size^i. Throws std::overflow_error when
    /// size^n does not fit in 63 bits.
    uint64_t pack() const;
    static CyclicPoly unpack(const ChainRing* ring, uint32_t n, uint64_t packed);

    std::string str() const;

private:
    const ChainRing* ring_;
    std::vector<uint32_t> c_;
};

/// The rc image of the zero word: every coefficient equals u^{-1} k.
CyclicPoly zero_rc_word(const ChainRing& ring, uint32_t n, const RingElem& u, const RingElem& k);

/// Evaluates a polynomial expression over R[z]/(z^n - 1). Accepts sums and
/// products of integers, parenthesized subexpressions, and the symbols z,
/// h = z+1, v (the nilpotent generator, field family only) and x (the residue
/// field generator, extension fields only), with ^ for powers and either *
/// or juxtaposition for products. Throws std::invalid_argument on syntax
/// errors or symbols the ring does not have.
CyclicPoly parse_poly(const ChainRing& ring, uint32_t n, std::string_view text);

/// Evaluates a ring element expression: the same grammar without z and h.
RingElem parse_element(const ChainRing& ring, std::string_view text);

}  // namespace ringcode
