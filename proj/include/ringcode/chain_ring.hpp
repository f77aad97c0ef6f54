#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringcode {

class ChainRing;

/// One element of a ChainRing, stored as its canonical index. A small value
/// type; the ring it points to must outlive it.
class RingElem {
public:
    RingElem() : ring_(nullptr), idx_(0) {}
    RingElem(const ChainRing* ring, uint32_t idx) : ring_(ring), idx_(idx) {}

    const ChainRing& ring() const { return *ring_; }
    const ChainRing* ring_ptr() const { return ring_; }
    uint32_t index() const { return idx_; }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;

    bool operator==(const RingElem& o) const { return ring_ == o.ring_ && idx_ == o.idx_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }
    /// Canonical order: ascending index. Only meaningful within one ring.
    bool operator<(const RingElem& o) const { return idx_ < o.idx_; }

    uint32_t valuation() const;
    bool is_unit() const;
    bool is_zero() const { return idx_ == 0; }
    RingElem inverse() const;
    std::vector<uint8_t> coords() const;
    std::string str() const;

private:
    const ChainRing* ring_;
    uint32_t idx_;
};

enum class RingFamily {
    IntegersModPrimePower,    // Z_{p^a}
    NilpotentFieldExtension,  // F_{p^m}[v]/(v^e)
};

/// A finite commutative chain ring from one of the two supported families.
///
/// Elements are canonical indices in [0, size). For Z_{p^a} the index is the
/// integer value; for F_{p^m}[v]/(v^e) it is the mixed-radix value of the
/// v-digits (base q = p^m, least significant first), each v-digit being a
/// field element indexed by its base-p coordinate value. The maximal ideal is
/// generated by gamma (p, resp. v) with gamma^nu = 0 and gamma^(nu-1) != 0.
///
/// Instances are immutable after construction and are referenced by pointer
/// from RingElem and CyclicPoly, so they are neither copyable nor movable.
class ChainRing {
public:
    static constexpr uint64_t kDefaultMaxSize = 1ull << 16;

    /// Parses a ring spec: "Z<n>" with n = p^a, or "F<q>[v]/v^<e>" with
    /// q = p^m, optionally followed by ";mod=<monic poly in x>" when m > 1.
    /// Throws std::invalid_argument on bad syntax, a size that is not a prime
    /// power, a reducible or non-monic modulus, or size > max_size.
    static ChainRing from_spec(std::string_view spec, uint64_t max_size = kDefaultMaxSize);

    ChainRing(const ChainRing&) = delete;
    ChainRing& operator=(const ChainRing&) = delete;

    RingFamily family() const { return family_; }
    uint64_t size() const { return size_; }
    uint64_t prime() const { return p_; }
    /// Residue field degree m over Z_p (1 for the integer family).
    uint32_t residue_degree() const { return m_; }
    /// q = p^m, the residue field size (p for the integer family).
    uint64_t residue_field_size() const { return q_; }
    /// a for Z_{p^a}, e for F_{p^m}[v]/(v^e).
    uint32_t exponent() const { return exp_; }
    uint32_t nilpotency() const { return nu_; }
    /// Modulus coefficients (base-p digits, ascending), empty when m == 1.
    const std::vector<uint8_t>& field_modulus() const { return modulus_; }
    std::string spec_string() const;

    RingElem zero() const { return {this, 0}; }
    RingElem one() const { return {this, one_idx_}; }
    RingElem gamma() const { return {this, gamma_idx_}; }
    RingElem element(uint32_t idx) const;
    /// Canonical image of an integer under Z -> R.
    RingElem from_int(uint64_t n) const;

    // Raw index arithmetic. Indices must be < size().
    uint32_t add_idx(uint32_t x, uint32_t y) const;
    uint32_t sub_idx(uint32_t x, uint32_t y) const { return add_idx(x, neg_idx(y)); }
    uint32_t neg_idx(uint32_t x) const;
    uint32_t mul_idx(uint32_t x, uint32_t y) const;
    uint32_t pow_idx(uint32_t x, uint64_t e) const;
    /// Throws std::domain_error unless x is a unit.
    uint32_t inv_idx(uint32_t x) const;
    /// Largest t <= nu with x in <gamma^t>; nu iff x == 0, 0 iff x is a unit.
    uint32_t valuation_idx(uint32_t x) const;
    bool is_unit_idx(uint32_t x) const { return valuation_idx(x) == 0; }

    /// Canonical coordinate vector over Z_p, least significant first.
    /// Length a for Z_{p^a}, m*e for the field family.
    std::vector<uint8_t> coords(uint32_t x) const;
    std::string render(uint32_t x) const;

    /// Number of units: size - size/q.
    uint64_t unit_count() const { return size_ - size_ / q_; }

private:
    ChainRing() = default;
    // Only from_spec moves a ChainRing, before any RingElem can point at it.
    ChainRing(ChainRing&&) = default;

    void init_common(uint64_t max_size);
    void build_field_tables();
    uint32_t fadd(uint32_t a, uint32_t b) const;
    uint32_t fneg(uint32_t a) const;
    uint32_t fmul(uint32_t a, uint32_t b) const;
    uint32_t fmul_direct(uint32_t a, uint32_t b) const;
    std::string render_field_elem(uint32_t a) const;

    RingFamily family_ = RingFamily::IntegersModPrimePower;
    uint64_t p_ = 2;
    uint32_t m_ = 1;    // residue field degree
    uint32_t exp_ = 1;  // a or e
    uint32_t nu_ = 1;
    uint64_t q_ = 2;    // p^m
    uint64_t size_ = 2;
    uint32_t one_idx_ = 1;
    uint32_t gamma_idx_ = 0;
    std::vector<uint8_t> modulus_;  // monic, degree m, base-p digits ascending
    std::vector<uint32_t> fexp_;    // generator powers, length q-1 (m > 1 only)
    std::vector<uint32_t> flog_;    // discrete logs, length q (m > 1 only)
};

/// Parses a ring spec string. See ChainRing::from_spec.
inline ChainRing make_ring(std::string_view spec, uint64_t max_size = ChainRing::kDefaultMaxSize) {
    return ChainRing::from_spec(spec, max_size);
}

/// All units of the ring in canonical (ascending index) order.
std::vector<RingElem> units(const ChainRing& ring);

/// True iff u is a unit with u^2 = 1 and u*k = k. Throws std::invalid_argument
/// when u and k come from different rings.
bool validate_uk(const RingElem& u, const RingElem& k);

/// The unique x with r + u*x = k, i.e. u^{-1}(k - r). Requires validate_uk.
RingElem complement(const RingElem& r, const RingElem& u, const RingElem& k);

inline uint32_t valuation(const RingElem& x) { return x.valuation(); }
inline RingElem invert(const RingElem& x) { return x.inverse(); }

}  // namespace ringcode
