#include "ringcode/cyclic_code.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringcode {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Coefficientwise sum of two packed words. XOR whenever every digit position
// adds without interaction (characteristic 2 with a power-of-two digit base).
struct PackedAdder {
    uint64_t size;
    uint32_t n;
    bool use_xor;

    PackedAdder(const ChainRing& ring, uint32_t length)
        : size(ring.size()),
          n(length),
          use_xor(ring.prime() == 2 && (ring.family() == RingFamily::NilpotentFieldExtension ||
                                        ring.size() == 2)) {}

    uint64_t operator()(uint64_t a, uint64_t b) const {
        if (use_xor) return a ^ b;
        uint64_t out = 0, weight = 1;
        for (uint32_t i = 0; i < n; ++i) {
            uint64_t da = a % size, db = b % size;
            uint64_t d = da + db;
            if (d >= size) d -= size;
            out += d * weight;
            a /= size;
            b /= size;
            weight *= size;
        }
        return out;
    }
};

// Membership structure for the closure: a bitmap when the ambient space is
// small enough, a hash set beyond that.
class WordSet {
public:
    explicit WordSet(uint64_t space) {
        if (space <= kBitmapCap) bits_.assign((space + 63) / 64, 0);
    }

    bool test(uint64_t w) const {
        if (!bits_.empty()) return (bits_[w >> 6] >> (w & 63)) & 1;
        return set_.count(w) != 0;
    }

    void insert(uint64_t w) {
        if (!bits_.empty())
            bits_[w >> 6] |= 1ull << (w & 63);
        else
            set_.insert(w);
    }

private:
    static constexpr uint64_t kBitmapCap = 1ull << 26;
    std::vector<uint64_t> bits_;
    std::unordered_set<uint64_t> set_;
};

}  // namespace

CyclicCode CyclicCode::span(const ChainRing& ring, uint32_t n,
                            const std::vector<CyclicPoly>& generators, uint64_t max_words) {
    if (n == 0) throw std::invalid_argument("code length must be positive");

    uint64_t space = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (space > max_words / ring.size())
            throw std::length_error("codeword space |R|^n exceeds the enumeration bound");
        space *= ring.size();
    }

    for (const CyclicPoly& g : generators)
        if (g.ring_ptr() != &ring || g.length() != n)
            throw std::invalid_argument("generator does not live in the requested ring and length");

    // The code is the additive closure of every scalar multiple of every
    // cyclic shift of every generator.
    std::vector<uint64_t> base;
    for (const CyclicPoly& g : generators) {
        for (uint32_t j = 0; j < n; ++j) {
            CyclicPoly shifted = g.shifted(j);
            for (uint32_t r = 1; r < ring.size(); ++r) {
                uint64_t w = shifted.scaled(ring.element(r)).pack();
                if (w != 0) base.push_back(w);
            }
        }
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());

    PackedAdder add(ring, n);
    WordSet seen(space);
    std::vector<uint64_t> members;
    members.reserve(64);
    seen.insert(0);
    members.push_back(0);

    for (uint64_t b : base) {
        if (seen.test(b)) continue;
        // members is a subgroup here; adjoin the cosets members + t*b until
        // t*b lands back inside it.
        size_t subgroup = members.size();
        uint64_t cur = b;
        while (!seen.test(cur)) {
            for (size_t i = 0; i < subgroup; ++i) {
                uint64_t w = add(members[i], cur);
                seen.insert(w);
                members.push_back(w);
            }
            cur = add(cur, b);
        }
    }

    std::sort(members.begin(), members.end());

    CyclicCode code(&ring, n);
    code.gens_ = generators;
    code.words_ = std::move(members);
    for (uint64_t w : code.words_) code.fingerprint_ ^= splitmix64(w);
    code.extract_minimal_generators();
    return code;
}

bool CyclicCode::contains(const CyclicPoly& w) const {
    if (w.ring_ptr() != ring_ || w.length() != n_)
        throw std::invalid_argument("membership query from a different ring or length");
    return contains_packed(w.pack());
}

bool CyclicCode::contains_packed(uint64_t packed) const {
    return std::binary_search(words_.begin(), words_.end(), packed);
}

bool CyclicCode::same_words(const CyclicCode& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && words_ == o.words_;
}

void CyclicCode::extract_minimal_generators() {
    uint32_t nu = ring_->nilpotency();
    // t[d] = minimal leading valuation among codewords of degree exactly d.
    std::vector<uint32_t> tier(n_, nu + 1);
    std::vector<CyclicPoly> unpacked;
    unpacked.reserve(words_.size());
    for (uint64_t w : words_) {
        unpacked.push_back(CyclicPoly::unpack(ring_, n_, w));
        auto d = unpacked.back().degree();
        if (!d) continue;
        uint32_t lv = unpacked.back().leading_coef().valuation();
        tier[*d] = std::min(tier[*d], lv);
    }
    // The zero word has no degree, so a zero code leaves every tier untouched
    // and S stays empty.
    uint32_t emitted_min = nu + 1;
    for (uint32_t d = 0; d < n_ && emitted_min > 0; ++d) {
        if (tier[d] >= emitted_min) continue;
        // Pick the lexicographically smallest achiever whose coefficients all
        // have valuation >= tier[d], so that f = gamma^i * h with h monic up
        // to a unit.
        const CyclicPoly* best = nullptr;
        for (const CyclicPoly& w : unpacked) {
            auto deg = w.degree();
            if (!deg || *deg != d) continue;
            if (w.leading_coef().valuation() != tier[d]) continue;
            if (!leading_structure_ok(w, tier[d])) continue;
            if (!best) {
                best = &w;
                continue;
            }
            for (uint32_t i = 0; i < n_; ++i) {
                if (w.coef_idx(i) == best->coef_idx(i)) continue;
                if (w.coef_idx(i) < best->coef_idx(i)) best = &w;
                break;
            }
        }
        if (!best)
            throw std::logic_error("no generator of the expected form at a valuation drop");
        sgens_.emplace_back(*best, tier[d]);
        emitted_min = tier[d];
    }
}

std::vector<std::pair<uint32_t, uint32_t>> CyclicCode::degree_profile() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(sgens_.size());
    for (const auto& [f, i] : sgens_) out.emplace_back(*f.degree(), i);
    return out;
}

bool leading_structure_ok(const CyclicPoly& f, uint32_t i) {
    auto d = f.degree();
    if (!d) return false;
    if (f.leading_coef().valuation() != i) return false;
    for (uint32_t j = 0; j < f.length(); ++j)
        if (f.coef(j).valuation() < i) return false;
    return true;
}

}  // namespace ringcode
