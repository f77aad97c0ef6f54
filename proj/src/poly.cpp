#include "ringcode/poly.hpp"

#include <cctype>
#include <charconv>

namespace ringcode {

CyclicPoly CyclicPoly::from_indices(const ChainRing* ring, std::vector<uint32_t> coeffs) {
    CyclicPoly p(ring, static_cast<uint32_t>(coeffs.size()));
    for (uint32_t idx : coeffs)
        if (idx >= ring->size()) throw std::out_of_range("coefficient index out of range");
    p.c_ = std::move(coeffs);
    return p;
}

CyclicPoly CyclicPoly::constant(const ChainRing* ring, uint32_t n, const RingElem& value) {
    CyclicPoly p(ring, n);
    p.set_coef(0, value);
    return p;
}

void CyclicPoly::set_coef(uint32_t i, const RingElem& value) {
    if (value.ring_ptr() != ring_) throw std::invalid_argument("coefficient from a different ring");
    c_.at(i) = value.index();
}

bool CyclicPoly::is_zero() const {
    for (uint32_t x : c_)
        if (x != 0) return false;
    return true;
}

std::optional<uint32_t> CyclicPoly::degree() const {
    for (uint32_t i = length(); i-- > 0;)
        if (c_[i] != 0) return i;
    return std::nullopt;
}

RingElem CyclicPoly::leading_coef() const {
    auto d = degree();
    if (!d) throw std::logic_error("leading coefficient of the zero word");
    return ring_->element(c_[*d]);
}

namespace {
void require_compatible(const CyclicPoly& a, const CyclicPoly& b) {
    if (a.ring_ptr() != b.ring_ptr() || a.length() != b.length())
        throw std::invalid_argument("operands live in different polynomial rings");
}
}  // namespace

CyclicPoly CyclicPoly::operator+(const CyclicPoly& o) const {
    require_compatible(*this, o);
    CyclicPoly out(ring_, length());
    for (uint32_t i = 0; i < length(); ++i) out.c_[i] = ring_->add_idx(c_[i], o.c_[i]);
    return out;
}

CyclicPoly CyclicPoly::operator-(const CyclicPoly& o) const {
    require_compatible(*this, o);
    CyclicPoly out(ring_, length());
    for (uint32_t i = 0; i < length(); ++i) out.c_[i] = ring_->sub_idx(c_[i], o.c_[i]);
    return out;
}

CyclicPoly CyclicPoly::operator-() const {
    CyclicPoly out(ring_, length());
    for (uint32_t i = 0; i < length(); ++i) out.c_[i] = ring_->neg_idx(c_[i]);
    return out;
}

CyclicPoly CyclicPoly::operator*(const CyclicPoly& o) const {
    require_compatible(*this, o);
    uint32_t n = length();
    CyclicPoly out(ring_, n);
    for (uint32_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            uint32_t s = i + j;
            if (s >= n) s -= n;
            out.c_[s] = ring_->add_idx(out.c_[s], ring_->mul_idx(c_[i], o.c_[j]));
        }
    }
    return out;
}

CyclicPoly CyclicPoly::scaled(const RingElem& s) const {
    if (s.ring_ptr() != ring_) throw std::invalid_argument("scalar from a different ring");
    CyclicPoly out(ring_, length());
    for (uint32_t i = 0; i < length(); ++i) out.c_[i] = ring_->mul_idx(c_[i], s.index());
    return out;
}

CyclicPoly CyclicPoly::shifted(uint32_t j) const {
    uint32_t n = length();
    j %= n;
    CyclicPoly out(ring_, n);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t s = i + j;
        if (s >= n) s -= n;
        out.c_[s] = c_[i];
    }
    return out;
}

CyclicPoly CyclicPoly::pow(uint64_t e) const {
    CyclicPoly base = *this;
    CyclicPoly out = constant(ring_, length(), ring_->one());
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

CyclicPoly CyclicPoly::reciprocal() const {
    auto d = degree();
    if (!d) return *this;
    CyclicPoly out(ring_, length());
    for (uint32_t i = 0; i <= *d; ++i) out.c_[i] = c_[*d - i];
    return out;
}

CyclicPoly CyclicPoly::reversed_word() const {
    uint32_t n = length();
    CyclicPoly out(ring_, n);
    for (uint32_t i = 0; i < n; ++i) out.c_[n - 1 - i] = c_[i];
    return out;
}

CyclicPoly CyclicPoly::rc_image(const RingElem& u, const RingElem& k) const {
    if (!validate_uk(u, k)) throw std::invalid_argument("invalid (u,k) pair");
    if (u.ring_ptr() != ring_) throw std::invalid_argument("(u,k) from a different ring");
    uint32_t n = length();
    uint32_t uinv = ring_->inv_idx(u.index());
    CyclicPoly out(ring_, n);
    for (uint32_t i = 0; i < n; ++i)
        out.c_[n - 1 - i] = ring_->mul_idx(uinv, ring_->sub_idx(k.index(), c_[i]));
    return out;
}

uint64_t CyclicPoly::pack() const {
    constexpr uint64_t kLimit = 1ull << 62;
    uint64_t cap = 1;
    for (uint32_t i = 0; i < length(); ++i) {
        if (cap > kLimit / ring_->size())
            throw std::overflow_error("word space does not fit in a packed integer");
        cap *= ring_->size();
    }
    uint64_t acc = 0;
    for (uint32_t i = length(); i-- > 0;) acc = acc * ring_->size() + c_[i];
    return acc;
}

CyclicPoly CyclicPoly::unpack(const ChainRing* ring, uint32_t n, uint64_t packed) {
    CyclicPoly out(ring, n);
    for (uint32_t i = 0; i < n; ++i) {
        out.c_[i] = static_cast<uint32_t>(packed % ring->size());
        packed /= ring->size();
    }
    if (packed != 0) throw std::out_of_range("packed value too large for this word length");
    return out;
}

std::string CyclicPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (uint32_t i = 0; i < length(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string coef = ring_->render(c_[i]);
        if (i == 0) {
            out += coef;
            continue;
        }
        std::string power = (i == 1) ? "z" : "z^" + std::to_string(i);
        if (coef == "1") {
            out += power;
        } else if (coef.find('+') != std::string::npos) {
            out += "(" + coef + ")*" + power;
        } else {
            out += coef + "*" + power;
        }
    }
    return out;
}

CyclicPoly zero_rc_word(const ChainRing& ring, uint32_t n, const RingElem& u, const RingElem& k) {
    return CyclicPoly(&ring, n).rc_image(u, k);
}

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*, term := factor
// (['*'] factor)*, factor := atom ['^' INT], atom := INT | v | x | z | h |
// '(' expr ')'. Values are words in R[z]/(z^n - 1); element parsing uses
// n = 1 with z disabled.
class ExprParser {
public:
    ExprParser(const ChainRing& ring, uint32_t n, std::string_view text, bool allow_z)
        : ring_(ring), n_(n), text_(text), allow_z_(allow_z) {}

    CyclicPoly run() {
        CyclicPoly value = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("expression: trailing characters at '" +
                                        std::string(text_.substr(pos_)) + "'");
        return value;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_atom() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'v' || c == 'x' ||
               c == 'z' || c == 'h';
    }

    uint64_t integer(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start)
            throw std::invalid_argument(std::string("expression: expected ") + what);
        uint64_t value = 0;
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
        return value;
    }

    CyclicPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw std::invalid_argument("expression: unexpected end");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CyclicPoly::constant(&ring_, n_, ring_.from_int(integer("integer")));
        if (c == '(') {
            ++pos_;
            CyclicPoly inner = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw std::invalid_argument("expression: missing ')'");
            ++pos_;
            return inner;
        }
        if (c == 'v') {
            ++pos_;
            if (ring_.family() != RingFamily::NilpotentFieldExtension)
                throw std::invalid_argument("expression: 'v' is not defined in this ring");
            return CyclicPoly::constant(&ring_, n_, ring_.gamma());
        }
        if (c == 'x') {
            ++pos_;
            if (ring_.residue_degree() < 2)
                throw std::invalid_argument("expression: 'x' needs an extension field");
            return CyclicPoly::constant(&ring_, n_,
                                        ring_.element(static_cast<uint32_t>(ring_.prime())));
        }
        if (c == 'z' || c == 'h') {
            ++pos_;
            if (!allow_z_)
                throw std::invalid_argument(std::string("expression: '") + c +
                                            "' is not valid in a ring element");
            CyclicPoly zp(&ring_, n_);
            zp.set_coef(1 % n_, ring_.one());
            if (c == 'h') zp = zp + CyclicPoly::constant(&ring_, n_, ring_.one());
            return zp;
        }
        throw std::invalid_argument(std::string("expression: unexpected character '") + c + "'");
    }

    CyclicPoly factor() {
        CyclicPoly base = atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            uint64_t e = integer("exponent");
            if (e > (1 << 20)) throw std::invalid_argument("expression: exponent too large");
            return base.pow(e);
        }
        return base;
    }

    CyclicPoly term() {
        CyclicPoly value = factor();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                value = value * factor();
            } else if (peek_atom()) {
                value = value * factor();
            } else {
                return value;
            }
        }
    }

    CyclicPoly expr() {
        skip_ws();
        bool negate = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            negate = true;
        }
        CyclicPoly value = term();
        if (negate) value = -value;
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                char op = text_[pos_++];
                CyclicPoly rhs = term();
                value = (op == '+') ? value + rhs : value - rhs;
            } else {
                return value;
            }
        }
    }

    const ChainRing& ring_;
    uint32_t n_;
    std::string_view text_;
    bool allow_z_;
    size_t pos_ = 0;
};

}  // namespace

CyclicPoly parse_poly(const ChainRing& ring, uint32_t n, std::string_view text) {
    if (n == 0) throw std::invalid_argument("word length must be positive");
    return ExprParser(ring, n, text, true).run();
}

RingElem parse_element(const ChainRing& ring, std::string_view text) {
    CyclicPoly p = ExprParser(ring, 1, text, false).run();
    return p.coef(0);
}

}  // namespace ringcode
