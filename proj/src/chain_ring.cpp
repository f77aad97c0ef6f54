#include "ringcode/chain_ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ringcode {

namespace {

// Splits n into (p, k) with n = p^k, p prime. Throws unless n is a prime power.
std::pair<uint64_t, uint32_t> prime_power(uint64_t n, const std::string& what) {
    if (n < 2) throw std::invalid_argument(what + ": must be at least 2");
    uint64_t p = n;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t k = 0;
    uint64_t t = n;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1)
        throw std::invalid_argument(what + ": " + std::to_string(n) + " is not a prime power");
    return {p, k};
}

uint64_t parse_uint(std::string_view s, size_t& pos, const char* what) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument(std::string("ring spec: expected ") + what);
    uint64_t value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, value);
    if (res.ec != std::errc{})
        throw std::invalid_argument(std::string("ring spec: bad ") + what);
    return value;
}

// Polynomials over Z_p as ascending digit vectors, used only for modulus
// handling at construction time.
using PDigits = std::vector<uint8_t>;

int pdeg(const PDigits& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f by monic g, coefficients mod p.
PDigits pmod(PDigits f, const PDigits& g, uint64_t p) {
    int dg = pdeg(g);
    for (int d = pdeg(f); d >= dg && d >= 0; d = pdeg(f)) {
        uint32_t c = f[d];
        if (c != 0) {
            for (int i = 0; i <= dg; ++i) {
                uint32_t sub = (c * g[i]) % p;
                f[d - dg + i] = static_cast<uint8_t>((f[d - dg + i] + p - sub) % p);
            }
        }
        f[d] = 0;
    }
    return f;
}

bool is_irreducible(const PDigits& f, uint64_t p) {
    int m = pdeg(f);
    if (m < 1) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            PDigits g(d + 1, 0);
            uint64_t t = c;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<uint8_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (pdeg(pmod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

// Strict grammar: sum of terms c, x^k, c*x^k (juxtaposition allowed).
PDigits parse_modulus_text(std::string_view text, uint64_t p) {
    constexpr int kMaxDeg = 64;
    PDigits out(kMaxDeg + 1, 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw std::invalid_argument("modulus: empty polynomial");
            break;
        }
        if (!first) {
            if (text[pos] != '+') throw std::invalid_argument("modulus: expected '+'");
            ++pos;
            skip_ws();
        }
        first = false;
        uint64_t coef = 1;
        bool saw_coef = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = parse_uint(text, pos, "modulus coefficient");
            saw_coef = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        uint64_t expo = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            expo = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                expo = parse_uint(text, pos, "modulus exponent");
                if (expo > kMaxDeg) throw std::invalid_argument("modulus: exponent too large");
            }
        } else if (!saw_coef) {
            throw std::invalid_argument("modulus: expected coefficient or 'x'");
        }
        out[expo] = static_cast<uint8_t>((out[expo] + coef) % p);
    }
    return out;
}

uint64_t checked_pow(uint64_t base, uint32_t e, uint64_t limit) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch in element addition");
    return {ring_, ring_->add_idx(idx_, o.idx_)};
}
RingElem RingElem::operator-(const RingElem& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch in element subtraction");
    return {ring_, ring_->sub_idx(idx_, o.idx_)};
}
RingElem RingElem::operator*(const RingElem& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch in element multiplication");
    return {ring_, ring_->mul_idx(idx_, o.idx_)};
}
RingElem RingElem::operator-() const { return {ring_, ring_->neg_idx(idx_)}; }
uint32_t RingElem::valuation() const { return ring_->valuation_idx(idx_); }
bool RingElem::is_unit() const { return ring_->is_unit_idx(idx_); }
RingElem RingElem::inverse() const { return {ring_, ring_->inv_idx(idx_)}; }
std::vector<uint8_t> RingElem::coords() const { return ring_->coords(idx_); }
std::string RingElem::str() const { return ring_->render(idx_); }

ChainRing ChainRing::from_spec(std::string_view spec, uint64_t max_size) {
    ChainRing r;
    size_t pos = 0;
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    size_t end = spec.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(spec[end - 1]))) --end;
    std::string_view s = spec.substr(pos, end - pos);
    pos = 0;

    if (pos < s.size() && s[pos] == 'Z') {
        ++pos;
        uint64_t n = parse_uint(s, pos, "modulus n in Zn");
        if (pos != s.size()) throw std::invalid_argument("ring spec: trailing characters after Zn");
        auto [p, a] = prime_power(n, "ring spec Zn");
        r.family_ = RingFamily::IntegersModPrimePower;
        r.p_ = p;
        r.m_ = 1;
        r.exp_ = a;
        r.nu_ = a;
        r.q_ = p;
        r.size_ = n;
    } else if (pos < s.size() && s[pos] == 'F') {
        ++pos;
        uint64_t q = parse_uint(s, pos, "field size q in Fq");
        const std::string_view infix = "[v]/v^";
        if (s.substr(pos, infix.size()) != infix)
            throw std::invalid_argument("ring spec: expected \"[v]/v^\" after Fq");
        pos += infix.size();
        uint64_t e = parse_uint(s, pos, "exponent e in v^e");
        if (e < 1) throw std::invalid_argument("ring spec: v-exponent must be positive");
        std::string mod_text;
        if (pos < s.size()) {
            const std::string_view mod_prefix = ";mod=";
            if (s.substr(pos, mod_prefix.size()) != mod_prefix)
                throw std::invalid_argument("ring spec: trailing characters after v-exponent");
            mod_text = std::string(s.substr(pos + mod_prefix.size()));
            if (mod_text.empty()) throw std::invalid_argument("ring spec: empty modulus");
            pos = s.size();
        }
        auto [p, m] = prime_power(q, "ring spec Fq");
        r.family_ = RingFamily::NilpotentFieldExtension;
        r.p_ = p;
        r.m_ = m;
        r.exp_ = static_cast<uint32_t>(e);
        r.nu_ = static_cast<uint32_t>(e);
        r.q_ = q;
        r.size_ = checked_pow(q, r.exp_, max_size);

        if (m == 1) {
            if (!mod_text.empty())
                throw std::invalid_argument("ring spec: modulus is only valid for extension fields");
        } else {
            if (!mod_text.empty()) {
                PDigits f = parse_modulus_text(mod_text, p);
                int deg = pdeg(f);
                if (deg != static_cast<int>(m))
                    throw std::invalid_argument("modulus: degree must equal the extension degree");
                if (f[deg] != 1) throw std::invalid_argument("modulus: must be monic");
                f.resize(m + 1);
                if (!is_irreducible(f, p)) throw std::invalid_argument("modulus: reducible polynomial");
                r.modulus_ = std::move(f);
            } else {
                // Default: the irreducible monic of degree m whose lower
                // coefficient vector has the smallest canonical index.
                for (uint64_t c = 0;; ++c) {
                    if (c >= q) throw std::logic_error("no irreducible modulus found");
                    PDigits f(m + 1, 0);
                    uint64_t t = c;
                    for (uint32_t i = 0; i < m; ++i) {
                        f[i] = static_cast<uint8_t>(t % p);
                        t /= p;
                    }
                    f[m] = 1;
                    if (is_irreducible(f, p)) {
                        r.modulus_ = std::move(f);
                        break;
                    }
                }
            }
        }
    } else {
        throw std::invalid_argument("ring spec: expected 'Z' or 'F'");
    }

    r.init_common(max_size);
    return r;
}

void ChainRing::init_common(uint64_t max_size) {
    if (size_ > max_size)
        throw std::invalid_argument("ring spec: size " + std::to_string(size_) +
                                    " exceeds the configured bound " + std::to_string(max_size));
    one_idx_ = static_cast<uint32_t>(1 % size_);
    gamma_idx_ = static_cast<uint32_t>(q_ % size_);
    if (m_ > 1) build_field_tables();
}

void ChainRing::build_field_tables() {
    // Discrete log tables over the residue field, built once per ring.
    uint64_t q = q_;
    uint32_t gen = 0;
    for (uint32_t cand = 2; cand < q; ++cand) {
        uint64_t ord = 1;
        uint32_t x = cand;
        while (x != 1) {
            x = fmul_direct(x, cand);
            ++ord;
            if (ord > q) throw std::logic_error("field generator search diverged");
        }
        if (ord == q - 1) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no multiplicative generator found");
    fexp_.assign(q - 1, 0);
    flog_.assign(q, 0);
    uint32_t x = 1;
    for (uint64_t i = 0; i + 1 < q; ++i) {
        fexp_[i] = x;
        flog_[x] = static_cast<uint32_t>(i);
        x = fmul_direct(x, gen);
    }
}

uint32_t ChainRing::fmul_direct(uint32_t a, uint32_t b) const {
    std::array<uint32_t, 40> da{}, db{}, prod{};
    uint32_t t = a;
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = t % p_;
        t /= static_cast<uint32_t>(p_);
    }
    t = b;
    for (uint32_t i = 0; i < m_; ++i) {
        db[i] = t % p_;
        t /= static_cast<uint32_t>(p_);
    }
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + da[i] * db[j]) % p_);
    }
    for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d) {
        uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t sub = static_cast<uint32_t>((c * modulus_[i]) % p_);
            prod[d - m_ + i] = static_cast<uint32_t>((prod[d - m_ + i] + p_ - sub) % p_);
        }
    }
    uint32_t out = 0;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i)
        out = static_cast<uint32_t>(out * p_ + prod[i]);
    return out;
}

uint32_t ChainRing::fadd(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return static_cast<uint32_t>((a + b) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += static_cast<uint32_t>(((a % p_) + (b % p_)) % p_) * mult;
        a /= static_cast<uint32_t>(p_);
        b /= static_cast<uint32_t>(p_);
        mult *= static_cast<uint32_t>(p_);
    }
    return out;
}

uint32_t ChainRing::fneg(uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return static_cast<uint32_t>((p_ - a) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += static_cast<uint32_t>((p_ - (a % p_)) % p_) * mult;
        a /= static_cast<uint32_t>(p_);
        mult *= static_cast<uint32_t>(p_);
    }
    return out;
}

uint32_t ChainRing::fmul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    return fexp_[(static_cast<uint64_t>(flog_[a]) + flog_[b]) % (q_ - 1)];
}

uint32_t ChainRing::add_idx(uint32_t x, uint32_t y) const {
    if (family_ == RingFamily::IntegersModPrimePower)
        return static_cast<uint32_t>((static_cast<uint64_t>(x) + y) % size_);
    if (p_ == 2) return x ^ y;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < exp_; ++i) {
        out += fadd(x % q_, y % q_) * mult;
        x /= static_cast<uint32_t>(q_);
        y /= static_cast<uint32_t>(q_);
        mult *= static_cast<uint32_t>(q_);
    }
    return out;
}

uint32_t ChainRing::neg_idx(uint32_t x) const {
    if (family_ == RingFamily::IntegersModPrimePower)
        return static_cast<uint32_t>((size_ - x) % size_);
    if (p_ == 2) return x;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < exp_; ++i) {
        out += fneg(x % q_) * mult;
        x /= static_cast<uint32_t>(q_);
        mult *= static_cast<uint32_t>(q_);
    }
    return out;
}

uint32_t ChainRing::mul_idx(uint32_t x, uint32_t y) const {
    if (family_ == RingFamily::IntegersModPrimePower)
        return static_cast<uint32_t>((static_cast<uint64_t>(x) * y) % size_);
    std::array<uint32_t, 40> dx{}, dy{};
    for (uint32_t i = 0; i < exp_; ++i) {
        dx[i] = x % q_;
        x /= static_cast<uint32_t>(q_);
        dy[i] = y % q_;
        y /= static_cast<uint32_t>(q_);
    }
    uint32_t out = 0;
    for (int s = static_cast<int>(exp_) - 1; s >= 0; --s) {
        uint32_t acc = 0;
        for (int t = 0; t <= s; ++t) acc = fadd(acc, fmul(dx[t], dy[s - t]));
        out = static_cast<uint32_t>(out * q_ + acc);
    }
    return out;
}

uint32_t ChainRing::pow_idx(uint32_t x, uint64_t e) const {
    uint32_t result = one_idx_;
    while (e > 0) {
        if (e & 1) result = mul_idx(result, x);
        x = mul_idx(x, x);
        e >>= 1;
    }
    return result;
}

uint32_t ChainRing::inv_idx(uint32_t x) const {
    if (!is_unit_idx(x)) throw std::domain_error("inverse of a non-unit");
    uint64_t unit_group_order = size_ - size_ / q_;
    return pow_idx(x, unit_group_order - 1);
}

uint32_t ChainRing::valuation_idx(uint32_t x) const {
    if (x == 0) return nu_;
    uint32_t t = 0;
    while (x % q_ == 0) {
        x /= static_cast<uint32_t>(q_);
        ++t;
    }
    return t;
}

std::vector<uint8_t> ChainRing::coords(uint32_t x) const {
    uint32_t len = (family_ == RingFamily::IntegersModPrimePower) ? exp_ : m_ * exp_;
    std::vector<uint8_t> out(len);
    for (uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<uint8_t>(x % p_);
        x /= static_cast<uint32_t>(p_);
    }
    return out;
}

RingElem ChainRing::element(uint32_t idx) const {
    if (idx >= size_) throw std::out_of_range("element index out of range");
    return {this, idx};
}

RingElem ChainRing::from_int(uint64_t n) const {
    if (family_ == RingFamily::IntegersModPrimePower) return {this, static_cast<uint32_t>(n % size_)};
    return {this, static_cast<uint32_t>(n % p_)};
}

std::string ChainRing::render_field_elem(uint32_t a) const {
    // Polynomial in x with base-p digit coefficients, ascending powers.
    if (a == 0) return "0";
    std::string out;
    uint32_t rem = a;
    for (uint32_t i = 0; i < m_ && rem != 0; ++i) {
        uint32_t d = rem % p_;
        rem /= static_cast<uint32_t>(p_);
        if (d == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d);
        } else {
            if (d != 1) out += std::to_string(d) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::string ChainRing::render(uint32_t x) const {
    if (family_ == RingFamily::IntegersModPrimePower) return std::to_string(x);
    if (x == 0) return "0";
    std::string out;
    uint32_t rem = x;
    for (uint32_t s = 0; s < exp_ && (rem != 0 || s == 0); ++s) {
        uint32_t digit = rem % q_;
        rem /= static_cast<uint32_t>(q_);
        if (digit == 0) continue;
        if (!out.empty()) out += "+";
        std::string coef = render_field_elem(digit);
        bool composite = coef.find('+') != std::string::npos;
        if (s == 0) {
            out += coef;
        } else {
            std::string power = (s == 1) ? "v" : "v^" + std::to_string(s);
            if (coef == "1") {
                out += power;
            } else if (composite) {
                out += "(" + coef + ")*" + power;
            } else {
                out += coef + "*" + power;
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::string ChainRing::spec_string() const {
    std::ostringstream os;
    if (family_ == RingFamily::IntegersModPrimePower) {
        os << "Z" << size_;
        return os.str();
    }
    os << "F" << q_ << "[v]/v^" << exp_;
    if (m_ > 1) {
        os << ";mod=";
        // Descending powers, matching the usual way moduli are written.
        bool first = true;
        for (int i = static_cast<int>(m_); i >= 0; --i) {
            uint32_t d = modulus_[i];
            if (d == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << d;
            } else {
                if (d != 1) os << d << "*";
                os << (i == 1 ? "x" : "x^" + std::to_string(i));
            }
        }
    }
    return os.str();
}

std::vector<RingElem> units(const ChainRing& ring) {
    std::vector<RingElem> out;
    out.reserve(ring.unit_count());
    for (uint32_t i = 0; i < ring.size(); ++i)
        if (ring.is_unit_idx(i)) out.emplace_back(&ring, i);
    return out;
}

bool validate_uk(const RingElem& u, const RingElem& k) {
    if (u.ring_ptr() != k.ring_ptr())
        throw std::invalid_argument("u and k must come from the same ring");
    const ChainRing& ring = u.ring();
    if (!ring.is_unit_idx(u.index())) return false;
    if (ring.mul_idx(u.index(), u.index()) != ring.one().index()) return false;
    return ring.mul_idx(u.index(), k.index()) == k.index();
}

RingElem complement(const RingElem& r, const RingElem& u, const RingElem& k) {
    if (!validate_uk(u, k)) throw std::invalid_argument("invalid (u,k) pair");
    if (r.ring_ptr() != u.ring_ptr())
        throw std::invalid_argument("r must come from the same ring as (u,k)");
    return u.inverse() * (k - r);
}

}  // namespace ringcode
