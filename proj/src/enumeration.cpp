#include "ringcode/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ringcode {

namespace {

uint64_t checked_candidate_count(const ChainRing& ring, uint32_t n, uint64_t max_words) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (total > max_words / ring.size() + 1) {
            total = max_words + 1;
            break;
        }
        total *= ring.size();
    }
    if (total > max_words)
        throw std::length_error("enumeration over " + ring.spec_string() + " at length " +
                                std::to_string(n) + " needs more than " +
                                std::to_string(max_words) + " words");
    return total;
}

bool orbit_has_smaller(const CyclicPoly& g, uint64_t packed,
                       const std::vector<RingElem>& unit_list) {
    for (const RingElem& u : unit_list) {
        CyclicPoly ug = g.scaled(u);
        for (uint32_t j = 0; j < g.length(); ++j)
            if (ug.shifted(j).pack() < packed) return true;
    }
    return false;
}

}  // namespace

std::vector<CyclicCode> enumerate_principal(const ChainRing& ring, uint32_t n,
                                            uint64_t max_words) {
    const uint64_t total = checked_candidate_count(ring, n, max_words);
    const std::vector<RingElem> unit_list = units(ring);

    std::vector<CyclicCode> out;
    std::unordered_map<uint64_t, std::vector<size_t>> by_fingerprint;
    for (uint64_t w = 0; w < total; ++w) {
        CyclicPoly g = CyclicPoly::unpack(&ring, n, w);
        if (orbit_has_smaller(g, w, unit_list)) continue;
        CyclicCode code = CyclicCode::span(ring, n, {g}, max_words);
        auto& bucket = by_fingerprint[code.fingerprint()];
        bool known = false;
        for (size_t pos : bucket)
            if (out[pos].same_words(code)) {
                known = true;
                break;
            }
        if (known) continue;
        bucket.push_back(out.size());
        out.push_back(std::move(code));
    }
    std::sort(out.begin(), out.end(), [](const CyclicCode& a, const CyclicCode& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.generators().front().pack() < b.generators().front().pack();
    });
    return out;
}

std::vector<ClassificationRow> classify_all(const ChainRing& ring, uint32_t n,
                                            const RingElem& u, const RingElem& k,
                                            bool audit, uint64_t max_words) {
    if (!validate_uk(u, k))
        throw std::invalid_argument("inadmissible pair: need u*u = 1 and u*k = k");
    std::vector<ClassificationRow> rows;
    for (CyclicCode& code : enumerate_principal(ring, n, max_words)) {
        CodeAnalysis analysis = analyze(code, u, k, audit);
        rows.push_back({std::move(code), std::move(analysis), std::nullopt});
    }
    return rows;
}

std::vector<ReferenceRow> parse_reference_table(const std::string& text) {
    std::vector<ReferenceRow> rows;
    size_t pos = 0, lineno = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("reference table line " + std::to_string(lineno) +
                                        ": " + what);
        };
        size_t a = line.find(';');
        size_t b = a == std::string::npos ? std::string::npos : line.find(';', a + 1);
        if (b == std::string::npos) fail("expected index;expression;yes|no");

        ReferenceRow row;
        std::string index_text = line.substr(0, a);
        if (index_text.empty()) fail("empty index");
        for (char c : index_text)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("index is not a number");
        row.index = static_cast<uint32_t>(std::stoul(index_text));

        row.expression = line.substr(a + 1, b - a - 1);
        if (row.expression.empty()) fail("empty generator expression");

        std::string verdict = line.substr(b + 1);
        if (verdict == "yes")
            row.rc_claim = true;
        else if (verdict == "no")
            row.rc_claim = false;
        else
            fail("verdict must be yes or no, got '" + verdict + "'");
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::string& reference_table_text() {
    static const std::string text =
        "1;0;no\n"
        "2;v^2;no\n"
        "3;v^2h;no\n"
        "4;v^2h^2;no\n"
        "5;v^2h^3;no\n"
        "6;v;no\n"
        "7;vh;no\n"
        "8;vh^2;no\n"
        "9;vh^3;no\n"
        "10;1;yes\n"
        "11;h;yes\n"
        "12;h^2;yes\n"
        "13;h^3;yes\n"
        "14;vh+v^2;no\n"
        "15;vh^2+v^2;no\n"
        "16;vh^2+v^2h;no\n"
        "17;vh^2+v^2(h+1);no\n"
        "18;vh^3+v^2;no\n"
        "19;vh^3+v^2h(h+1);no\n"
        "20;vh^3+v^2h;no\n"
        "21;h+v^2;yes\n"
        "22;h^2+v^2;no\n"
        "23;h^3+v^2;no\n"
        "24;h^3+v^2h;no\n"
        "25;h^3+v^2(h+1);no\n"
        "26;h+v;yes\n"
        "27;h^2+v(h+1);no\n"
        "28;h^2+vh;no\n"
        "29;h^2+v;no\n"
        "30;h^3+v;no\n"
        "31;h^3+vh(h+1);no\n"
        "32;h^3+vh;no\n"
        "33;h+v+v^2;yes\n"
        "34;h^2+v(h+1)+v^2(h+1);no\n"
        "35;h^2+v(h+1)+v^2;no\n"
        "36;h^2+v(h+1)+v^2h;no\n"
        "37;h^2+v+v^2;no\n"
        "38;h^2+vh+v^2(h+1);yes\n"
        "39;h^2+vh+v^2;yes\n"
        "40;h^2+vh+v^2h;no\n"
        "41;h^3+vh(h+1)+v^2;no\n"
        "42;h^3+vh(h+1)+v^2h;no\n"
        "43;h^3+vh(h+1)+v^2h^2;no\n"
        "44;h^3+vh+v^2;no\n"
        "45;h^3+vh+v^2(h^2+h+1);no\n"
        "46;h^3+vh+v^2(h+1);no\n";
    return text;
}

const std::vector<ReferenceRow>& builtin_reference_table() {
    static const std::vector<ReferenceRow> rows = parse_reference_table(reference_table_text());
    return rows;
}

MatchReport match_reference_table(const std::vector<ReferenceRow>& rows,
                                  std::vector<ClassificationRow>& census) {
    if (census.empty()) throw std::invalid_argument("empty census");
    const ChainRing& ring = census.front().code.ring();
    const uint32_t n = census.front().code.length();

    MatchReport report;
    report.census_size = static_cast<uint32_t>(census.size());
    std::vector<char> named(census.size(), 0);
    for (const ReferenceRow& row : rows) {
        CyclicPoly g = parse_poly(ring, n, row.expression);
        CyclicCode ideal = CyclicCode::span(ring, n, {g});

        size_t pos = census.size();
        for (size_t i = 0; i < census.size(); ++i) {
            const CyclicCode& code = census[i].code;
            if (code.size() == ideal.size() && code.fingerprint() == ideal.fingerprint() &&
                code.same_words(ideal)) {
                pos = i;
                break;
            }
        }
        if (pos == census.size())
            throw VerificationError("reference row " + std::to_string(row.index) + " <" +
                                    row.expression + "> spans an ideal missing from the census");

        named[pos] = 1;
        if (!census[pos].reference_label) census[pos].reference_label = row.expression;

        RowMatch m;
        m.index = row.index;
        m.expression = row.expression;
        m.rc_claim = row.rc_claim;
        m.census_position = static_cast<uint32_t>(pos);
        m.computed_rc = census[pos].analysis.rc.value;
        m.agrees = m.rc_claim == m.computed_rc;
        if (m.agrees)
            ++report.agreements;
        else
            report.divergent_rows.push_back(row.index);
        report.rows.push_back(std::move(m));
    }
    for (size_t i = 0; i < census.size(); ++i) {
        if (named[i])
            ++report.distinct_row_ideals;
        else
            report.uncovered.push_back(static_cast<uint32_t>(i));
    }
    return report;
}

}  // namespace ringcode
