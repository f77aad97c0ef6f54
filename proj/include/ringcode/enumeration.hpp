#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcode/cyclic_code.hpp"
#include "ringcode/rc_analysis.hpp"

namespace ringcode {

/// One census member together with its verdicts for a fixed admissible
/// (u, k). The code's generator list holds exactly one polynomial, the
/// canonical one: the packed-smallest generator of the ideal.
struct ClassificationRow {
    CyclicCode code;
    CodeAnalysis analysis;
    /// Expression text of the first reference row naming this ideal, filled
    /// by match_reference_table.
    std::optional<std::string> reference_label;

    const CyclicPoly& canonical_generator() const { return code.generators().front(); }
};

/// All distinct principal cyclic codes of length n over the ring, the zero
/// and unit ideals included, ordered by code size and then by packed
/// canonical generator. Candidate generators are visited in ascending packed
/// order and pruned to the smallest member of each unit-scalar/shift orbit;
/// distinct survivors spanning the same ideal are merged, so the recorded
/// generator of each code is the packed-smallest one. Throws
/// std::length_error when |R|^n exceeds max_words.
std::vector<CyclicCode> enumerate_principal(const ChainRing& ring, uint32_t n,
                                            uint64_t max_words = CyclicCode::kDefaultMaxWords);

/// The census with verdicts attached: one row per distinct principal code.
/// Throws std::invalid_argument when (u, k) is not admissible. With audit
/// set, every structural verdict is cross-checked against the enumeration
/// route; a disagreement raises VerificationError.
std::vector<ClassificationRow> classify_all(const ChainRing& ring, uint32_t n,
                                            const RingElem& u, const RingElem& k,
                                            bool audit = true,
                                            uint64_t max_words = CyclicCode::kDefaultMaxWords);

/// One line of the shipped reference classification.
struct ReferenceRow {
    uint32_t index = 0;
    /// Generator in the polynomial grammar extended with h = z+1.
    std::string expression;
    /// The shipped yes/no column: whether the row claims the code is a
    /// reversible complement code.
    bool rc_claim = false;
};

/// Parses `index;generator-expression;yes|no` lines. Blank lines and lines
/// starting with '#' are skipped. Throws std::invalid_argument on malformed
/// input.
std::vector<ReferenceRow> parse_reference_table(const std::string& text);

/// The shipped reference classification of principal cyclic codes of length
/// 4 over F2[v]/v^3 with u = k = 1, identical to data/reference_table.txt.
const std::string& reference_table_text();
const std::vector<ReferenceRow>& builtin_reference_table();

/// How one reference row fared against the census.
struct RowMatch {
    uint32_t index = 0;
    std::string expression;
    bool rc_claim = false;
    /// Position in the census whose code equals the row's ideal as a set.
    uint32_t census_position = 0;
    bool computed_rc = false;
    bool agrees = false;
};

struct MatchReport {
    /// One entry per reference row, in row order.
    std::vector<RowMatch> rows;
    uint32_t census_size = 0;
    /// Number of distinct census codes named by at least one row.
    uint32_t distinct_row_ideals = 0;
    uint32_t agreements = 0;
    std::vector<uint32_t> divergent_rows;
    /// Census positions named by no reference row.
    std::vector<uint32_t> uncovered;

    /// True only when the rows and the census are in verdict-preserving
    /// bijection: every row agrees, no two rows name the same ideal, and no
    /// census code goes unnamed.
    bool perfect() const {
        return agreements == rows.size() && uncovered.empty() &&
               distinct_row_ideals == rows.size();
    }
};

/// Resolves every reference row to its census code by set equality and
/// compares the shipped verdict with the computed one. Fills the
/// reference_label of each matched census row with the first expression
/// naming it. Throws VerificationError when a row's ideal is missing from
/// the census, which signals a census or parsing bug.
MatchReport match_reference_table(const std::vector<ReferenceRow>& rows,
                                  std::vector<ClassificationRow>& census);

}  // namespace ringcode
