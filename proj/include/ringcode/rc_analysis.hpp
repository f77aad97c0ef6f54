#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringcode/cyclic_code.hpp"

namespace ringcode {

/// Raised when a structural verdict disagrees with its brute-force
/// counterpart, or an internal identity fails to re-verify. Never expected;
/// any occurrence is a bug in one of the two routes.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of one structural condition. A passing check carries the witness
/// that makes it re-verifiable by direct substitution; a failing check names
/// the polynomial that has no witness.
struct ConditionCheck {
    std::string id;
    /// Index j of the generator f_j the condition is about (0 for conditions
    /// that are not tied to a generator).
    uint32_t generator_index = 0;
    bool holds = false;
    /// Canonical index of the unit witness, when the condition quantifies
    /// over units.
    std::optional<uint32_t> unit_witness;
    std::string detail;
};

/// A boolean verdict together with the per-condition evidence. Evaluation
/// stops at the first failed condition, so a false verdict's last entry is
/// the violated one.
struct Verdict {
    bool value = false;
    std::vector<ConditionCheck> conditions;
};

/// Decides reversibility from the minimal generating sequence alone: the
/// reciprocal of f_0 must equal u_0 f_0 for some unit u_0, and for each
/// later f_r the difference reciprocal(f_r) - u_r f_r must lie in the code
/// spanned by f_0..f_{r-1} for some unit u_r. Unit searches run over
/// units(ring) in canonical order; the zero code passes vacuously.
Verdict reversible_by_structure(const CyclicCode& code);

/// Definition-level check: the length-n word reversal of every codeword is
/// again a codeword.
bool reversible_by_enumeration(const CyclicCode& code);

/// Decides the reversible-complement property from structure: the rc image
/// of the zero word must be a codeword, and the code must be structurally
/// reversible. Throws std::invalid_argument unless (u,k) is admissible and
/// from the code's ring.
Verdict rc_by_structure(const CyclicCode& code, const RingElem& u, const RingElem& k);

/// Definition-level check: the rc image of every codeword is a codeword.
bool rc_by_enumeration(const CyclicCode& code, const RingElem& u, const RingElem& k);

/// Recomputes, for every nonzero codeword a of degree s, both the direct rc
/// image of a and the combination rc(0) - u^{-1} z^{n-1-s} reciprocal(a),
/// and reports whether the two agree across the whole code.
bool rc_decomposition_holds(const CyclicCode& code, const RingElem& u, const RingElem& k);

/// Both verdicts for one code and pair. When audit is set the structural
/// verdicts have been cross-checked against the enumeration route and the
/// rc decomposition identity has been confirmed on every codeword.
struct CodeAnalysis {
    Verdict reversible;
    Verdict rc;
    bool audited = false;
};

/// Runs the structural analysis and, when audit is set, the full
/// enumeration-based counterparts. Throws VerificationError on any
/// disagreement between the two routes.
CodeAnalysis analyze(const CyclicCode& code, const RingElem& u, const RingElem& k,
                     bool audit = true);

}  // namespace ringcode
