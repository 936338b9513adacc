#pragma once

// Exhaustive verification of the unimodularity-density conjecture on the
// degree-m family x^m [I_k; 0] + sum_{i<m} x^i A_i: the fraction of
// unimodular members should equal delta(n, k) exactly, independent of m.
// A mismatch is a legitimate finding (it would refute the conjecture), so
// it is reported as data, never raised as an error.

#include <cstdint>
#include <optional>
#include <string>

#include "fqcensus/census.hpp"
#include "fqcensus/field.hpp"
#include "fqcensus/numbers.hpp"
#include "fqcensus/poly_matrix.hpp"

namespace fqcensus {

struct ConjectureVerdict {
    BigCount unimodular_count;
    BigCount total;               // q^{nkm}
    ExactRational predicted;      // delta(n, k)
    ExactRational observed;       // unimodular_count / total, reduced
    bool match = false;           // exact rational equality
    // Reproducibility witness on a mismatch: the lexicographically first
    // family member that is NOT unimodular (coefficient dump + code).
    std::optional<std::string> witness;
};

// Size of the family (q^{nkm}), checked against the budget.
std::uint64_t family_size_checked(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                                  std::uint64_t budget = kDefaultBudget);

// The family member at the given code. Codes order members by the
// concatenated base-q matrix codes of (A_0, ..., A_{m-1}), A_0 most
// significant, so code 0 is the member with all A_i = 0.
PolyMatrix family_member(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                         std::uint64_t code);

// Counts unimodular members of the whole family and compares the exact
// fraction with delta(n, k). Requires k < n, m >= 1, q^{nkm} <= budget.
ConjectureVerdict verify_conjecture(const FieldCtx& F, unsigned n, unsigned k, unsigned m,
                                    const RunOptions& opts = {});

// True iff the m = 1 family count equals the Problem 2 pencil census
// (the two sets are in count-preserving bijection via A_0 <-> -Y).
bool m1_crosscheck(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts = {});

}  // namespace fqcensus
