#pragma once

// Independent exhaustive-count oracles for the four equivalent counting
// problems, the sigma/tau subspace-level oracles, and the
// reachable/observable duality check. Each oracle enumerates with a
// distinct characterization, so agreement between them (and with the
// closed forms) is evidence rather than tautology.
//
// Every oracle partitions its code space into contiguous shards (see
// worker_pool.hpp) and merges per-shard results in shard order, so the
// worker count never changes the output.

#include <cstdint>

#include "fqcensus/errors.hpp"
#include "fqcensus/field.hpp"
#include "fqcensus/matrix.hpp"
#include "fqcensus/numbers.hpp"

namespace fqcensus {

struct RunOptions {
    unsigned jobs = 0;                       // 0 = hardware concurrency
    std::uint64_t budget = kDefaultBudget;   // max enumeration states
};

// Problem 1: matrices in M_{n,k} occurring as the first k columns of some
// n x n matrix with irreducible characteristic polynomial. Enumerates all
// q^{n^2} square matrices and collects the distinct blocks; deliberately
// makes no use of unimodularity anywhere, since the pencil equivalence is
// the claim under test.
BigCount count_completable(const FieldCtx& F, unsigned n, unsigned k,
                           const RunOptions& opts = {});

// Problem 2: Y in M_{n,k} whose pencil x[I_k; 0] - Y is unimodular.
BigCount count_unimodular_pencils(const FieldCtx& F, unsigned n, unsigned k,
                                  const RunOptions& opts = {});

// Problem 3: pairs (A, B) with rank [B AB ... A^{k-1}B] = k.
BigCount count_reachable_pairs(const FieldCtx& F, unsigned n, unsigned k,
                               const RunOptions& opts = {});

// Problem 4: linear maps T from W = span(e_1..e_k) into F_q^n whose only
// T-invariant subspace inside W is zero. Each map is tested twice: by the
// direct subspace-invariance definition and via the zero-kernel-pair
// criterion on the [A; C] block split. A disagreement between the two
// verdicts throws verification_error; it is never resolved silently.
BigCount count_simple_maps(const FieldCtx& F, unsigned n, unsigned k,
                           const RunOptions& opts = {});

// Same count for an arbitrary k-dimensional domain subspace of F_q^n,
// by the direct test only. Exists so basis independence can be checked
// against count_simple_maps on randomly moved subspaces.
BigCount count_simple_maps_on(const FieldCtx& F, const SubspaceBasis& domain,
                              const RunOptions& opts = {});

// Number of k-dimensional U with dim(U ∩ span(e_1..e_k)) = l, by full
// subspace enumeration.
BigCount sigma_oracle(const FieldCtx& F, unsigned n, unsigned k, unsigned l,
                      const RunOptions& opts = {});

// Number of simple maps W_1 -> V with image exactly W_2, where
// W_1 = span(e_1..e_k) and W_2 = span(e_1..e_l, e_{k+1}..e_{2k-l}) inside
// F_q^n. Requires k < n and n >= 2k - l. Counts by enumerating all
// full-rank coefficient matrices and applying the direct invariance test.
BigCount tau_oracle(const FieldCtx& F, unsigned n, unsigned k, unsigned l,
                    const RunOptions& opts = {});

// True iff is_zero_kernel_pair(C, A) == is_reachable(A^T, C^T) for every
// (C, A), exhaustively.
bool duality_check(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts = {});

}  // namespace fqcensus
