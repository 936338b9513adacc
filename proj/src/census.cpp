#include "fqcensus/census.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "fqcensus/poly_matrix.hpp"
#include "fqcensus/worker_pool.hpp"

namespace fqcensus {

namespace {

void require_k_lt_n(unsigned n, unsigned k) {
    if (k >= n) throw std::invalid_argument("census requires k < n");
}

// q^{cells} checked against the budget; returns it as a machine word.
std::uint64_t space_size(const FieldCtx& F, std::uint64_t cells, std::uint64_t budget) {
    const BigCount total = big_pow(BigCount(F.q()), cells);
    if (total > budget)
        throw budget_error("enumeration space " + total.str() + " exceeds budget " +
                           std::to_string(budget));
    return total.convert_to<std::uint64_t>();
}

std::uint64_t sum_shards(const std::vector<std::uint64_t>& parts) {
    std::uint64_t total = 0;
    for (std::uint64_t p : parts) total += p;
    return total;
}

// All nonzero-dimensional subspaces of the coordinate space F_q^k; the
// candidate invariant subspaces for the direct simplicity test.
std::vector<SubspaceBasis> invariant_candidates(const FieldCtx& F, unsigned k,
                                                std::uint64_t budget) {
    std::vector<SubspaceBasis> out;
    for (unsigned d = 1; d <= k; ++d)
        for (SubspaceBasis& s : enumerate_subspaces(F, k, d, budget)) out.push_back(std::move(s));
    return out;
}

// Direct simplicity test against precomputed candidates: T is the n x k
// matrix of images (columns) of the domain basis vectors; candidate
// subspaces live in domain coordinates. to_coords must produce the
// coordinate vector of an image, or return false when the image leaves
// the domain subspace.
template <class ToCoords>
bool is_simple_direct(const FieldCtx& F, const MatrixFq& T,
                      const std::vector<SubspaceBasis>& candidates, ToCoords&& to_coords) {
    const unsigned k = T.cols();
    std::vector<Elem> image(T.rows());
    std::vector<Elem> coords(k);
    for (const SubspaceBasis& U : candidates) {
        bool invariant = true;
        for (std::uint32_t r = 0; r < U.dim() && invariant; ++r) {
            // image = T * (r-th basis vector of U)
            for (std::uint32_t i = 0; i < T.rows(); ++i) {
                Elem acc = 0;
                for (std::uint32_t j = 0; j < k; ++j) {
                    const Elem c = U.basis().get(r, j);
                    if (c != 0) acc = F.add(acc, F.mul(c, T.get(i, j)));
                }
                image[i] = acc;
            }
            if (!to_coords(image, coords) || !U.contains(coords)) invariant = false;
        }
        if (invariant) return false;  // a nonzero invariant subspace exists
    }
    return true;
}

}  // namespace

BigCount count_completable(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts) {
    require_k_lt_n(n, k);
    const std::uint64_t total = space_size(F, std::uint64_t(n) * n, opts.budget);
    const std::uint64_t block_total = space_size(F, std::uint64_t(n) * k, opts.budget);
    const std::uint64_t shards = planned_shards(total);

    std::vector<std::vector<std::uint64_t>> keys(shards);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq m(F, n, n);
        MatrixFq block(F, n, k);
        for (std::uint64_t code = lo; code < hi; ++code) {
            m.assign_code(code);
            if (!is_irreducible(char_poly(m))) continue;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < k; ++j) block.set(i, j, m.get(i, j));
            keys[s].push_back(block.code());
        }
    });

    // Order-independent merge: distinct block keys across all shards.
    std::vector<bool> seen(block_total, false);
    std::uint64_t count = 0;
    for (const auto& shard_keys : keys)
        for (std::uint64_t key : shard_keys)
            if (!seen[key]) {
                seen[key] = true;
                ++count;
            }
    return count;
}

BigCount count_unimodular_pencils(const FieldCtx& F, unsigned n, unsigned k,
                                  const RunOptions& opts) {
    require_k_lt_n(n, k);
    const std::uint64_t total = space_size(F, std::uint64_t(n) * k, opts.budget);
    std::vector<std::uint64_t> parts(planned_shards(total), 0);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq y(F, n, k);
        for (std::uint64_t code = lo; code < hi; ++code) {
            y.assign_code(code);
            if (is_unimodular(build_pencil(y))) ++parts[s];
        }
    });
    return sum_shards(parts);
}

BigCount count_reachable_pairs(const FieldCtx& F, unsigned n, unsigned k,
                               const RunOptions& opts) {
    require_k_lt_n(n, k);
    // (A, B) packed into one code: A's k^2 cells first, then B's k(n-k).
    const std::uint64_t total = space_size(F, std::uint64_t(n) * k, opts.budget);
    const std::uint64_t a_space = space_size(F, std::uint64_t(k) * k, opts.budget);
    std::vector<std::uint64_t> parts(planned_shards(total), 0);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq a(F, k, k);
        MatrixFq b(F, k, n - k);
        for (std::uint64_t code = lo; code < hi; ++code) {
            a.assign_code(code % a_space);
            b.assign_code(code / a_space);
            if (is_reachable(a, b)) ++parts[s];
        }
    });
    return sum_shards(parts);
}

BigCount count_simple_maps(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts) {
    require_k_lt_n(n, k);
    const std::uint64_t total = space_size(F, std::uint64_t(n) * k, opts.budget);
    space_size(F, k, opts.budget);  // subspace enumeration guard
    const std::vector<SubspaceBasis> candidates = invariant_candidates(F, k, opts.budget);

    std::vector<std::uint64_t> parts(planned_shards(total), 0);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq t(F, n, k);
        MatrixFq a(F, k, k);
        MatrixFq c(F, n - k, k);
        // Image (x_1..x_k, y_1..y_{n-k}) lies in W iff y = 0; its W
        // coordinates are then just x.
        auto to_coords = [&](const std::vector<Elem>& image, std::vector<Elem>& coords) {
            for (unsigned i = k; i < n; ++i)
                if (image[i] != 0) return false;
            for (unsigned i = 0; i < k; ++i) coords[i] = image[i];
            return true;
        };
        for (std::uint64_t code = lo; code < hi; ++code) {
            t.assign_code(code);
            const bool direct = is_simple_direct(F, t, candidates, to_coords);

            // Independent verdict via the zero-kernel-pair split T = [A; C].
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) a.set(i, j, t.get(i, j));
            for (unsigned i = 0; i < n - k; ++i)
                for (unsigned j = 0; j < k; ++j) c.set(i, j, t.get(k + i, j));
            const bool by_zkp = is_zero_kernel_pair(c, a);

            if (direct != by_zkp)
                throw verification_error("simplicity tests disagree for T=" + t.str());
            if (direct) ++parts[s];
        }
    });
    return sum_shards(parts);
}

BigCount count_simple_maps_on(const FieldCtx& F, const SubspaceBasis& domain,
                              const RunOptions& opts) {
    const unsigned n = domain.ambient();
    const unsigned k = domain.dim();
    require_k_lt_n(n, k);
    const std::uint64_t total = space_size(F, std::uint64_t(n) * k, opts.budget);
    const std::vector<SubspaceBasis> candidates = invariant_candidates(F, k, opts.budget);
    const MatrixFq& B = domain.basis();  // k x n, RREF

    std::vector<std::uint64_t> parts(planned_shards(total), 0);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq t(F, n, k);
        std::vector<Elem> residue(n);
        // Coordinates w.r.t. the RREF basis: read off the pivot positions,
        // then confirm the combination reproduces the image exactly.
        auto to_coords = [&](const std::vector<Elem>& image, std::vector<Elem>& coords) {
            for (unsigned i = 0; i < k; ++i) coords[i] = image[domain.pivots()[i]];
            for (unsigned j = 0; j < n; ++j) {
                Elem acc = 0;
                for (unsigned i = 0; i < k; ++i)
                    if (coords[i] != 0) acc = F.add(acc, F.mul(coords[i], B.get(i, j)));
                residue[j] = F.sub(image[j], acc);
            }
            for (Elem x : residue)
                if (x != 0) return false;
            return true;
        };
        for (std::uint64_t code = lo; code < hi; ++code) {
            t.assign_code(code);
            if (is_simple_direct(F, t, candidates, to_coords)) ++parts[s];
        }
    });
    return sum_shards(parts);
}

BigCount sigma_oracle(const FieldCtx& F, unsigned n, unsigned k, unsigned l,
                      const RunOptions& opts) {
    require_k_lt_n(n, k);
    if (l > k) throw std::invalid_argument("sigma requires l <= k");
    const SubspaceBasis w = coordinate_subspace(F, n, k);
    BigCount count = 0;
    for (const SubspaceBasis& u : enumerate_subspaces(F, n, k, opts.budget))
        if (intersection_dim(u, w) == static_cast<int>(l)) ++count;
    return count;
}

BigCount tau_oracle(const FieldCtx& F, unsigned n, unsigned k, unsigned l,
                    const RunOptions& opts) {
    require_k_lt_n(n, k);
    if (l > k) throw std::invalid_argument("tau requires l <= k");
    if (n < 2u * k - l) throw std::invalid_argument("tau oracle requires n >= 2k - l");

    // W_2 basis: e_1..e_l, then e_{k+1}..e_{2k-l}.
    std::vector<unsigned> w2(k);
    for (unsigned i = 0; i < l; ++i) w2[i] = i;
    for (unsigned i = l; i < k; ++i) w2[i] = k + (i - l);

    const std::uint64_t total = space_size(F, std::uint64_t(k) * k, opts.budget);
    const std::vector<SubspaceBasis> candidates = invariant_candidates(F, k, opts.budget);

    std::vector<std::uint64_t> parts(planned_shards(total), 0);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq m(F, k, k);
        MatrixFq t(F, n, k);
        auto to_coords = [&](const std::vector<Elem>& image, std::vector<Elem>& coords) {
            for (unsigned i = k; i < n; ++i)
                if (image[i] != 0) return false;
            for (unsigned i = 0; i < k; ++i) coords[i] = image[i];
            return true;
        };
        for (std::uint64_t code = lo; code < hi; ++code) {
            m.assign_code(code);
            if (rank(m) != static_cast<int>(k)) continue;  // image must be all of W_2
            // T e_j = sum_i m_ij w2_i
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < k; ++j) t.set(i, j, 0);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) t.set(w2[i], j, m.get(i, j));
            if (is_simple_direct(F, t, candidates, to_coords)) ++parts[s];
        }
    });
    return sum_shards(parts);
}

bool duality_check(const FieldCtx& F, unsigned n, unsigned k, const RunOptions& opts) {
    require_k_lt_n(n, k);
    const std::uint64_t total = space_size(F, std::uint64_t(n) * k, opts.budget);
    const std::uint64_t a_space = space_size(F, std::uint64_t(k) * k, opts.budget);
    const std::uint64_t shards = planned_shards(total);
    std::vector<char> ok(shards, 1);
    parallel_shards(total, opts.jobs, [&](std::uint64_t s, std::uint64_t lo, std::uint64_t hi) {
        MatrixFq a(F, k, k);
        MatrixFq c(F, n - k, k);
        for (std::uint64_t code = lo; code < hi; ++code) {
            a.assign_code(code % a_space);
            c.assign_code(code / a_space);
            if (is_zero_kernel_pair(c, a) != is_reachable(a.transpose(), c.transpose())) {
                ok[s] = 0;
                return;
            }
        }
    });
    for (char v : ok)
        if (!v) return false;
    return true;
}

}  // namespace fqcensus
