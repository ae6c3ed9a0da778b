#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson {

/// Arithmetic tallies for one determinant computation.
struct OpCount {
    std::uint64_t mults = 0;
    std::uint64_t divs = 0;
    std::uint64_t adds = 0;  // additions and subtractions

    OpCount& operator+=(const OpCount& o) {
        mults += o.mults;
        divs += o.divs;
        adds += o.adds;
        return *this;
    }
    friend bool operator==(const OpCount&, const OpCount&) = default;
};

enum class MitigationKind { SwapRows, SwapCols, AddScaledRow, AddScaledCol };

/// One elementary operation. For swaps, `first`/`second` are the exchanged
/// indices. For additions, `first` is the source, `second` the destination,
/// and `scale` the multiplier (destination += scale * source).
struct MitigationOp {
    MitigationKind kind;
    std::size_t first;
    std::size_t second;
    Scalar scale{};

    friend bool operator==(const MitigationOp&, const MitigationOp&) = default;
};

/// Ordered record of the operations applied before condensation. The sign
/// is derived from the operations, so sign() == (-1)^swap_count() always.
class MitigationLog {
public:
    void push(MitigationOp op) { ops_.push_back(std::move(op)); }
    void append(const MitigationLog& other) { ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end()); }

    const std::vector<MitigationOp>& operations() const noexcept { return ops_; }
    bool empty() const noexcept { return ops_.empty(); }
    std::size_t swap_count() const noexcept;
    int sign() const noexcept { return swap_count() % 2 == 0 ? 1 : -1; }

    friend bool operator==(const MitigationLog&, const MitigationLog&) = default;

private:
    std::vector<MitigationOp> ops_;
};

/// A condensation run that hit a zero divisor and was restarted.
struct RestartEvent {
    std::string transform;  // description of the transform that failed
    std::size_t stage;      // stage being produced when the zero divisor surfaced
    std::size_t row;        // output position of the failed division
    std::size_t col;
};

struct CondensationTrace {
    /// stages[k] is A^(k), of size (n-k) x (n-k); stages[0] is the matrix
    /// actually condensed (after mitigation).
    std::vector<Matrix> stages;
    /// starred[k - 2] is A^(k)*, the stage-k matrix before division.
    std::vector<Matrix> starred;
    MitigationLog mitigation;
    /// Totals over every run, including restarted ones.
    OpCount ops;
    std::vector<RestartEvent> restarts;
    /// Set for real matrices when some divisor was within 1e3 * tolerance of zero.
    bool precision_warning = false;
};

struct MitigationPolicy {
    bool enabled = true;
    /// Maximum number of restarts; 0 selects the default of 2n.
    std::size_t restart_budget = 0;
};

struct CondensationResult {
    Scalar det;
    CondensationTrace trace;
};

struct MitigationResult {
    Matrix matrix;
    MitigationLog log;
};

/// First condensation step: the matrix of 2x2 consecutive-minor
/// determinants. Adds 2 mults and 1 subtraction per minor to `ops`.
Matrix condense_step(const Matrix& current, OpCount& ops);

/// Later steps: 2x2 consecutive-minor determinants divided entrywise by
/// `divisor_interior` (the interior of the stage two steps back), which must
/// be (k-1)x(k-1) for a k x k `current`. One div per entry on top of the
/// first-step counts. DivisionByZero / InexactDivision carry the (i, j)
/// output position.
Matrix condense_step(const Matrix& current, const Matrix& divisor_interior, OpCount& ops);

/// Removes zeros from the interior of a square n >= 3 matrix. Tries, in
/// order: cyclic row rotations, cyclic column rotations, combined
/// rotations, then row/column additions with scale 1 (escalating on
/// repeated failure at the same entry). Throws UnremovableZero when every
/// strategy is exhausted.
MitigationResult mitigate_interior_zeros(const Matrix& a);

/// Applies the logged operations in order.
Matrix replay_log(const Matrix& a, const MitigationLog& log);

/// Determinant by condensation. n = 1 and n = 2 are computed directly.
/// A zero divisor at any stage restarts condensation from a freshly
/// transformed copy of the original matrix; the result is corrected by the
/// sign of the final transform's log. Throws FallbackRequired when
/// mitigation is disabled or exhausted, or the restart budget runs out.
CondensationResult condensation_det(const Matrix& a, const MitigationPolicy& policy = {});

/// Closed-form op counts for a clean (no mitigation) condensation of an
/// n x n matrix.
OpCount condensation_op_count(std::size_t n);

/// Text rendering used by `dodgson det --trace`.
std::string format_trace(const CondensationTrace& trace);
std::string format_op(const MitigationOp& op);

}  // namespace dodgson
