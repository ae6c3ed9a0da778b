#include "dodgson/condense.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dodgson/matrix_io.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson {

std::size_t MitigationLog::swap_count() const noexcept {
    std::size_t swaps = 0;
    for (const auto& op : ops_)
        if (op.kind == MitigationKind::SwapRows || op.kind == MitigationKind::SwapCols) ++swaps;
    return swaps;
}

namespace {

Scalar det2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, OpCount& ops) {
    ops.mults += 2;
    ops.adds += 1;
    return sub(mul(a, d), mul(b, c));
}

// Shared body of both condense_step overloads. When `starred` is non-null it
// receives the pre-division matrix.
Matrix step(const Matrix& current, const Matrix* divisor, OpCount& ops, Matrix* starred) {
    if (!current.is_square() || current.rows() < 2) {
        throw TooSmall("condense_step needs a square matrix of size >= 2");
    }
    const std::size_t m = current.rows() - 1;
    if (divisor && (divisor->rows() != m || divisor->cols() != m)) {
        throw std::invalid_argument("divisor interior must be " + std::to_string(m) + "x" + std::to_string(m));
    }
    std::vector<Scalar> pre;
    pre.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            pre.push_back(det2(current(i, j), current(i, j + 1), current(i + 1, j), current(i + 1, j + 1), ops));

    if (!divisor) return Matrix(m, m, std::move(pre));

    std::vector<Scalar> out;
    out.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            try {
                out.push_back(exact_div(pre[i * m + j], (*divisor)(i, j)));
            } catch (const DivisionByZero& e) {
                throw DivisionByZero(e.what(), std::pair{i, j});
            } catch (const InexactDivision& e) {
                throw InexactDivision(e.what(), std::pair{i, j});
            }
            ++ops.divs;
        }
    }
    if (starred) *starred = Matrix(m, m, std::move(pre));
    return Matrix(m, m, std::move(out));
}

struct RunFailure {
    std::size_t stage;
    std::size_t row;
    std::size_t col;
};

struct RunOutcome {
    std::vector<Matrix> stages;
    std::vector<Matrix> starred;
    bool precision_warning = false;
    std::optional<RunFailure> failure;
};

bool near_zero_divisor(const Matrix& divisor) {
    if (divisor.ring() != RingKind::Real) return false;
    for (const auto& d : divisor.entries()) {
        const Real& r = d.as_real();
        if (std::abs(r.value) < 1e3 * r.tolerance) return true;
    }
    return false;
}

// One pass of condensation over an n >= 2 matrix, no mitigation.
RunOutcome run(const Matrix& a, OpCount& ops) {
    RunOutcome out;
    out.stages.push_back(a);
    out.stages.push_back(step(a, nullptr, ops, nullptr));
    while (out.stages.back().rows() > 1) {
        const std::size_t k = out.stages.size();
        const Matrix divisor = interior(out.stages[k - 2]);
        if (near_zero_divisor(divisor)) out.precision_warning = true;
        Matrix starred = divisor;
        try {
            Matrix next = step(out.stages[k - 1], &divisor, ops, &starred);
            out.starred.push_back(std::move(starred));
            out.stages.push_back(std::move(next));
        } catch (const DivisionByZero& e) {
            const auto pos = e.position().value_or(std::pair<std::size_t, std::size_t>{0, 0});
            out.failure = RunFailure{k, pos.first, pos.second};
            return out;
        }
    }
    return out;
}

Scalar scale_like(long c, const Scalar& like) {
    switch (like.kind()) {
        case RingKind::Integer: return Scalar::integer(c);
        case RingKind::Rational: return Scalar::rational(mpq_class(c));
        case RingKind::Real: return Scalar::real(static_cast<double>(c), like.as_real().tolerance);
        case RingKind::Polynomial: return Scalar::polynomial(Polynomial::constant(c));
    }
    return Scalar::integer(c);
}

// Rows rotated up by r (row 0 moves to the bottom r times), columns left by c.
Matrix rotated(const Matrix& a, std::size_t r, std::size_t c) {
    const std::size_t n = a.rows();
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries.push_back(a((i + r) % n, (j + c) % n));
    return Matrix(n, n, std::move(entries));
}

// The same rotation as a sequence of adjacent swaps.
MitigationLog rotation_log(std::size_t n, std::size_t r, std::size_t c) {
    MitigationLog log;
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t s = 0; s + 1 < n; ++s) log.push({MitigationKind::SwapRows, s, s + 1, Scalar{}});
    for (std::size_t t = 0; t < c; ++t)
        for (std::size_t s = 0; s + 1 < n; ++s) log.push({MitigationKind::SwapCols, s, s + 1, Scalar{}});
    return log;
}

std::string rotation_name(std::size_t r, std::size_t c) {
    if (r == 0 && c == 0) return "identity";
    std::string s = "rotate";
    if (r) s += " rows by " + std::to_string(r);
    if (r && c) s += ",";
    if (c) s += " columns by " + std::to_string(c);
    return s;
}

// Rotation candidates in strategy order: rows, then columns, then both.
std::vector<std::pair<std::size_t, std::size_t>> rotation_candidates(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < n; ++r) out.emplace_back(r, 0);
    for (std::size_t c = 1; c < n; ++c) out.emplace_back(0, c);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) out.emplace_back(r, c);
    return out;
}

// Failure counts per zero site, keyed by (minor size, top row, left col).
using AttemptMap = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long>;

bool row_interior_clean(const Matrix& m, std::size_t i) {
    if (i == 0 || i + 1 >= m.rows()) return true;
    for (std::size_t k = 1; k + 1 < m.cols(); ++k)
        if (is_zero(m(i, k))) return false;
    return true;
}

bool col_interior_clean(const Matrix& m, std::size_t j) {
    if (j == 0 || j + 1 >= m.cols()) return true;
    for (std::size_t k = 1; k + 1 < m.rows(); ++k)
        if (is_zero(m(k, j))) return false;
    return true;
}

// Repairs the interior zero at (i, j) by adding a multiple of another row
// (or column) with a nonzero entry in the same column (row). Scales start
// at `base` and a scale that leaves the rest of the repaired line zero-free
// is preferred.
bool repair_entry(Matrix& m, MitigationLog& log, std::size_t i, std::size_t j, long base) {
    const std::size_t n = m.rows();
    const auto span = static_cast<long>(n);
    for (int pass = 0; pass < 2; ++pass) {
        const bool require_clean = pass == 0;
        for (std::size_t src = 0; src < n; ++src) {
            if (src == i || is_zero(m(src, j))) continue;
            for (long c = base; c <= base + (require_clean ? span : 0); ++c) {
                Matrix next = add_scaled_row(m, src, i, scale_like(c, m(0, 0)));
                if (require_clean && !row_interior_clean(next, i)) continue;
                log.push({MitigationKind::AddScaledRow, src, i, scale_like(c, m(0, 0))});
                m = std::move(next);
                return true;
            }
        }
        for (std::size_t src = 0; src < n; ++src) {
            if (src == j || is_zero(m(i, src))) continue;
            for (long c = base; c <= base + (require_clean ? span : 0); ++c) {
                Matrix next = add_scaled_col(m, src, j, scale_like(c, m(0, 0)));
                if (require_clean && !col_interior_clean(next, j)) continue;
                log.push({MitigationKind::AddScaledCol, src, j, scale_like(c, m(0, 0))});
                m = std::move(next);
                return true;
            }
        }
    }
    return false;
}

void clear_interior_zeros(Matrix& m, MitigationLog& log, AttemptMap& attempts) {
    const std::size_t n = m.rows();
    const std::size_t limit = 4 * n * n;
    for (std::size_t iter = 0; iter < limit; ++iter) {
        std::optional<std::pair<std::size_t, std::size_t>> zero;
        for (std::size_t i = 1; i + 1 < n && !zero; ++i)
            for (std::size_t j = 1; j + 1 < n && !zero; ++j)
                if (is_zero(m(i, j))) zero = std::pair{i, j};
        if (!zero) return;
        const auto [i, j] = *zero;
        const long base = ++attempts[{1, i, j}];
        if (!repair_entry(m, log, i, j, base)) {
            throw UnremovableZero("no row or column can repair the interior zero at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
        }
    }
    throw UnremovableZero("interior zero repair did not settle within " + std::to_string(limit) + " additions");
}

// Makes the singular connected minor of size s at (top, left) nonsingular by
// adding a row from outside it whose substitution gives a nonzero minor
// (then likewise for columns).
void repair_minor(Matrix& m, MitigationLog& log, std::size_t top, std::size_t left, std::size_t s,
                  AttemptMap& attempts) {
    const std::size_t n = m.rows();
    const long c = ++attempts[{s, top, left}];
    const Scalar scale = scale_like(c, m(0, 0));

    for (std::size_t dst = top; dst < top + s; ++dst) {
        for (std::size_t src = 0; src < n; ++src) {
            if (src >= top && src < top + s) continue;
            std::vector<Scalar> entries;
            for (std::size_t r = top; r < top + s; ++r)
                for (std::size_t k = left; k < left + s; ++k) entries.push_back(m(r == dst ? src : r, k));
            if (is_zero(bareiss_det(Matrix(s, s, std::move(entries))))) continue;
            m = add_scaled_row(m, src, dst, scale);
            log.push({MitigationKind::AddScaledRow, src, dst, scale});
            return;
        }
    }
    for (std::size_t dst = left; dst < left + s; ++dst) {
        for (std::size_t src = 0; src < n; ++src) {
            if (src >= left && src < left + s) continue;
            std::vector<Scalar> entries;
            for (std::size_t r = top; r < top + s; ++r)
                for (std::size_t k = left; k < left + s; ++k) entries.push_back(m(r, k == dst ? src : k));
            if (is_zero(bareiss_det(Matrix(s, s, std::move(entries))))) continue;
            m = add_scaled_col(m, src, dst, scale);
            log.push({MitigationKind::AddScaledCol, src, dst, scale});
            return;
        }
    }
    throw UnremovableZero("no row or column addition makes the " + std::to_string(s) + "x" + std::to_string(s) +
                          " minor at (" + std::to_string(top) + ", " + std::to_string(left) + ") nonsingular");
}

void require_condensable(const Matrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("determinant needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()));
    }
}

}  // namespace

Matrix condense_step(const Matrix& current, OpCount& ops) { return step(current, nullptr, ops, nullptr); }

Matrix condense_step(const Matrix& current, const Matrix& divisor_interior, OpCount& ops) {
    return step(current, &divisor_interior, ops, nullptr);
}

MitigationResult mitigate_interior_zeros(const Matrix& a) {
    if (!a.is_square() || a.rows() < 3) throw TooSmall("mitigation needs a square matrix of size >= 3");
    const std::size_t n = a.rows();
    for (const auto& [r, c] : rotation_candidates(n)) {
        Matrix m = rotated(a, r, c);
        if (!has_interior_zero(m)) return {std::move(m), rotation_log(n, r, c)};
    }
    Matrix m = a;
    MitigationLog log;
    AttemptMap attempts;
    clear_interior_zeros(m, log, attempts);
    return {std::move(m), std::move(log)};
}

Matrix replay_log(const Matrix& a, const MitigationLog& log) {
    Matrix m = a;
    for (const auto& op : log.operations()) {
        switch (op.kind) {
            case MitigationKind::SwapRows: m = swap_rows(m, op.first, op.second); break;
            case MitigationKind::SwapCols: m = swap_cols(m, op.first, op.second); break;
            case MitigationKind::AddScaledRow: m = add_scaled_row(m, op.first, op.second, op.scale); break;
            case MitigationKind::AddScaledCol: m = add_scaled_col(m, op.first, op.second, op.scale); break;
        }
    }
    return m;
}

CondensationResult condensation_det(const Matrix& a, const MitigationPolicy& policy) {
    require_condensable(a);
    const std::size_t n = a.rows();
    CondensationResult result{a(0, 0), {}};
    auto& trace = result.trace;

    if (n == 1) {
        trace.stages.push_back(a);
        return result;
    }
    if (n == 2) {
        trace.stages.push_back(a);
        trace.stages.push_back(step(a, nullptr, trace.ops, nullptr));
        result.det = trace.stages.back()(0, 0);
        return result;
    }

    const std::size_t budget = policy.restart_budget ? policy.restart_budget : 2 * n;

    // Runs condensation on a transformed copy; returns the failure, if any.
    auto attempt = [&](const Matrix& m, const MitigationLog& log, const std::string& name) -> std::optional<RunFailure> {
        RunOutcome out = run(m, trace.ops);
        if (out.failure) {
            trace.restarts.push_back({name, out.failure->stage, out.failure->row, out.failure->col});
            return out.failure;
        }
        trace.stages = std::move(out.stages);
        trace.starred = std::move(out.starred);
        trace.precision_warning = out.precision_warning;
        trace.mitigation = log;
        const Scalar& det = trace.stages.back()(0, 0);
        result.det = log.sign() < 0 ? neg(det) : det;
        return std::nullopt;
    };
    auto check_budget = [&] {
        if (trace.restarts.size() > budget) {
            throw FallbackRequired("restart budget of " + std::to_string(budget) + " exhausted",
                                   trace.restarts.size());
        }
    };

    if (!policy.enabled) {
        if (has_interior_zero(a)) throw FallbackRequired("interior zero with mitigation disabled", 0);
        if (attempt(a, {}, "identity")) throw FallbackRequired("zero divisor with mitigation disabled", 1);
        return result;
    }

    std::optional<RunFailure> identity_failure;
    for (const auto& [r, c] : rotation_candidates(n)) {
        Matrix m = rotated(a, r, c);
        if (has_interior_zero(m)) continue;
        auto failure = attempt(m, rotation_log(n, r, c), rotation_name(r, c));
        if (!failure) return result;
        if (r == 0 && c == 0) identity_failure = failure;
        check_budget();
    }

    // Additions on the original matrix, repairing whichever zero surfaced last.
    Matrix m = a;
    MitigationLog log;
    AttemptMap attempts;
    std::optional<RunFailure> pending = identity_failure;
    try {
        for (;;) {
            if (pending) {
                // The zero divisor producing stage k at (i, j) is the
                // determinant of the (k-1)-sized connected minor at (i+1, j+1).
                repair_minor(m, log, pending->row + 1, pending->col + 1, pending->stage - 1, attempts);
            }
            clear_interior_zeros(m, log, attempts);
            pending = attempt(m, log, "row/column additions");
            if (!pending) return result;
            check_budget();
        }
    } catch (const UnremovableZero& e) {
        throw FallbackRequired(e.what(), trace.restarts.size());
    }
}

OpCount condensation_op_count(std::size_t n) {
    OpCount ops;
    for (std::size_t k = 1; k < n; ++k) {
        ops.mults += 2 * k * k;
        ops.adds += k * k;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) ops.divs += k * k;
    return ops;
}

std::string format_op(const MitigationOp& op) {
    switch (op.kind) {
        case MitigationKind::SwapRows: return "swap_rows " + std::to_string(op.first) + " " + std::to_string(op.second);
        case MitigationKind::SwapCols: return "swap_cols " + std::to_string(op.first) + " " + std::to_string(op.second);
        case MitigationKind::AddScaledRow:
            return "add_scaled_row " + std::to_string(op.first) + " " + std::to_string(op.second) + " " +
                   to_string(op.scale);
        case MitigationKind::AddScaledCol:
            return "add_scaled_col " + std::to_string(op.first) + " " + std::to_string(op.second) + " " +
                   to_string(op.scale);
    }
    return {};
}

std::string format_trace(const CondensationTrace& trace) {
    std::ostringstream out;
    for (const auto& r : trace.restarts) {
        out << "# restart: " << r.transform << " hit a zero divisor producing stage " << r.stage << " at ("
            << r.row << ", " << r.col << ")\n";
    }
    for (std::size_t k = 0; k < trace.stages.size(); ++k) {
        if (k >= 2) out << "stage " << k << " (pre-division)\n" << format_matrix(trace.starred[k - 2], false);
        const Matrix& s = trace.stages[k];
        out << "stage " << k << " (" << s.rows() << " × " << s.cols() << ")\n" << format_matrix(s, false);
    }
    out << "mitigation: " << trace.mitigation.operations().size() << " operation"
        << (trace.mitigation.operations().size() == 1 ? "" : "s") << "\n";
    for (const auto& op : trace.mitigation.operations()) out << format_op(op) << "\n";
    if (trace.precision_warning) out << "# warning: a divisor was within 1e3 x tolerance of zero\n";
    out << "sign: " << (trace.mitigation.sign() < 0 ? "-1" : "+1") << "\n";
    return out.str();
}

}  // namespace dodgson
