#include "dodgson/oracle.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dodgson {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (!a.is_square()) throw std::invalid_argument(std::string(who) + " needs a square matrix");
}

// Expansion of the submatrix on rows [depth, n) and the given columns.
Scalar expand(const Matrix& a, std::size_t depth, const std::vector<std::size_t>& cols, OpCount& ops) {
    if (cols.size() == 1) return a(depth, cols.front());
    std::vector<std::size_t> rest(cols.size() - 1);
    Scalar acc;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        for (std::size_t k = 0, w = 0; k < cols.size(); ++k)
            if (k != idx) rest[w++] = cols[k];
        Scalar term = mul(a(depth, cols[idx]), expand(a, depth + 1, rest, ops));
        ++ops.mults;
        if (idx == 0) {
            acc = std::move(term);
        } else {
            acc = idx % 2 == 0 ? add(acc, term) : sub(acc, term);
            ++ops.adds;
        }
    }
    return acc;
}

}  // namespace

Scalar cofactor_det(const Matrix& a, OpCount& ops) {
    require_square(a, "cofactor_det");
    std::vector<std::size_t> cols(a.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return expand(a, 0, cols, ops);
}

Scalar cofactor_det(const Matrix& a) {
    OpCount ops;
    return cofactor_det(a, ops);
}

Scalar bareiss_det(const Matrix& a, OpCount& ops) {
    require_square(a, "bareiss_det");
    const std::size_t n = a.rows();
    std::vector<Scalar> m(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return m[i * n + j]; };

    bool negate = false;
    Scalar prev = a(0, 0).one_like();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(at(p, k))) ++p;
            if (p == n) return a(0, 0).zero_like();
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = exact_div(sub(mul(at(i, j), at(k, k)), mul(at(i, k), at(k, j))), prev);
                ops.mults += 2;
                ops.adds += 1;
                ops.divs += 1;
            }
        }
        prev = at(k, k);
    }
    return negate ? neg(at(n - 1, n - 1)) : at(n - 1, n - 1);
}

Scalar bareiss_det(const Matrix& a) {
    OpCount ops;
    return bareiss_det(a, ops);
}

std::uint64_t cofactor_mult_count(std::size_t n) {
    std::uint64_t m = 0;
    for (std::size_t k = 2; k <= n; ++k) m = k * (m + 1);
    return m;
}

JacobiReport jacobi_identity(const Matrix& a, std::size_t m) {
    if (m != 2) throw std::invalid_argument("only the m = 2 corner identity is supported");
    if (!a.is_square() || a.rows() < 3) throw TooSmall("Jacobi identity needs a square matrix of size >= 3");
    const std::size_t last = a.rows() - 1;

    const Matrix adj = adjugate(a, [](const Matrix& x) { return bareiss_det(x); });
    const Matrix corner = Matrix::from_rows({{adj(0, 0), adj(0, last)}, {adj(last, 0), adj(last, last)}});

    JacobiReport r{bareiss_det(corner), bareiss_det(a), bareiss_det(interior(a)), {}, false};
    r.rhs = mul(r.det, r.interior_det);  // det(A)^(m-1) with m = 2
    r.holds = r.adjugate_minor_det == r.rhs;
    return r;
}

bool jacobi_check(const Matrix& a, std::size_t m) { return jacobi_identity(a, m).holds; }

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Matrix random_integer_matrix(std::size_t n, std::mt19937_64& rng, long lo, long hi) {
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(Scalar::integer(uniform_int(rng, lo, hi)));
    return Matrix(n, n, std::move(entries));
}

RatioReport count_ratio(std::size_t n, std::size_t trials, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("count_ratio needs n >= 3");
    if (trials == 0) throw std::invalid_argument("count_ratio needs at least one trial");

    std::mt19937_64 rng(seed);
    RatioReport report;
    report.n = n;
    report.trials = trials;
    const std::size_t max_draws = 1000 * trials;
    std::size_t draws = 0;

    for (std::size_t t = 0; t < trials;) {
        if (++draws > max_draws) throw std::runtime_error("count_ratio: too many matrices needed mitigation");
        const Matrix a = random_integer_matrix(n, rng);
        std::optional<CondensationResult> cond;
        try {
            cond = condensation_det(a);
        } catch (const FallbackRequired&) {
        }
        if (!cond || !cond->trace.mitigation.empty() || !cond->trace.restarts.empty()) {
            ++report.regenerated;
            continue;
        }
        OpCount cof;
        cofactor_det(a, cof);
        report.condensation_total += cond->trace.ops;
        report.cofactor_total += cof;
        ++t;
    }

    const double denom = static_cast<double>(trials);
    report.condensation_ops =
        static_cast<double>(report.condensation_total.mults + report.condensation_total.divs) / denom;
    report.cofactor_ops = static_cast<double>(report.cofactor_total.mults) / denom;
    report.ratio = report.condensation_ops / report.cofactor_ops;
    return report;
}

std::string format_ratio_table(const std::vector<RatioReport>& rows) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%4s %8s %16s %14s %8s %12s\n", "n", "trials", "condensation_ops",
                  "cofactor_ops", "ratio", "regenerated");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%4zu %8zu %16.2f %14.2f %8.4f %12zu\n", r.n, r.trials, r.condensation_ops,
                      r.cofactor_ops, r.ratio, r.regenerated);
        out << line;
    }
    return out.str();
}

}  // namespace dodgson
