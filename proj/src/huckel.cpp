#include "dodgson/huckel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dodgson/oracle.hpp"

namespace dodgson::huckel {

PiSystem::PiSystem(std::size_t n_atoms) : n_atoms_(n_atoms) {
    if (n_atoms == 0) throw std::invalid_argument("a pi system needs at least one atom");
}

PiSystem PiSystem::chain(std::size_t n_atoms) {
    PiSystem s(n_atoms);
    for (std::size_t i = 0; i + 1 < n_atoms; ++i) s.add_edge(i, i + 1);
    return s;
}

PiSystem PiSystem::ring(std::size_t n_atoms) {
    if (n_atoms < 3) throw std::invalid_argument("a ring needs at least three atoms");
    PiSystem s = chain(n_atoms);
    s.add_edge(n_atoms - 1, 0);
    return s;
}

void PiSystem::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_atoms_ || j >= n_atoms_) throw std::invalid_argument("edge atom index out of range");
    if (i == j) throw std::invalid_argument("self-loop on atom " + std::to_string(i));
    edges_.emplace(std::min(i, j), std::max(i, j));
}

bool PiSystem::adjacent(std::size_t i, std::size_t j) const {
    return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

PiSystem parse_pi_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    std::optional<PiSystem> system;

    auto read_index = [&](std::istringstream& words, const std::string& keyword) -> std::size_t {
        std::string tok;
        if (!(words >> tok)) throw ParseError("'" + keyword + "' needs more arguments", line, keyword);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            tok.size() > 9) {
            throw ParseError("expected a positive integer, got '" + tok + "'", line, tok);
        }
        return std::stoul(tok);
    };

    while (std::getline(in, raw)) {
        ++line;
        std::istringstream words(raw);
        std::string keyword;
        if (!(words >> keyword) || keyword.front() == '#') continue;

        if (keyword == "atoms") {
            if (system) throw ParseError("duplicate 'atoms' line", line, keyword);
            const std::size_t n = read_index(words, keyword);
            if (n == 0) throw ParseError("atom count must be positive", line, "0");
            system.emplace(n);
        } else if (keyword == "edge") {
            if (!system) throw ParseError("'edge' before 'atoms'", line, keyword);
            const std::size_t i = read_index(words, keyword);
            const std::size_t j = read_index(words, keyword);
            if (i == 0 || j == 0 || i > system->n_atoms() || j > system->n_atoms()) {
                throw ParseError("atom index out of range 1.." + std::to_string(system->n_atoms()), line,
                                 std::to_string(i == 0 || i > system->n_atoms() ? i : j));
            }
            if (i == j) throw ParseError("self-loop on atom " + std::to_string(i), line, std::to_string(i));
            system->add_edge(i - 1, j - 1);
        } else {
            throw ParseError("unknown keyword '" + keyword + "'", line, keyword);
        }
        std::string extra;
        if (words >> extra && extra.front() != '#') throw ParseError("unexpected token '" + extra + "'", line, extra);
    }
    if (!system) throw ParseError("missing 'atoms N' line");
    return *system;
}

PiSystem read_pi_system_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open pi-system file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pi_system(buf.str());
}

Matrix secular_matrix(const PiSystem& system) {
    const std::size_t n = system.n_atoms();
    const Scalar x = Scalar::polynomial(Polynomial::x());
    const Scalar one = Scalar::polynomial(Polynomial::constant(1));
    const Scalar zero = Scalar::polynomial(Polynomial{});
    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries.push_back(i == j ? x : system.adjacent(i, j) ? one : zero);
    return Matrix(n, n, std::move(entries));
}

SecularPolynomial secular_polynomial(const PiSystem& system) {
    const Matrix m = secular_matrix(system);
    SecularPolynomial out;
    try {
        auto result = condensation_det(m);
        out.poly = result.det.as_polynomial();
        out.trace = std::move(result.trace);
        out.method = DetMethod::Condensation;
    } catch (const FallbackRequired&) {
        out.poly = bareiss_det(m).as_polynomial();
        out.method = DetMethod::Bareiss;
    }
    return out;
}

namespace {

std::string superscript(std::size_t k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(k)) s += digits[c - '0'];
    return s;
}

}  // namespace

std::string symbolic_form(const Polynomial& p, SymbolStyle style) {
    const bool uni = style == SymbolStyle::Unicode;
    const std::string minus = uni ? "−" : "-";
    const std::string diff = uni ? "(α−E)" : "(alpha-E)";
    const std::string beta = uni ? "β" : "beta";
    if (p.is_zero()) return "0";

    auto power = [&](const std::string& base, std::size_t k) {
        if (k == 1) return base;
        return base + (uni ? superscript(k) : "^" + std::to_string(k));
    };

    const auto n = static_cast<std::size_t>(p.degree());
    std::string out;
    bool first = true;
    for (std::size_t k = n + 1; k-- > 0;) {
        const mpq_class& c = p.coefficients()[k];
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += minus;
        } else {
            out += negative ? " " + minus + " " : " + ";
        }
        first = false;

        std::vector<std::string> factors;
        const mpq_class mag = abs(c);
        if (mag != 1) factors.push_back(mag.get_str());
        if (n - k > 0) factors.push_back(power(beta, n - k));
        if (k > 0) factors.push_back(power(diff, k));
        if (factors.empty()) factors.push_back("1");
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f && !uni) out += "*";
            out += factors[f];
        }
    }
    return out;
}

std::vector<std::complex<double>> durand_kerner(const Polynomial& p, double tol, std::size_t max_iterations) {
    if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no finite root set");
    const Polynomial monic = p.monic();
    const auto d = static_cast<std::size_t>(monic.degree());
    if (d == 0) return {};

    std::vector<double> a(d + 1);
    double radius = 1.0;
    for (std::size_t k = 0; k <= d; ++k) {
        a[k] = monic.coefficients()[k].get_d();
        if (k < d) radius = std::max(radius, 1.0 + std::abs(a[k]));
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = d + 1; k-- > 0;) acc = acc * z + a[k];
        return acc;
    };

    // Fixed offset keeps the starting circle off any symmetry axis.
    constexpr double kOffset = 0.4;
    std::vector<std::complex<double>> z(d), next(d);
    for (std::size_t k = 0; k < d; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + kOffset);

    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        double moved = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            const std::complex<double> delta = eval(z[k]) / denom;
            next[k] = z[k] - delta;
            moved = std::max(moved, std::abs(delta));
        }
        z.swap(next);
        if (!std::isfinite(moved)) break;
        if (moved < tol / 10.0) return z;
    }
    throw NoConvergence("Durand-Kerner did not converge within " + std::to_string(max_iterations) + " iterations");
}

std::vector<double> real_roots(const Polynomial& p, double tol, std::size_t max_iterations) {
    if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no finite root set");
    std::vector<double> roots;
    if (p.degree() == 0) return roots;

    // Yun's square-free factorization: p = prod_i f_i^i with f_i square-free.
    const Polynomial dp = p.derivative();
    Polynomial g = gcd(p, dp);
    Polynomial w = divmod(p, g).quotient;
    Polynomial y = divmod(dp, g).quotient;
    Polynomial z = y - w.derivative();
    std::size_t multiplicity = 1;
    while (w.degree() > 0) {
        const Polynomial f = gcd(w, z);
        if (f.degree() > 0) {
            for (const auto& root : durand_kerner(f, tol, max_iterations)) {
                if (std::abs(root.imag()) >= tol) continue;
                roots.insert(roots.end(), multiplicity, root.real());
            }
        }
        w = divmod(w, f).quotient;
        y = divmod(z, f).quotient;
        z = y - w.derivative();
        ++multiplicity;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> energy_levels(const PiSystem& system, double alpha, double beta, double tol) {
    if (beta == 0.0) throw std::invalid_argument("beta must be nonzero");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const auto poly = secular_polynomial(system).poly;
    std::vector<double> energies;
    for (double x : real_roots(poly, tol)) energies.push_back(alpha - beta * x);
    std::sort(energies.begin(), energies.end());
    return energies;
}

}  // namespace dodgson::huckel
