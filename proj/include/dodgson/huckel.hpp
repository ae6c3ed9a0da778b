#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dodgson/condense.hpp"
#include "dodgson/matrix.hpp"

namespace dodgson::huckel {

/// Connectivity of a pi framework. Atoms are 0-based here; the text format
/// uses 1-based indices.
class PiSystem {
public:
    explicit PiSystem(std::size_t n_atoms);

    /// Linear chain 0-1-...-(n-1).
    static PiSystem chain(std::size_t n_atoms);
    static PiSystem ring(std::size_t n_atoms);

    /// Throws std::invalid_argument on self-loops or out-of-range atoms.
    void add_edge(std::size_t i, std::size_t j);

    std::size_t n_atoms() const noexcept { return n_atoms_; }
    bool adjacent(std::size_t i, std::size_t j) const;
    /// Edges with first < second.
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

private:
    std::size_t n_atoms_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Parses "atoms N" followed by "edge i j" lines (1-based), '#' comments.
/// Throws ParseError.
PiSystem parse_pi_system(std::string_view text);
PiSystem read_pi_system_file(const std::filesystem::path& path);

/// The secular matrix in the reduced variable x = (alpha - E) / beta:
/// x on the diagonal, 1 between bonded atoms, 0 elsewhere.
Matrix secular_matrix(const PiSystem& system);

enum class DetMethod { Condensation, Bareiss };

struct SecularPolynomial {
    Polynomial poly;  // monic, degree n_atoms
    DetMethod method = DetMethod::Condensation;
    CondensationTrace trace;  // populated when method == Condensation
};

/// det(secular_matrix) by condensation over Q[x], falling back to Bareiss
/// elimination when condensation cannot proceed.
SecularPolynomial secular_polynomial(const PiSystem& system);

enum class SymbolStyle { Unicode, Ascii };

/// The full secular determinant beta^n * p((alpha - E) / beta) written in
/// alpha, beta and E, e.g. "(α−E)³ − 2β²(α−E)" for the three-atom chain.
std::string symbolic_form(const Polynomial& p, SymbolStyle style = SymbolStyle::Unicode);

/// All complex roots of a polynomial by Durand-Kerner iteration, starting
/// from a circle of radius 1 + max|coefficient| (monic form). Converged
/// when no root moves more than tol / 10 in a sweep. Throws NoConvergence.
std::vector<std::complex<double>> durand_kerner(const Polynomial& p, double tol, std::size_t max_iterations = 1000);

/// Real roots of p with multiplicity, ascending. Repeated roots are split
/// off exactly by square-free factorization before iterating.
std::vector<double> real_roots(const Polynomial& p, double tol, std::size_t max_iterations = 1000);

/// Energy levels E = alpha - beta * x over the roots x of the secular
/// polynomial, ascending. Throws std::invalid_argument for beta == 0 or
/// tol <= 0, NoConvergence from the root finder.
std::vector<double> energy_levels(const PiSystem& system, double alpha, double beta, double tol = 1e-10);

}  // namespace dodgson::huckel
