#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dodgson/condense.hpp"
#include "dodgson/huckel.hpp"
#include "dodgson/matrix_io.hpp"
#include "dodgson/oracle.hpp"

namespace py = pybind11;
using namespace dodgson;

namespace {

// Python scalars travel as text tokens so ints keep arbitrary precision and
// Fractions stay exact; the matrix builder then applies the usual ring rules.
std::string token_of(const py::handle& value) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (py::isinstance<py::bool_>(value)) throw py::type_error("bool is not a matrix entry");
    if (py::isinstance<py::int_>(value)) return py::str(value).cast<std::string>();
    if (py::isinstance(value, fraction)) {
        return py::str(value.attr("numerator")).cast<std::string>() + "/" +
               py::str(value.attr("denominator")).cast<std::string>();
    }
    if (py::isinstance<py::float_>(value)) {
        std::string s = py::repr(value).cast<std::string>();
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        return s;
    }
    if (py::isinstance<py::str>(value)) return value.cast<std::string>();
    throw py::type_error("matrix entries must be int, Fraction, float or str");
}

Matrix to_matrix(const py::sequence& rows, double tolerance) {
    std::vector<std::vector<std::string>> tokens;
    for (const auto& row : rows) {
        auto& out = tokens.emplace_back();
        for (const auto& v : row.cast<py::sequence>()) out.push_back(token_of(v));
    }
    return matrix_from_tokens(tokens, tolerance);
}

py::object to_python(const Scalar& s) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    switch (s.kind()) {
        case RingKind::Integer: return py::int_(py::str(s.as_integer().get_str()));
        case RingKind::Rational: {
            const mpq_class& q = s.as_rational();
            return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
        }
        case RingKind::Real: return py::float_(s.as_real().value);
        case RingKind::Polynomial: {
            py::list coeffs;
            for (const auto& c : s.as_polynomial().coefficients()) {
                coeffs.append(fraction(py::int_(py::str(c.get_num().get_str())),
                                       py::int_(py::str(c.get_den().get_str()))));
            }
            return std::move(coeffs);
        }
    }
    return py::none();
}

py::list to_python(const Matrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_python(m(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::dict ops_dict(const OpCount& ops) {
    py::dict d;
    d["mults"] = ops.mults;
    d["divs"] = ops.divs;
    d["adds"] = ops.adds;
    return d;
}

py::dict trace_dict(const CondensationTrace& t) {
    py::dict d;
    py::list stages, starred, log;
    for (const auto& s : t.stages) stages.append(to_python(s));
    for (const auto& s : t.starred) starred.append(to_python(s));
    for (const auto& op : t.mitigation.operations()) log.append(format_op(op));
    d["stages"] = stages;
    d["starred"] = starred;
    d["mitigation"] = log;
    d["sign"] = t.mitigation.sign();
    d["ops"] = ops_dict(t.ops);
    d["restarts"] = t.restarts.size();
    d["precision_warning"] = t.precision_warning;
    return d;
}

huckel::PiSystem to_system(std::size_t n_atoms, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    huckel::PiSystem s(n_atoms);
    for (auto [i, j] : edges) s.add_edge(i, j);
    return s;
}

}  // namespace

PYBIND11_MODULE(_dodgson, m) {
    m.doc() = "Exact determinants by condensation, reference oracles and Hückel energy levels";

    py::register_exception<Error>(m, "Error");
    py::register_exception<FallbackRequired>(m, "FallbackRequired", m.attr("Error"));
    py::register_exception<NoConvergence>(m, "NoConvergence", m.attr("Error"));
    py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));

    m.def(
        "det",
        [](const py::sequence& rows, const std::string& method, double tolerance) {
            const Matrix a = to_matrix(rows, tolerance);
            if (method == "cofactor") return to_python(cofactor_det(a));
            if (method == "bareiss") return to_python(bareiss_det(a));
            if (method == "condense") return to_python(condensation_det(a).det);
            if (method == "auto") {
                try {
                    return to_python(condensation_det(a).det);
                } catch (const FallbackRequired&) {
                    return to_python(bareiss_det(a));
                }
            }
            throw py::value_error("method must be condense, cofactor, bareiss or auto");
        },
        py::arg("matrix"), py::arg("method") = "auto", py::arg("tolerance") = kDefaultTolerance);

    m.def(
        "condense",
        [](const py::sequence& rows, double tolerance) {
            auto result = condensation_det(to_matrix(rows, tolerance));
            return py::make_tuple(to_python(result.det), trace_dict(result.trace));
        },
        py::arg("matrix"), py::arg("tolerance") = kDefaultTolerance,
        "Determinant by condensation plus its trace (stages, starred, mitigation, sign, ops).");

    m.def(
        "jacobi_check", [](const py::sequence& rows) { return jacobi_check(to_matrix(rows, kDefaultTolerance)); },
        py::arg("matrix"));

    m.def(
        "count_ratio",
        [](std::size_t n, std::size_t trials, std::uint64_t seed) {
            const RatioReport r = count_ratio(n, trials, seed);
            py::dict d;
            d["n"] = r.n;
            d["trials"] = r.trials;
            d["condensation_ops"] = r.condensation_ops;
            d["cofactor_ops"] = r.cofactor_ops;
            d["ratio"] = r.ratio;
            d["regenerated"] = r.regenerated;
            return d;
        },
        py::arg("n"), py::arg("trials"), py::arg("seed"));

    m.def(
        "secular_polynomial",
        [](std::size_t n_atoms, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            return to_python(Scalar::polynomial(huckel::secular_polynomial(to_system(n_atoms, edges)).poly));
        },
        py::arg("n_atoms"), py::arg("edges"),
        "Reduced secular polynomial coefficients (lowest degree first); edges are 0-based atom pairs.");

    m.def(
        "symbolic_form",
        [](std::size_t n_atoms, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            return huckel::symbolic_form(huckel::secular_polynomial(to_system(n_atoms, edges)).poly);
        },
        py::arg("n_atoms"), py::arg("edges"));

    m.def(
        "energy_levels",
        [](std::size_t n_atoms, const std::vector<std::pair<std::size_t, std::size_t>>& edges, double alpha,
           double beta, double tol) { return huckel::energy_levels(to_system(n_atoms, edges), alpha, beta, tol); },
        py::arg("n_atoms"), py::arg("edges"), py::arg("alpha"), py::arg("beta"), py::arg("tol") = 1e-10);
}
