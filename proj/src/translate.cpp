#include "tightgon/translate.hpp"

#include "tightgon/circumscribe.hpp"
#include "tightgon/polygon.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace tightgon {

namespace {

void check_constraint(int n, int m, const ContactConstraint& c) {
    if (c.j_i < 0 || c.j_i >= n || c.j_o < 0 || c.j_o >= m)
        throw std::domain_error("contact indices out of range");
    if (c.t_fixed && (*c.t_fixed < 0.0 || *c.t_fixed > 1.0))
        throw std::domain_error("pinned edge parameter must lie in [0,1]");
}

}  // namespace

TranslatedSolution solve_translated(int n, int m,
                                    std::span<const ContactConstraint> constraints) {
    if (n < 3 || m < 3)
        throw std::domain_error("side counts must be >= 3");
    if (constraints.empty())
        throw std::domain_error("at least one contact constraint is required");

    const double phi_n = 2.0 * M_PI / n;
    const double phi_m = 2.0 * M_PI / m;

    // Unknowns: x = [shift, R, t_0, t_1, ...] with shift = z/r_m and
    // R = r_n/r_m; one t per edge contact without a pinned parameter.
    int free_t = 0;
    for (const auto& c : constraints) {
        check_constraint(n, m, c);
        if (c.kind == ContactKind::vertex_on_edge && !c.t_fixed)
            ++free_t;
    }
    const int unknowns = 2 + free_t;
    const int rows = 2 * static_cast<int>(constraints.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, unknowns);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);

    // Contact equation, divided through r_m e^{i j_o phi_m}:
    //   shift e^{-i j_o phi_m} + 1 + t(e^{i phi_m} - 1) = R e^{i(j_i phi_n - j_o phi_m)}
    int row = 0, t_col = 2;
    std::vector<int> t_index(constraints.size(), -1);
    for (size_t k = 0; k < constraints.size(); ++k) {
        const auto& c = constraints[k];
        const double co = c.j_o * phi_m;
        const double rel = c.j_i * phi_n - c.j_o * phi_m;
        double t_pin = 0.0;
        int col = -1;
        if (c.kind == ContactKind::vertex_on_edge) {
            if (c.t_fixed)
                t_pin = *c.t_fixed;
            else {
                col = t_col++;
                t_index[k] = col;
            }
        }
        // real part
        A(row, 0) = std::cos(co);
        A(row, 1) = -std::cos(rel);
        if (col >= 0)
            A(row, col) = std::cos(phi_m) - 1.0;
        b(row) = -1.0 - t_pin * (std::cos(phi_m) - 1.0);
        ++row;
        // imaginary part
        A(row, 0) = -std::sin(co);
        A(row, 1) = -std::sin(rel);
        if (col >= 0)
            A(row, col) = std::sin(phi_m);
        b(row) = -t_pin * std::sin(phi_m);
        ++row;
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-12);
    if (lu.rank() < unknowns)
        throw degenerate_configuration_error(
            "contact constraints do not determine the configuration");
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    const double residual = (A * x - b).lpNorm<Eigen::Infinity>();
    if (residual > 1e-9)
        throw invalid_configuration_error("contact constraints are inconsistent");

    const double shift = x(0);
    const double R = x(1);
    if (!(R > 0.0))
        throw invalid_configuration_error("configuration yields a non-positive ratio");

    TranslatedSolution sol;
    sol.ratio = 1.0 / R;
    sol.shift = shift;
    for (size_t k = 0; k < constraints.size(); ++k) {
        double t = 0.0;
        if (constraints[k].kind == ContactKind::vertex_on_edge)
            t = constraints[k].t_fixed ? *constraints[k].t_fixed : x(t_index[k]);
        if (t < -1e-10 || t > 1.0 + 1e-10)
            throw invalid_configuration_error("recovered edge parameter outside [0,1]");
        sol.t_values.push_back(std::clamp(t, 0.0, 1.0));
    }

    // geometric verification of the full shifted configuration
    const PolygonSpec inner(n, 1.0);
    const PolygonSpec outer(m, sol.ratio, 0.0, Point2(shift * sol.ratio, 0.0));
    for (const auto& v : vertices(inner))
        if (!contains(outer, v, 1e-9))
            throw invalid_configuration_error("shifted configuration loses containment");
    return sol;
}

std::vector<ContactConstraint> preset_constraints(std::string_view name) {
    if (name == "3-4")
        return {{ContactKind::vertex_on_vertex, 0, 0, std::nullopt},
                {ContactKind::vertex_on_edge, 1, 1, std::nullopt}};
    if (name == "4-3")
        return {{ContactKind::vertex_on_edge, 2, 1, 0.5},
                {ContactKind::vertex_on_edge, 1, 0, std::nullopt}};
    if (name == "3-5")
        return {{ContactKind::vertex_on_vertex, 0, 0, std::nullopt},
                {ContactKind::vertex_on_edge, 1, 1, std::nullopt}};
    throw std::invalid_argument("unknown translate preset: " + std::string(name));
}

ConcentricComparison translated_vs_concentric(int n, int m) {
    std::string key;
    if (n == 3 && m == 4)
        key = "3-4";
    else if (n == 4 && m == 3)
        key = "4-3";
    else if (n == 3 && m == 5)
        key = "3-5";
    else
        throw std::invalid_argument("no translated preset for this pair");
    const auto sol = solve_translated(n, m, preset_constraints(key));
    ConcentricComparison out;
    out.translated = sol.ratio;
    out.standard = tight_standard(n, m).ratio;
    out.rotated = tight_rotated(n, m).base.ratio;
    out.translated_beats_both =
        out.translated < out.rotated && out.rotated <= out.standard + 1e-12;
    return out;
}

}  // namespace tightgon
