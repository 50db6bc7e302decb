#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace tightgon {

class degenerate_configuration_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class invalid_configuration_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ContactKind { vertex_on_vertex, vertex_on_edge };

/// One declared contact: inner vertex j_i touches outer edge j_o.
/// vertex_on_vertex pins the contact to the outer vertex j_o (t = 0);
/// t_fixed pins the edge parameter (e.g. 1/2 for a midpoint contact).
struct ContactConstraint {
    ContactKind kind;
    int j_i;
    int j_o;
    std::optional<double> t_fixed;
};

struct TranslatedSolution {
    double ratio;                  // r_m^(o) / r_n^(o)
    double shift;                  // z_m^(o) / r_m^(o), real (sideways)
    std::vector<double> t_values;  // edge parameter per constraint
};

/// Solves the sideways-shifted contact system for the given constraints.
/// Unknowns are the shift, the radius ratio and one t per unpinned edge
/// contact; the stacked real/imaginary contact equations must determine
/// them uniquely.  The solved configuration is verified geometrically.
TranslatedSolution solve_translated(int n, int m,
                                    std::span<const ContactConstraint> constraints);

/// Preset contact configurations "3-4", "4-3", "3-5".
std::vector<ContactConstraint> preset_constraints(std::string_view name);

struct ConcentricComparison {
    double translated;
    double standard;
    double rotated;
    bool translated_beats_both;  // translated < rotated <= standard
};

/// Compares a preset translated solution against the concentric ratios.
/// Supported pairs: (3,4), (4,3), (3,5).
ConcentricComparison translated_vs_concentric(int n, int m);

}  // namespace tightgon
