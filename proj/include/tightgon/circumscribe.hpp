#pragma once

#include <cstdint>
#include <vector>

namespace tightgon {

/// One tight contact between an inner n-gon vertex and an outer m-gon edge.
struct ContactSolution {
    double ratio;       // r_m^(o) / r_n^(o)
    int j_i;            // inner vertex index
    int j_o;            // outer edge index
    double t;           // contact position along the outer edge, in [0,1]
    std::int64_t mismatch;  // 2*j_i*m - (2*j_o+1)*n, minus s when rotated
};

struct RotatedSolution {
    ContactSolution base;
    int s;          // rotation code
    double alpha;   // actual rotation angle applied to the outer polygon
};

/// Signed ratio cos(j_i*phi_n - (j_o+1/2)*phi_m - alpha) / cos(phi_m/2).
double pair_ratio(int n, int m, int j_i, int j_o, double alpha);

/// Integer mismatch 2*j_i*m - (2*j_o+1)*n.
std::int64_t mismatch(int n, int m, int j_i, int j_o);

/// Tight concentric circumscription in standard position (alpha = 0).
/// Ties broken by smallest j_i, then smallest j_o.
ContactSolution tight_standard(int n, int m);

/// Tight circumscription with the outer polygon rotated by alpha = p/q
/// units of pi/(n*m).  Exact integer arithmetic selects the contact.
ContactSolution tight_lattice(int n, int m, std::int64_t p, std::int64_t q);

/// Tight circumscription at an arbitrary rotation angle (floating scan).
ContactSolution tight_at_rotation(int n, int m, double alpha);

/// Rotation code minimizing the circumscription ratio: gcd(n,m) when
/// n/gcd(n,m) is even, otherwise 0 (no rotation helps).
int s_heuristic(int n, int m);

/// Angle used for the tabulated rotated placements.  The lattice midpoint
/// angle is s*pi/(n*m); when n/gcd(n,m) is a multiple of 4 the tabulated
/// placements sit at 24/25 of it.
double rotated_placement_angle(int n, int m, int s);

/// Tight circumscription at the heuristic rotation, tabulated-placement
/// convention.  mismatch is reported minus s.
RotatedSolution tight_rotated(int n, int m);

struct RotationSearch {
    int best_s;
    double best_ratio;      // min over integer s of the tight ratio
    double heuristic_ratio; // tight ratio at s_heuristic, lattice angle
};

/// Exhaustive scan of integer rotation codes s in [0, 2*lcm(n,m)).
RotationSearch search_rotation(int n, int m);

/// Smallest scale factor rho such that the rho-circumradius m-gon rotated
/// by alpha contains every vertex of the unit-circumradius n-gon.
/// Bisection to absolute width 1e-12.
double oracle_min_ratio(int n, int m, double alpha);

struct PrimePairRow {
    int n, m, j_i, j_o;
    std::int64_t mismatch;
    bool unit_mismatch;  // |mismatch| == 1
};

/// Tight contacts for consecutive odd prime pairs with m <= p_max.
/// Rows with |mismatch| != 1 are flagged, not rejected.
std::vector<PrimePairRow> prime_pair_table(int p_max);

}  // namespace tightgon
