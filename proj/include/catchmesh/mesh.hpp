#pragma once

#include "catchmesh/geometry.hpp"

namespace catchmesh {

// How many points a degree-n norming mesh needs.
//
//  - proposition2: ceil(sigma_n^2 * n^2) with
//    sigma_n = 2*pi*alpha / (theta * (2*pi - theta/n)); alpha is the
//    covering safety factor of the point family, theta the mesh parameter.
//  - table1: ceil(49 * (n - 1/(4*pi))^2), the closed form the two defaults
//    (alpha = 3.5, theta = 1/2) collapse to; ignores the policy fields.
enum class CardinalityVariant { proposition2, table1 };

struct MeshCardinalityPolicy {
    double alpha = 3.5;
    double theta = 0.5;
    CardinalityVariant variant = CardinalityVariant::table1;
};

long mesh_cardinality(int n, const MeshCardinalityPolicy& policy = {});

// Norming mesh for degree-n polynomials: every p of degree <= n satisfies
// ||p||_inf(S^2) <= mesh_constant * max over config |p|.
struct PolynomialMesh {
    PointConfiguration config;
    int degree = 0;
    double theta = 0.0;
    double mesh_constant = 0.0;   // 1 / (1 - theta)
};

// Zonal equal-area configuration of mesh_cardinality(n, policy) points.
// The covering certificate is not run here (it needs a probe set); use
// certify_dubiner when one is available.
PolynomialMesh build_optimal_mesh(int n, const MeshCardinalityPolicy& policy = {});

bool certify_dubiner(const PolynomialMesh& mesh, const PointConfiguration& probe);

} // namespace catchmesh
