#include "catchmesh/mesh.hpp"

#include "catchmesh/covering.hpp"
#include "catchmesh/equal_area.hpp"

#include <cmath>
#include <stdexcept>

namespace catchmesh {

long mesh_cardinality(int n, const MeshCardinalityPolicy& policy) {
    if (n < 1)
        throw std::invalid_argument("mesh_cardinality: degree must be >= 1");

    switch (policy.variant) {
    case CardinalityVariant::table1: {
        const double t = n - 1.0 / (4.0 * kPi);
        return static_cast<long>(std::ceil(49.0 * t * t));
    }
    case CardinalityVariant::proposition2: {
        if (!(policy.theta > 0.0) || !(policy.theta < 1.0) || !(policy.alpha > 0.0))
            throw std::invalid_argument("mesh_cardinality: need theta in (0,1), alpha > 0");
        const double sigma = 2.0 * kPi * policy.alpha /
                             (policy.theta * (2.0 * kPi - policy.theta / n));
        return static_cast<long>(std::ceil(sigma * sigma * n * n));
    }
    }
    throw std::invalid_argument("mesh_cardinality: unknown variant");
}

PolynomialMesh build_optimal_mesh(int n, const MeshCardinalityPolicy& policy) {
    const long card = mesh_cardinality(n, policy);

    PolynomialMesh mesh;
    mesh.config = zonal_equal_area_points(static_cast<int>(card));
    mesh.degree = n;
    mesh.theta = policy.theta;
    mesh.mesh_constant = 1.0 / (1.0 - policy.theta);
    return mesh;
}

bool certify_dubiner(const PolynomialMesh& mesh, const PointConfiguration& probe) {
    return verify_dubiner_covering(mesh.config, mesh.degree, mesh.theta, probe);
}

} // namespace catchmesh
