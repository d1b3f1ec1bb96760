#pragma once

#include "cliffspec/quartic.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cliffspec {

struct Box3 {
    Vec3 min, max;

    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
               p.z <= max.z;
    }
};

/// D sampled on a regular lattice over bbox, x-fastest order:
/// values[ix + dims[0] * (iy + dims[1] * iz)].
struct ScalarField {
    Box3 bbox;
    std::array<int, 3> dims{};
    std::vector<double> values;

    Vec3 lattice_point(int ix, int iy, int iz) const;
    double value(int ix, int iy, int iz) const {
        return values[std::size_t(ix) + std::size_t(dims[0]) * (std::size_t(iy) + std::size_t(dims[1]) * std::size_t(iz))];
    }
};

/// Zero-level triangulation with every vertex refined onto the surface.
/// `residual` holds D at each vertex. An empty mesh is a valid outcome for
/// isolated-point spectra and sets empty_warning with components = 0.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<double> residual;
    int components = 0;
    bool empty_warning = false;
};

enum class MeshFormat { Obj, Ply, Csv };

/// Cube around `center` guaranteed (up to the 26-direction sampling of the
/// positivity check) to contain the zero set of D. The half-width starts at
/// sqrt(max(2 lambda0 - beta, 0)) + 1 and doubles until D > 0 in all 26
/// lattice directions on the enclosing sphere.
Box3 bounding_box(const QuarticInvariants& inv, const Vec3& center);

/// Evaluates the centered quartic at every lattice point (shifted by
/// `center`) through the dispatched row kernel. Rejects more than 1e9
/// total samples.
ScalarField sample(const QuarticInvariants& inv, const Vec3& center, const Box3& bbox,
                   const std::array<int, 3>& dims);

/// Marching cubes at level zero followed by per-vertex bisection along the
/// generating grid edge until |D| <= 1e-10 (1 + beta)^2, then component
/// counting by union-find (shared edge vertices, plus merging of vertices
/// within 1e-9 of each other).
TriangleMesh extract(const ScalarField& field, const QuarticInvariants& inv, const Vec3& center);

/// Deterministic text export; floats are printed with 17 significant
/// digits. CSV rows are "x,y,z,D" with the vertex residual.
std::string export_mesh(const TriangleMesh& mesh, MeshFormat format);

MeshFormat mesh_format_from_name(const std::string& name); // "obj" | "ply" | "csv"
const char* mesh_format_name(MeshFormat f);

} // namespace cliffspec
