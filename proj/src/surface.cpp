#include "cliffspec/surface.hpp"

#include "mc_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace cliffspec {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

void append_f(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void append_i(std::string& out, long long v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", v);
    out += buf;
}

// The 26 lattice directions (i,j,k) in {-1,0,1}^3 minus the origin,
// normalized.
std::vector<Vec3> sphere_directions() {
    std::vector<Vec3> dirs;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k) {
                if (i == 0 && j == 0 && k == 0) continue;
                Vec3 d{double(i), double(j), double(k)};
                dirs.push_back(d * (1.0 / d.norm()));
            }
    return dirs;
}

} // namespace

Vec3 ScalarField::lattice_point(int ix, int iy, int iz) const {
    const Vec3 span = bbox.max - bbox.min;
    return Vec3{bbox.min.x + double(ix) * span.x / double(dims[0] - 1),
                bbox.min.y + double(iy) * span.y / double(dims[1] - 1),
                bbox.min.z + double(iz) * span.z / double(dims[2] - 1)};
}

Box3 bounding_box(const QuarticInvariants& inv, const Vec3& center) {
    double radius = std::sqrt(std::max(2.0 * inv.lambda0 - inv.beta, 0.0)) + 1.0;
    const auto dirs = sphere_directions();

    for (int doubling = 0; doubling <= 40; ++doubling) {
        bool all_positive = true;
        for (const Vec3& d : dirs) {
            if (D_at_offset(inv, d * radius) <= 0.0) {
                all_positive = false;
                break;
            }
        }
        if (all_positive)
            return Box3{center - Vec3{radius, radius, radius},
                        center + Vec3{radius, radius, radius}};
        radius *= 2.0;
    }
    throw internal_error("bounding_box: D not positive on the sphere after 40 doublings; "
                         "this contradicts quartic growth");
}

ScalarField sample(const QuarticInvariants& inv, const Vec3& center, const Box3& bbox,
                   const std::array<int, 3>& dims) {
    for (int d : dims)
        if (d < 2) throw validation_error("sample: need at least 2 samples per axis");
    const std::size_t total =
        std::size_t(dims[0]) * std::size_t(dims[1]) * std::size_t(dims[2]);
    if (total > 1000000000ull)
        throw validation_error("sample: more than 1e9 lattice points requested");

    ScalarField field;
    field.bbox = bbox;
    field.dims = dims;
    field.values.resize(total);

    const QuarticFieldCoeffs coeffs = field_coeffs(inv);
    const FieldRowFn row = field_row_kernel();

    std::vector<double> xs(static_cast<std::size_t>(dims[0]));
    for (int ix = 0; ix < dims[0]; ++ix)
        xs[std::size_t(ix)] = field.lattice_point(ix, 0, 0).x - center.x;

    std::size_t offset = 0;
    for (int iz = 0; iz < dims[2]; ++iz) {
        for (int iy = 0; iy < dims[1]; ++iy) {
            const Vec3 p = field.lattice_point(0, iy, iz);
            row(coeffs, xs.data(), std::size_t(dims[0]), p.y - center.y, p.z - center.z,
                field.values.data() + offset);
            offset += std::size_t(dims[0]);
        }
    }
    return field;
}

namespace {

// Cube corner offsets in the table convention: 0..3 bottom face
// counterclockwise, 4..7 the face above.
constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

// Edge -> (corner, corner); axis/anchor derived from the pair.
constexpr int kEdgeCorner[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};

struct Extractor {
    const ScalarField& field;
    const QuarticInvariants& inv;
    Vec3 center;
    double refine_tol;

    TriangleMesh mesh;
    std::unordered_map<std::uint64_t, int> edge_vertex;

    Extractor(const ScalarField& f, const QuarticInvariants& i, const Vec3& c)
        : field(f), inv(i), center(c), refine_tol(1e-10 * (1.0 + i.beta) * (1.0 + i.beta)) {}

    double eval(const Vec3& p) const { return D_at_offset(inv, p - center); }

    // Bisect D along the lattice edge [pa, pb]; va = D(pa), vb = D(pb) with
    // opposite strict signs unless one end is already a root.
    Vec3 refine_on_edge(const Vec3& pa, const Vec3& pb, double va, double vb,
                        double& residual) const {
        if (std::abs(va) <= refine_tol) {
            residual = va;
            return pa;
        }
        if (std::abs(vb) <= refine_tol) {
            residual = vb;
            return pb;
        }
        double lo = 0.0, hi = 1.0;
        double dlo = va;
        Vec3 best = pa;
        double best_signed = va;
        for (int iter = 0; iter < 100; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const Vec3 pm{pa.x + mid * (pb.x - pa.x), pa.y + mid * (pb.y - pa.y),
                          pa.z + mid * (pb.z - pa.z)};
            const double dm = eval(pm);
            if (std::abs(dm) < std::abs(best_signed)) {
                best_signed = dm;
                best = pm;
            }
            if (std::abs(dm) <= refine_tol) break;
            if ((dm < 0.0) == (dlo < 0.0)) {
                lo = mid;
                dlo = dm;
            } else {
                hi = mid;
            }
            if (hi - lo <= 1e-17) break;
        }
        residual = best_signed;
        return best;
    }

    std::uint64_t edge_key(int ix, int iy, int iz, int edge) const {
        const int* ca = kCorner[kEdgeCorner[edge][0]];
        const int* cb = kCorner[kEdgeCorner[edge][1]];
        // Anchor at the lexicographically smaller corner; direction is the
        // axis where the corners differ.
        int ax = ix + std::min(ca[0], cb[0]);
        int ay = iy + std::min(ca[1], cb[1]);
        int az = iz + std::min(ca[2], cb[2]);
        int axis = ca[0] != cb[0] ? 0 : (ca[1] != cb[1] ? 1 : 2);
        const std::uint64_t lin =
            (std::uint64_t(az) * std::uint64_t(field.dims[1]) + std::uint64_t(ay)) *
                std::uint64_t(field.dims[0]) +
            std::uint64_t(ax);
        return lin * 3u + std::uint64_t(axis);
    }

    int vertex_on_edge(int ix, int iy, int iz, int edge) {
        const std::uint64_t key = edge_key(ix, iy, iz, edge);
        auto it = edge_vertex.find(key);
        if (it != edge_vertex.end()) return it->second;

        const int* ca = kCorner[kEdgeCorner[edge][0]];
        const int* cb = kCorner[kEdgeCorner[edge][1]];
        const int ax = ix + ca[0], ay = iy + ca[1], az = iz + ca[2];
        const int bx = ix + cb[0], by = iy + cb[1], bz = iz + cb[2];
        const Vec3 pa = field.lattice_point(ax, ay, az);
        const Vec3 pb = field.lattice_point(bx, by, bz);
        const double va = field.value(ax, ay, az);
        const double vb = field.value(bx, by, bz);

        double residual = 0.0;
        const Vec3 v = refine_on_edge(pa, pb, va, vb, residual);

        const int id = int(mesh.vertices.size());
        mesh.vertices.push_back(v);
        mesh.residual.push_back(residual);
        edge_vertex.emplace(key, id);
        return id;
    }

    void run() {
        const int nx = field.dims[0], ny = field.dims[1], nz = field.dims[2];
        for (int iz = 0; iz + 1 < nz; ++iz) {
            for (int iy = 0; iy + 1 < ny; ++iy) {
                for (int ix = 0; ix + 1 < nx; ++ix) {
                    int code = 0;
                    double corner_val[8];
                    for (int c = 0; c < 8; ++c) {
                        corner_val[c] =
                            field.value(ix + kCorner[c][0], iy + kCorner[c][1], iz + kCorner[c][2]);
                        if (corner_val[c] < 0.0) code |= 1 << c;
                    }
                    if (kMcEdgeTable[code] == 0) continue;

                    int edge_ids[12];
                    for (int e = 0; e < 12; ++e)
                        if (kMcEdgeTable[code] & (1 << e)) edge_ids[e] = vertex_on_edge(ix, iy, iz, e);

                    for (const int* t = kMcTriTable[code]; *t != -1; t += 3) {
                        const int a = edge_ids[t[0]], b = edge_ids[t[1]], c = edge_ids[t[2]];
                        if (a == b || b == c || a == c) continue;
                        mesh.triangles.push_back({a, b, c});
                    }
                }
            }
        }
    }
};

// Clusters of vertices closer than 1e-9 count as one for components.
void merge_close_vertices(const std::vector<Vec3>& verts, UnionFind& uf) {
    constexpr double kMergeDist = 1e-9;
    struct Key {
        std::int64_t a, b, c;
        bool operator==(const Key& o) const { return a == o.a && b == o.b && c == o.c; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint64_t v : {std::uint64_t(k.a), std::uint64_t(k.b), std::uint64_t(k.c)}) {
                h ^= v;
                h *= 1099511628211ull;
            }
            return std::size_t(h);
        }
    };
    auto cell_of = [&](const Vec3& p) {
        return Key{std::int64_t(std::floor(p.x / kMergeDist)),
                   std::int64_t(std::floor(p.y / kMergeDist)),
                   std::int64_t(std::floor(p.z / kMergeDist))};
    };

    std::unordered_map<Key, std::vector<int>, KeyHash> grid;
    grid.reserve(verts.size() * 2);
    for (int i = 0; i < int(verts.size()); ++i) grid[cell_of(verts[std::size_t(i)])].push_back(i);

    for (int i = 0; i < int(verts.size()); ++i) {
        const Vec3& p = verts[std::size_t(i)];
        const Key base = cell_of(p);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    auto it = grid.find(Key{base.a + dx, base.b + dy, base.c + dz});
                    if (it == grid.end()) continue;
                    for (int j : it->second)
                        if (j > i && (verts[std::size_t(j)] - p).norm() <= kMergeDist)
                            uf.unite(i, j);
                }
    }
}

} // namespace

TriangleMesh extract(const ScalarField& field, const QuarticInvariants& inv, const Vec3& center) {
    Extractor ex(field, inv, center);
    ex.run();
    TriangleMesh mesh = std::move(ex.mesh);

    if (mesh.vertices.empty()) {
        mesh.components = 0;
        mesh.empty_warning = true;
        return mesh;
    }

    UnionFind uf(int(mesh.vertices.size()));
    for (const auto& t : mesh.triangles) {
        uf.unite(t[0], t[1]);
        uf.unite(t[1], t[2]);
    }
    merge_close_vertices(mesh.vertices, uf);

    int components = 0;
    for (int i = 0; i < int(mesh.vertices.size()); ++i)
        if (uf.find(i) == i) ++components;
    mesh.components = components;
    return mesh;
}

std::string export_mesh(const TriangleMesh& mesh, MeshFormat format) {
    std::string out;
    out.reserve(64 + mesh.vertices.size() * 72 + mesh.triangles.size() * 24);

    switch (format) {
    case MeshFormat::Obj: {
        out += "# cliffspec isosurface: ";
        append_i(out, (long long)mesh.vertices.size());
        out += " vertices, ";
        append_i(out, (long long)mesh.triangles.size());
        out += " triangles\n";
        for (const Vec3& v : mesh.vertices) {
            out += "v ";
            append_f(out, v.x);
            out += ' ';
            append_f(out, v.y);
            out += ' ';
            append_f(out, v.z);
            out += '\n';
        }
        for (const auto& t : mesh.triangles) {
            out += "f ";
            append_i(out, t[0] + 1);
            out += ' ';
            append_i(out, t[1] + 1);
            out += ' ';
            append_i(out, t[2] + 1);
            out += '\n';
        }
        break;
    }
    case MeshFormat::Ply: {
        out += "ply\nformat ascii 1.0\nelement vertex ";
        append_i(out, (long long)mesh.vertices.size());
        out += "\nproperty double x\nproperty double y\nproperty double z\nelement face ";
        append_i(out, (long long)mesh.triangles.size());
        out += "\nproperty list uchar int vertex_indices\nend_header\n";
        for (const Vec3& v : mesh.vertices) {
            append_f(out, v.x);
            out += ' ';
            append_f(out, v.y);
            out += ' ';
            append_f(out, v.z);
            out += '\n';
        }
        for (const auto& t : mesh.triangles) {
            out += "3 ";
            append_i(out, t[0]);
            out += ' ';
            append_i(out, t[1]);
            out += ' ';
            append_i(out, t[2]);
            out += '\n';
        }
        break;
    }
    case MeshFormat::Csv: {
        out += "x,y,z,D\n";
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
            append_f(out, mesh.vertices[i].x);
            out += ',';
            append_f(out, mesh.vertices[i].y);
            out += ',';
            append_f(out, mesh.vertices[i].z);
            out += ',';
            append_f(out, mesh.residual[i]);
            out += '\n';
        }
        break;
    }
    }
    return out;
}

MeshFormat mesh_format_from_name(const std::string& name) {
    if (name == "obj") return MeshFormat::Obj;
    if (name == "ply") return MeshFormat::Ply;
    if (name == "csv") return MeshFormat::Csv;
    throw validation_error("unknown mesh format '" + name + "' (expected obj, ply or csv)");
}

const char* mesh_format_name(MeshFormat f) {
    switch (f) {
    case MeshFormat::Obj: return "obj";
    case MeshFormat::Ply: return "ply";
    default: return "csv";
    }
}

} // namespace cliffspec
