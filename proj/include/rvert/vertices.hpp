#pragma once

#include <cstddef>
#include <vector>

#include "rvert/kernels.hpp"

namespace rvert {

enum class VertexKind { local_min, local_max, tangential };
enum class VertexStatus { discrete, constant_curvature };

struct Vertex {
  double t;       // parameter in [0, period)
  Vec2 point;     // curve position there
  double k_phi;   // curvature with density there
  VertexKind kind;
};

struct VertexOptions {
  std::size_t grid_size = 4096;
  double merge_tol_factor = 1e-6;    // roots closer than this x period coalesce
  double refine_tol_factor = 1e-12;  // bisection parameter tolerance x period
  DkPath dk_path = DkPath::auto_closed_form;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// Critical points of k_phi along a closed curve. status = constant_curvature
/// (count -1, "every point is a vertex") when the grid spread of k_phi is below
/// 1e-9 (1 + |mean|); otherwise each isolated zero of dk_phi/dt is listed once,
/// classified by the sign pattern around it, with sign-preserving near-zeros
/// flagged tangential.
struct VertexReport {
  VertexStatus status;
  std::vector<Vertex> vertices;
  int count;  // -1 for constant curvature
  std::size_t grid_size;
  double merge_tol;
  double refine_tol;
};

/// Samples dk_phi/dt over a uniform grid, brackets every sign change, refines
/// each bracket by bisection, merges near-coincident roots, and classifies the
/// survivors. Deterministic for any thread count.
VertexReport find_vertices(const RadialDensity& d, const Curve& c,
                           const VertexOptions& options = {});

/// Vertex count; -1 means constant curvature.
int count_vertices(const RadialDensity& d, const Curve& c, const VertexOptions& options = {});

/// True when the report satisfies the four-vertex property: at least four
/// critical points, or constant curvature (every point critical).
bool check_four_vertex(const VertexReport& report);

}  // namespace rvert
