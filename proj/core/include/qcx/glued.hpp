#pragma once

#include "qcx/space.hpp"

namespace qcx {

// Graph stand-ins for glued spaces. Rim nodes carry ids "rim:<i>".

struct BarrelParams {
  int rim_nodes = 126;
  double wall_step = 0.05;  // height between wall rows
  int wall_rows = 10;
  double disc_step = 0.1;  // square lattice spacing inside the disc
  double wall_reach = 0.151;
  double disc_reach = 0.301;
};

// Unit disc glued to the flat cylinder S^1 x [0, wall_rows * wall_step]
// along the rim. Wall edges use unrolled flat distances, disc edges are
// Euclidean, and every rim pair is joined by its chord.
GraphData barrel_graph(const BarrelParams& p = {});

struct CappedCylinderParams {
  double step = 0.15;  // cubic lattice spacing
  int rim_nodes = 48;
  double height = 0.8;       // solid cylinder z in [0, height]
  double cone_height = 1.0;  // solid cone below z = 0, apex at -cone_height
};

// Solid cylinder with a solid cone glued on its bottom disc. The union is a
// convex body, so the complete graph with Euclidean weights carries its
// exact intrinsic metric on the sampled nodes.
GraphData capped_cylinder_graph(const CappedCylinderParams& p = {});

struct DiscParams {
  double step = 0.08;
  int rim_nodes = 80;
};

// Flat unit disc as a complete Euclidean graph; rim nodes on the boundary.
GraphData disc_graph(const DiscParams& p = {});

}  // namespace qcx
