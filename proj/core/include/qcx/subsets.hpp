#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcx/net.hpp"
#include "qcx/space.hpp"

namespace qcx {

// Finite point list; mesh is the ambient mesh supplied by the caller.
SubsetNet subset_list(const Space& space, std::vector<Point> points, std::string label,
                      double ambient_mesh);

// Sampled curve or region; mesh is the largest nearest-neighbour gap.
SubsetNet subset_sampled(const Space& space, std::vector<Point> points, std::string label);

// The two poles of a suspension, or +-e_last on a sphere.
SubsetNet subset_poles(const Space& space, double ambient_mesh);

// Great circle z = 0 of Sphere(2), or latitude pi/2 of a suspension.
SubsetNet subset_equator(const Space& space, double resolution);

// Arc of the Sphere(2) equator between two azimuths, endpoints included.
SubsetNet subset_equator_arc(const Space& space, double from, double to, double resolution);

// Helix s -> (s mod L, pitch * s / L) in Circle(L) x Line, clipped to the
// sampled band |z| <= radius.
SubsetNet subset_helix(const Space& space, double pitch, double resolution, double radius);

// Graph nodes whose id starts with `prefix`.
SubsetNet subset_prefix(const Space& space, const std::string& prefix);

// {pole, pole} * {base points}: meridians of a suspension.
SubsetNet subset_meridians(const Space& space, const std::vector<Point>& base,
                           double resolution);

// Radial rays of a cone over the base points, up to `radius`.
SubsetNet subset_rays(const Space& space, const std::vector<Point>& base, double resolution,
                      double radius);

// F1 * F2 inside a join: segments from each a in `first` to each b in `second`.
SubsetNet subset_join_of(const Space& space, const std::vector<Point>& first,
                         const std::vector<Point>& second, double resolution);

// Points of `first` placed in the first join factor (t = 0).
SubsetNet subset_join_factor(const Space& space, const std::vector<Point>& first,
                             double ambient_mesh);

// Subset document: {"type": "list", "points": [...]} or
// {"type": "named", "name": ..., ...parameters}.
SubsetNet subset_from_json(const Space& space, const nlohmann::json& doc, double resolution,
                           double ambient_mesh, double radius = 3.0);

}  // namespace qcx
