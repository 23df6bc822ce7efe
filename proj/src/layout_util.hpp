#pragma once

#include <cstddef>
#include <vector>

#include "sas/model.hpp"

namespace sas::detail {

/// Fraction of the segment origin->target that is free of existing planar geometry,
/// ignoring contacts at the origin itself. Returns 1 when nothing is hit.
Rational free_run(const DrawingBuilder& b, const ExactPoint& origin, const ExactPoint& target);

/// `count` points stacked along the open ray from `origin` in direction `dir`,
/// evenly spaced below the first obstacle.
std::vector<ExactPoint> stack_points(const DrawingBuilder& b, const ExactPoint& origin, const ExactPoint& dir,
                                     std::size_t count);

/// Overpass along the straight line between two vertices with short planar stubs at both ends.
std::size_t add_straight_overpass(DrawingBuilder& b, const VertexId& from, const VertexId& to);

/// Ordinals of split-0 switch vertices of a party, in ascending label order.
class Ordinals {
   public:
    explicit Ordinals(const std::vector<int>& labels);
    int of(int label) const;

   private:
    std::vector<int> labels_;
};

/// Zarankiewicz axis labels: -floor(k/2) .. -1, 1 .. ceil(k/2).
std::vector<int> signed_labels(int k);

/// Rational point exactly on the unit circle close to angle theta, which must lie in (-pi, pi).
ExactPoint circle_point(double theta);

}  // namespace sas::detail
