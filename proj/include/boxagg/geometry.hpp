#pragma once

#include <functional>
#include <vector>

#include "boxagg/rational.hpp"

namespace boxagg::geometry {

/// Attachment parameter: an integer point on the boundary of the parameter
/// box R_{x+y} = [0, x_1+y_1] x ... x [0, x_l+y_l], anchored at the origin.
using AttachmentParam = std::vector<std::int64_t>;

/// Number of integer boundary points of R_{x+y}:
///   prod(x_i + y_i + 1) - prod(x_i + y_i - 1).
/// Throws std::invalid_argument on dimension mismatch or non-positive sides.
BigInt attachment_count(const Box& x, const Box& y);

/// Visits every integer boundary point of R_{x+y} exactly once.
/// Points are generated face by face; a point belongs to the face of its
/// lexicographically first extreme coordinate, so edges and corners are not
/// repeated.
void for_each_parameter(const Box& x, const Box& y,
                        const std::function<void(const AttachmentParam&)>& visit);

/// Materialized parameter set, in face-generation order.
std::vector<AttachmentParam> parameter_set(const Box& x, const Box& y);

/// True if s lies on the boundary of R_{x+y}.
bool is_boundary_param(const Box& x, const Box& y, const AttachmentParam& s);

/// Result of the attachment parametrized by s:
///   z_i = max(x_i, y_i, x_i + y_i - s_i, s_i).
/// Throws std::invalid_argument if s is interior or out of range.
Box aggregate_at(const Box& x, const Box& y, const AttachmentParam& s);

void check_box(const Box& x);
void check_same_length(const Box& x, const Box& y);

}  // namespace boxagg::geometry
