#pragma once

#include "mumode/shape.hpp"

namespace mumode::apps {

/// Common result record for the experiment drivers.
struct SolverReport {
  core::index_t steps = 0;
  double avg_inner_iterations = 0.0;  // CG/PCG backends only
  double wall_time_seconds = 0.0;
  double error_inf_relative = 0.0;
  bool converged = true;  // false when an inner solve hit its iteration cap
};

}  // namespace mumode::apps
