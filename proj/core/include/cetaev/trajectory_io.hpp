#pragma once

#include <ostream>
#include <string>

#include "cetaev/hamiltonian.hpp"

namespace cetaev {

/// CSV with header t,q1..qn,p1..pn,H,V,W and %.17g numbers, rows in
/// increasing time (backward runs are reversed).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
std::string trajectory_csv(const Trajectory& traj);

}  // namespace cetaev
