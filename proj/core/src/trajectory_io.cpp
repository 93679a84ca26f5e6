#include "cetaev/trajectory_io.hpp"

#include <cstdio>
#include <sstream>

namespace cetaev {
namespace {

void put(std::ostream& out, double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj)
{
    const std::size_t n = traj.dimension;
    out << "t";
    for (const char* name : {"q", "p"}) {
        for (std::size_t i = 1; i <= n; ++i) {
            out << ',' << name << i;
        }
    }
    out << ",H,V,W\n";
    const bool reversed = traj.size() > 1 && traj.t.back() < traj.t.front();
    for (std::size_t r = 0; r < traj.size(); ++r) {
        const std::size_t i = reversed ? traj.size() - 1 - r : r;
        put(out, traj.t[i]);
        for (double v : traj.x[i]) {
            out << ',';
            put(out, v);
        }
        for (double v : {traj.H[i], traj.V[i], traj.W[i]}) {
            out << ',';
            put(out, v);
        }
        out << '\n';
    }
}

std::string trajectory_csv(const Trajectory& traj)
{
    std::ostringstream out;
    write_trajectory_csv(out, traj);
    return out.str();
}

}  // namespace cetaev
