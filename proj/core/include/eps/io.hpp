#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "eps/dynamics.hpp"

namespace eps {

/** Format a double with 17 significant digits (round-trip safe). */
std::string format_double(double v);

/** CSV snapshot with "q,p,w" rows. */
void write_grid_csv(const PhaseGrid& grid, const std::filesystem::path& path);

/**
 * Compact binary dump, little-endian:
 *   bytes 0-7   magic "EPSGRID1"
 *   4 doubles   q_min, q_max, p_min, p_max
 *   2 uint32    nq, np
 *   1 double    t
 *   nq*np       row-major float64 values
 */
void write_grid_binary(const PhaseGrid& grid,
                       const std::filesystem::path& path);
PhaseGrid read_grid_binary(const std::filesystem::path& path);

struct TimeSeries {
  std::vector<double> t;
  std::vector<double> mean_q;
  std::vector<double> mean_p;
  std::vector<double> mean_qdot;
  std::vector<double> field;
};

/** CSV with header "t,mean_q,mean_p,mean_qdot,E_of_t". */
void write_timeseries_csv(const TimeSeries& series,
                          const std::filesystem::path& path);

}  // namespace eps
