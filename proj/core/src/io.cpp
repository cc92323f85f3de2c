#include "eps/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace eps {

static_assert(std::endian::native == std::endian::little,
              "grid dump layout assumes a little-endian host");

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_grid_csv(const PhaseGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "q,p,w\n";
  for (int i = 0; i < grid.nq; ++i) {
    for (int j = 0; j < grid.np; ++j) {
      out << format_double(grid.q_at(i)) << ',' << format_double(grid.p_at(j))
          << ',' << format_double(grid.at(i, j)) << '\n';
    }
  }
}

namespace {
constexpr char kMagic[8] = {'E', 'P', 'S', 'G', 'R', 'I', 'D', '1'};
}

void write_grid_binary(const PhaseGrid& grid,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write(kMagic, sizeof(kMagic));
  const double bounds[4] = {grid.q_min, grid.q_max, grid.p_min, grid.p_max};
  out.write(reinterpret_cast<const char*>(bounds), sizeof(bounds));
  const std::uint32_t shape[2] = {static_cast<std::uint32_t>(grid.nq),
                                  static_cast<std::uint32_t>(grid.np)};
  out.write(reinterpret_cast<const char*>(shape), sizeof(shape));
  out.write(reinterpret_cast<const char*>(&grid.t), sizeof(grid.t));
  out.write(reinterpret_cast<const char*>(grid.values.data()),
            static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
}

PhaseGrid read_grid_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error(path.string() + ": not an EPSGRID1 dump");
  }
  PhaseGrid g;
  double bounds[4];
  std::uint32_t shape[2];
  in.read(reinterpret_cast<char*>(bounds), sizeof(bounds));
  in.read(reinterpret_cast<char*>(shape), sizeof(shape));
  in.read(reinterpret_cast<char*>(&g.t), sizeof(g.t));
  g.q_min = bounds[0];
  g.q_max = bounds[1];
  g.p_min = bounds[2];
  g.p_max = bounds[3];
  g.nq = static_cast<int>(shape[0]);
  g.np = static_cast<int>(shape[1]);
  g.values.resize(static_cast<size_t>(g.nq) * g.np);
  in.read(reinterpret_cast<char*>(g.values.data()),
          static_cast<std::streamsize>(g.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error(path.string() + ": truncated grid dump");
  g.validate();
  return g;
}

void write_timeseries_csv(const TimeSeries& series,
                          const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "t,mean_q,mean_p,mean_qdot,E_of_t\n";
  for (size_t i = 0; i < series.t.size(); ++i) {
    out << format_double(series.t[i]) << ',' << format_double(series.mean_q[i])
        << ',' << format_double(series.mean_p[i]) << ','
        << format_double(series.mean_qdot[i]) << ','
        << format_double(series.field[i]) << '\n';
  }
}

}  // namespace eps
