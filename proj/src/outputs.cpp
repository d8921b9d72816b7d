#include "reachkit/outputs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "reachkit/version.hpp"

namespace reachkit {

namespace {

using nlohmann::json;

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VerdictKind verdict_from_string(const std::string& s) {
  if (s == "safe") return VerdictKind::Safe;
  if (s == "unsafe") return VerdictKind::Unsafe;
  if (s == "unknown") return VerdictKind::Unknown;
  throw std::runtime_error("unknown verdict '" + s + "'");
}

}  // namespace

VerdictRecord to_record(const Verdict& v, double tau) {
  VerdictRecord rec;
  rec.kind = v.kind;
  rec.severity_bound = v.severity_bound;
  if (v.counterexample) {
    rec.counterexample_state = v.counterexample->initial_state;
    rec.first_unsafe_time =
        static_cast<double>(v.counterexample->first_unsafe_sample) * tau;
  }
  rec.cells_processed = v.cells_processed;
  rec.max_depth_reached = v.max_depth_reached;
  return rec;
}

void write_verdict(const std::string& path, const VerdictRecord& rec) {
  json j;
  j["kind"] = to_string(rec.kind);
  if (rec.severity_bound) j["severity_bound_mps"] = *rec.severity_bound;
  if (rec.counterexample_state) {
    j["counterexample"] = {{"initial_state", *rec.counterexample_state},
                           {"first_unsafe_time_s", *rec.first_unsafe_time}};
  }
  j["cells_processed"] = rec.cells_processed;
  j["max_depth_reached"] = rec.max_depth_reached;
  write_file(path, j.dump(2) + "\n");
}

VerdictRecord read_verdict(const std::string& path) {
  json j = json::parse(read_file(path));
  VerdictRecord rec;
  rec.kind = verdict_from_string(j.at("kind").get<std::string>());
  if (j.contains("severity_bound_mps")) {
    rec.severity_bound = j.at("severity_bound_mps").get<double>();
  }
  if (j.contains("counterexample")) {
    rec.counterexample_state =
        j.at("counterexample").at("initial_state").get<Vec>();
    rec.first_unsafe_time =
        j.at("counterexample").at("first_unsafe_time_s").get<double>();
  }
  rec.cells_processed = j.at("cells_processed").get<long>();
  rec.max_depth_reached = j.at("max_depth_reached").get<int>();
  return rec;
}

void write_grid_csv(const std::string& path, const risk::RiskGrid& grid) {
  std::string out = "d_lo,d_hi,r_lo,r_hi,verdict,severity_mps,probability\n";
  const auto& g = grid.grid;
  for (std::size_t i = 0; i < g.n_d(); ++i) {
    for (std::size_t j = 0; j < g.n_r(); ++j) {
      std::size_t n = g.at(i, j);
      out += fixed6(g.d_cells[i].lo) + "," + fixed6(g.d_cells[i].hi) + "," +
             fixed6(g.r_cells[j].lo) + "," + fixed6(g.r_cells[j].hi) + "," +
             to_string(g.verdicts[n]) + "," + fixed6(g.severity[n]) + "," +
             fixed6(grid.probability[n]) + "\n";
    }
  }
  write_file(path, out);
}

risk::RiskGrid read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line != "d_lo,d_hi,r_lo,r_hi,verdict,severity_mps,probability") {
    throw std::runtime_error(path + ": bad heat-map header");
  }
  risk::RiskGrid grid;
  std::vector<Interval> d_cells, r_cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::runtime_error(path + ": bad row");
    Interval d{std::stod(fields[0]), std::stod(fields[1])};
    Interval r{std::stod(fields[2]), std::stod(fields[3])};
    if (d_cells.empty() || std::fabs(d_cells.back().lo - d.lo) > 1e-12 ||
        std::fabs(d_cells.back().hi - d.hi) > 1e-12) {
      d_cells.push_back(d);
    }
    if (d_cells.size() == 1) r_cells.push_back(r);
    grid.grid.verdicts.push_back(verdict_from_string(fields[4]));
    grid.grid.severity.push_back(std::stod(fields[5]));
    grid.probability.push_back(std::stod(fields[6]));
  }
  grid.grid.d_cells = std::move(d_cells);
  grid.grid.r_cells = std::move(r_cells);
  if (grid.grid.verdicts.size() != grid.grid.n_d() * grid.grid.n_r()) {
    throw std::runtime_error(path + ": inconsistent grid shape");
  }
  return grid;
}

void write_sweep_csv(const std::string& path, const risk::VerdictGrid& grid) {
  std::string out = "d_lo,d_hi,r_lo,r_hi,verdict,severity_mps\n";
  for (std::size_t i = 0; i < grid.n_d(); ++i) {
    for (std::size_t j = 0; j < grid.n_r(); ++j) {
      std::size_t n = grid.at(i, j);
      out += fixed6(grid.d_cells[i].lo) + "," + fixed6(grid.d_cells[i].hi) + "," +
             fixed6(grid.r_cells[j].lo) + "," + fixed6(grid.r_cells[j].hi) + "," +
             to_string(grid.verdicts[n]) + "," + fixed6(grid.severity[n]) + "\n";
    }
  }
  write_file(path, out);
}

void write_heatmap_svg(const std::string& path, const risk::VerdictGrid& grid,
                       double severity_cap) {
  const int cell_w = 56, cell_h = 34, margin = 70;
  const std::size_t nd = grid.n_d(), nr = grid.n_r();
  const int width = margin + cell_w * static_cast<int>(nr) + 20;
  const int height = margin + cell_h * static_cast<int>(nd) + 20;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<style>text{font-family:monospace;font-size:11px;}</style>\n";

  for (std::size_t i = 0; i < nd; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      std::size_t n = grid.at(i, j);
      int x = margin + cell_w * static_cast<int>(j);
      // largest d on top
      int y = margin + cell_h * static_cast<int>(nd - 1 - i);
      std::string fill;
      if (grid.verdicts[n] == VerdictKind::Safe) {
        fill = "rgb(80,180,80)";
      } else {
        double s = grid.severity[n] / severity_cap;
        if (s > 1.0) s = 1.0;
        if (s < 0.0) s = 0.0;
        int other = static_cast<int>(std::lround(235.0 * (1.0 - s)));
        fill = "rgb(255," + std::to_string(other) + "," + std::to_string(other) + ")";
      }
      const char* dash =
          grid.verdicts[n] == VerdictKind::Unknown ? " stroke-dasharray=\"3,2\"" : "";
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(cell_w) + "\" height=\"" +
             std::to_string(cell_h) + "\" fill=\"" + fill +
             "\" stroke=\"black\" stroke-width=\"0.5\"" + dash + " data-verdict=\"" +
             to_string(grid.verdicts[n]) + "\"/>\n";
      char label[32];
      std::snprintf(label, sizeof(label), "%.1f", grid.severity[n]);
      svg += "<text x=\"" + std::to_string(x + cell_w / 2) + "\" y=\"" +
             std::to_string(y + cell_h / 2 + 4) +
             "\" text-anchor=\"middle\">" + label + "</text>\n";
    }
  }

  // axis labels: first grid axis vertical, second horizontal
  for (std::size_t i = 0; i < nd; ++i) {
    int y = margin + cell_h * static_cast<int>(nd - 1 - i) + cell_h / 2 + 4;
    char label[32];
    std::snprintf(label, sizeof(label), "%.2f", grid.d_cells[i].lo);
    svg += "<text x=\"" + std::to_string(margin - 6) + "\" y=\"" +
           std::to_string(y) + "\" text-anchor=\"end\">" + label + "</text>\n";
  }
  for (std::size_t j = 0; j < nr; ++j) {
    int x = margin + cell_w * static_cast<int>(j) + cell_w / 2;
    char label[32];
    std::snprintf(label, sizeof(label), "%.2f", grid.r_cells[j].lo);
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" +
           std::to_string(margin + cell_h * static_cast<int>(nd) + 14) +
           "\" text-anchor=\"middle\">" + label + "</text>\n";
  }
  svg += "</svg>\n";
  write_file(path, svg);
}

void write_trace_csv(const std::string& path, const Trace& trace,
                     const StateLayout& layout) {
  std::string out = "t";
  for (int car = 0; car < layout.n_cars; ++car) {
    out += ",s_" + std::to_string(car + 1) + ",v_" + std::to_string(car + 1);
  }
  for (int front = 0; front + 1 < layout.n_cars; ++front) {
    out += ",sep_" + std::to_string(front + 1) + "_" + std::to_string(front + 2);
  }
  out += "\n";
  for (std::size_t k = 0; k < trace.samples(); ++k) {
    out += fixed6(trace.time(k));
    for (int car = 0; car < layout.n_cars; ++car) {
      out += "," + fixed6(trace.at(layout.s(car), k));
      out += "," + fixed6(trace.at(layout.v(car), k));
    }
    for (int front = 0; front + 1 < layout.n_cars; ++front) {
      out += "," + fixed6(trace.at(layout.s(front), k) -
                          trace.at(layout.s(front + 1), k));
    }
    out += "\n";
  }
  write_file(path, out);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::string& config_bytes, std::uint64_t seed,
                    const std::vector<std::string>& outputs) {
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_bytes)));
  json j;
  j["tool"] = "reachkit";
  j["version"] = kVersion;
  j["command"] = command;
  j["config_fnv1a64"] = hash;
  j["seed"] = seed;
  j["outputs"] = outputs;
  write_file(path, j.dump(2) + "\n");
}

}  // namespace reachkit
