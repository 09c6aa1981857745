#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "sppde/error.hpp"
#include "sppde/harness.hpp"

namespace sppde {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string exact(double v) { return fmt("%.17g", v); }

std::string order_text(double p) { return std::isnan(p) ? "nan" : fmt("%.17g", p); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

constexpr const char* kHeader = "example,family,subtract,eps_exponent,N,M,D,P";

}  // namespace

void write_csv(const ConvergenceTable& table, std::ostream& os) {
  os << kHeader << '\n';
  auto emit = [&](const std::string& eps_label, const std::vector<double>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << table.example << ',' << table.family << ',' << (table.subtract ? 1 : 0) << ',' << eps_label << ','
         << table.ladder[c].N << ',' << table.ladder[c].M << ',' << exact(row[c]) << ',';
      if (c + 1 < row.size()) os << order_text(order_of(row[c], row[c + 1]));
      os << '\n';
    }
  };
  for (std::size_t r = 0; r < table.D.size(); ++r) emit(std::to_string(table.eps_exponents[r]), table.D[r]);
  emit("uniform", table.uniform_D);
}

ConvergenceTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) throw ConfigError("read_csv: missing or unexpected header");
  ConvergenceTable table;
  std::map<int, std::size_t> row_of;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 8) throw ConfigError("read_csv: expected 8 fields in '" + line + "'");
    if (first) {
      table.example = f[0];
      table.family = std::stoi(f[1]);
      table.subtract = f[2] == "1";
      first = false;
    }
    const MeshPair mp{std::stoi(f[4]), std::stoi(f[5])};
    const double D = std::stod(f[6]);
    std::size_t col = 0;
    while (col < table.ladder.size() && !(table.ladder[col] == mp)) ++col;
    if (col == table.ladder.size()) table.ladder.push_back(mp);
    if (f[3] == "uniform") {
      table.uniform_D.resize(table.ladder.size());
      table.uniform_D[col] = D;
      continue;
    }
    const int e = std::stoi(f[3]);
    auto [it, inserted] = row_of.try_emplace(e, table.eps_exponents.size());
    if (inserted) {
      table.eps_exponents.push_back(e);
      table.D.emplace_back();
    }
    auto& row = table.D[it->second];
    row.resize(std::max(row.size(), col + 1));
    row[col] = D;
  }
  return table;
}

std::string format_table(const ConvergenceTable& table) {
  std::ostringstream os;
  constexpr int kLabel = 12;
  constexpr int kCol = 16;
  auto pad = [](std::string s, int w) {
    s.resize(std::max<std::size_t>(s.size(), w), ' ');
    return s;
  };
  auto emit = [&](const std::string& label, const std::string& order_label, const std::vector<double>& row) {
    os << pad(label, kLabel);
    for (double v : row) os << pad(fmt("%.3E", v), kCol);
    os << '\n' << pad(order_label, kLabel);
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      const double p = order_of(row[c], row[c + 1]);
      os << pad(std::isnan(p) ? "---" : fmt("%.3f", p), kCol);
    }
    os << '\n';
  };

  os << table.example << " (family " << table.family << ", " << (table.subtract ? "with" : "without")
     << " singularity subtraction)\n";
  os << pad("", kLabel);
  for (const auto& mp : table.ladder) os << pad("N=" + std::to_string(mp.N) + ",M=" + std::to_string(mp.M), kCol);
  os << '\n';
  for (std::size_t r = 0; r < table.D.size(); ++r) emit("eps=2^-" + std::to_string(table.eps_exponents[r]), "", table.D[r]);
  os << pad("", kLabel) << '\n';
  emit("D^{N,M}", "P^{N,M}", table.uniform_D);
  return os.str();
}

void write_field_csv(const FieldSample& field, std::ostream& os) {
  os << "x,t,value\n";
  const std::size_t nx = field.x.size();
  for (std::size_t j = 0; j < field.t.size(); ++j)
    for (std::size_t i = 0; i < nx; ++i)
      os << exact(field.x[i]) << ',' << exact(field.t[j]) << ',' << exact(field.values[j * nx + i]) << '\n';
}

}  // namespace sppde
