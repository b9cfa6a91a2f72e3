#include "arp/ecg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace arp {

void write_ecg(std::ostream& out, const EdgeColoring& col) {
  const Graph& g = col.host();
  out << g.vertex_count() << ' ' << g.edge_count() << ' '
      << col.color_count() << '\n';
  for (size_t i = 0; i < g.edges().size(); ++i)
    out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << col.colors()[i]
        << '\n';
}

void write_ecg_file(const std::string& path, const EdgeColoring& col) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_ecg(out, col);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

EdgeColoring read_ecg(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw std::invalid_argument("ecg: missing header");
  std::istringstream header(line);
  int n, m, c;
  if (!(header >> n >> m >> c))
    throw std::invalid_argument("ecg: malformed header, expected 'n m c'");
  if (n < 1 || m < 1 || c < 1)
    throw std::invalid_argument("ecg: header values out of range");

  Graph g(n);
  std::vector<std::tuple<int, int, int>> records;
  for (int i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw std::invalid_argument("ecg: fewer records than header's m");
    std::istringstream rec(line);
    int u, v, color;
    if (!(rec >> u >> v >> color))
      throw std::invalid_argument("ecg: malformed record '" + line + "'");
    if (!(0 <= u && u < v && v < n))
      throw std::invalid_argument("ecg: need 0 <= u < v < n");
    if (color < 0 || color >= c)
      throw std::invalid_argument("ecg: color id out of [0,c)");
    g.add_edge(u, v);  // rejects duplicates
    records.emplace_back(u, v, color);
  }
  if (next_data_line(in, line))
    throw std::invalid_argument("ecg: more records than header's m");

  std::vector<int> colors(m);
  EdgeColoring probe(g, std::vector<int>(m, 0));  // index lookup only
  for (auto [u, v, color] : records) colors[probe.edge_index(u, v)] = color;
  EdgeColoring col(std::move(g), std::move(colors));
  if (col.color_count() != c)
    throw std::invalid_argument("ecg: colors are not exactly {0,...,c-1}");
  return col;
}

EdgeColoring read_ecg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_ecg(in);
}

}  // namespace arp
