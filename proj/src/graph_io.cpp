#include "vtc/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "vtc/error.hpp"

namespace vtc {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw InvalidInput("edge list: missing header");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      throw InvalidInput("edge list: bad header on line " + std::to_string(line_no));
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw InvalidInput("edge list: expected " + std::to_string(m) + " arcs, found " +
                         std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw InvalidInput("edge list: bad arc on line " + std::to_string(line_no));
    }
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Digraph::build(static_cast<std::size_t>(n), arcs);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

std::string to_dot(const Digraph& d, bool collapse_digons) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : d.arcs()) {
    if (collapse_digons && d.has_arc(v, u)) {
      if (u < v) out << "  " << u << " -> " << v << " [dir=both];\n";
      continue;
    }
    out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vtc
