#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "egm/graph.hpp"

namespace egm {

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edge list: expected header \"n m\"");
  EdgeList es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge list: endpoint out of range on edge " + std::to_string(i));
    es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string trailing;
  if (in >> trailing) throw InputError("edge list: trailing content after " + std::to_string(m) + " edges");
  return Graph(static_cast<std::size_t>(n), es);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::ostringstream buf;
  buf << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) buf << e.u << ' ' << e.v << '\n';
  out << buf.str();
}

}  // namespace egm
