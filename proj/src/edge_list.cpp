#include "ndl/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ndl/error.hpp"

namespace ndl {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": '" +
                                           std::string(token) + "' is not an integer");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected two integers");
    }
    const long long a = parse_int(fields[0], line_no);
    const long long b = parse_int(fields[1], line_no);
    if (n < 0) {
      if (a < 0 || a > kMaxVertices || b < 0) {
        throw Error(ErrorKind::ParseError, "header: need 0 <= n <= 64 and m >= 0");
      }
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": more than " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": vertex index out of range");
    }
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": loop at vertex " +
                                           std::to_string(a));
    }
    edges.push_back(Edge::normalized(static_cast<int>(a), static_cast<int>(b)));
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorKind::ParseError, "header promises " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  const auto edges = g.edges();
  out += std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_edge_list(buffer.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParameters, "cannot write '" + path + "'");
  out << write_edge_list(g);
}

}  // namespace ndl
