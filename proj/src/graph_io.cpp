#include "stabpoly/graph_io.hpp"

#include <cctype>

namespace stabpoly {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw DomainError("graph6: byte outside 63..126");
  const int n = text[0] - 63;
  if (n > 62) throw DomainError("graph6: multi-byte orders are not supported");
  if (n > kMaxVertices) throw DomainError("graph6: order exceeds 32");
  const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != 1 + need)
    throw DomainError("graph6: expected " + std::to_string(1 + need) + " bytes, got " +
                      std::to_string(text.size()));
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero for a canonical encoding.
  if (k % 6 != 0) {
    const int byte = text[1 + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw DomainError("graph6: nonzero padding bits");
  }
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edge entries must be [u, v]");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels") && !j["labels"].is_null()) g.set_labels(j["labels"].get<std::vector<int>>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  text.remove_prefix(first);
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return from_graph6(text);
}

}  // namespace stabpoly
