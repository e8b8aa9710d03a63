#include "betti/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace betti {

namespace {

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string int_list(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t != 0) out += ", ";
    out += std::to_string(values[t]);
  }
  return out + "]";
}

}  // namespace

ComplexDocument parse_complex_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("complex document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  if (!doc.contains("facets") || !doc["facets"].is_array()) throw ParseError("\"facets\" must be an array");
  try {
    const int n = doc["n"].get<int>();
    const auto facets = doc["facets"].get<std::vector<std::vector<int>>>();
    std::optional<std::vector<int>> coloring;
    if (doc.contains("coloring") && !doc["coloring"].is_null()) coloring = doc["coloring"].get<std::vector<int>>();
    nlohmann::json meta = doc.contains("meta") ? doc["meta"] : nlohmann::json(nullptr);
    return {SimplicialComplex::from_facets(n, facets, std::move(coloring)), std::move(meta)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad complex field: ") + e.what());
  } catch (const ComplexError& e) {
    throw ParseError(std::string("invalid complex: ") + e.what());
  }
}

ComplexDocument read_complex_file(const std::filesystem::path& path) { return parse_complex_json(read_all(path)); }

std::string write_complex_json(const SimplicialComplex& complex, const nlohmann::json& meta) {
  std::vector<std::vector<int>> facets;
  for (VertexSubset f : complex.facets()) facets.push_back(f.vertices());
  std::sort(facets.begin(), facets.end());
  std::string out = "{\n  \"n\": " + std::to_string(complex.num_vertices()) + ",\n";
  out += "  \"coloring\": " + (complex.coloring() ? int_list(*complex.coloring()) : std::string("null")) + ",\n";
  out += "  \"facets\": [\n";
  for (std::size_t t = 0; t < facets.size(); ++t) {
    out += "    " + int_list(facets[t]) + (t + 1 < facets.size() ? ",\n" : "\n");
  }
  out += "  ]";
  if (!meta.is_null()) out += ",\n  \"meta\": " + meta.dump();
  return out + "\n}\n";
}

void write_complex_file(const std::filesystem::path& path, const SimplicialComplex& complex,
                        const nlohmann::json& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_complex_json(complex, meta);
}

BettiTable parse_betti_csv(std::string_view text, int n, int d, const Field& field) {
  BettiTable table(n, d, field);
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "i,j,beta") throw ParseError("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int i = 0, j = 0;
    long long beta = 0;
    char c1 = 0, c2 = 0;
    std::istringstream row(line);
    if (!(row >> i >> c1 >> j >> c2 >> beta) || c1 != ',' || c2 != ',') throw ParseError("bad CSV row: " + line);
    try {
      table.set(i, j, beta);
    } catch (const std::exception& e) {
      throw ParseError("CSV entry out of range: " + line);
    }
  }
  return table;
}

}  // namespace betti
