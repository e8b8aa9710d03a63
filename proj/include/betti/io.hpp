#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "betti/betti_table.hpp"
#include "betti/complex.hpp"
#include "json.hpp"

namespace betti {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A complex as read from or written to {"n", "facets", "coloring", "meta"}.
struct ComplexDocument {
  SimplicialComplex complex;
  nlohmann::json meta;
};

/// Throws ParseError for malformed JSON or an invalid complex.
ComplexDocument parse_complex_json(std::string_view text);
ComplexDocument read_complex_file(const std::filesystem::path& path);

/// Facets sorted lexicographically as vertex lists, one per line; identical
/// complexes give identical bytes.
std::string write_complex_json(const SimplicialComplex& complex, const nlohmann::json& meta = nullptr);
void write_complex_file(const std::filesystem::path& path, const SimplicialComplex& complex,
                        const nlohmann::json& meta = nullptr);

/// Reads the "i,j,beta" CSV produced by BettiTable::to_csv.
BettiTable parse_betti_csv(std::string_view text, int n, int d, const Field& field);

}  // namespace betti
