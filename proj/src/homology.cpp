#include "betti/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace betti {

namespace {

using boost::multiprecision::cpp_int;

std::size_t rank_gf2(const BoundaryMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::int32_t> owner(m.rows, -1);
  std::vector<std::uint64_t> vec(words);
  for (const auto& column : m.columns) {
    std::fill(vec.begin(), vec.end(), 0);
    for (auto [row, sign] : column) vec[row / 64] ^= std::uint64_t{1} << (row % 64);
    std::size_t w = 0;
    while (true) {
      while (w < words && vec[w] == 0) ++w;
      if (w == words) break;
      const std::size_t low = w * 64 + static_cast<std::size_t>(std::countr_zero(vec[w]));
      if (owner[low] < 0) {
        owner[low] = static_cast<std::int32_t>(basis.size());
        basis.push_back(vec);
        break;
      }
      const auto& pivot = basis[static_cast<std::size_t>(owner[low])];
      for (std::size_t t = w; t < words; ++t) vec[t] ^= pivot[t];
    }
  }
  return basis.size();
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

std::size_t rank_gfp(const BoundaryMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::int32_t> owner(m.rows, -1);
  std::vector<std::uint64_t> vec(m.rows);
  for (const auto& column : m.columns) {
    std::fill(vec.begin(), vec.end(), 0);
    for (auto [row, sign] : column) vec[row] = sign > 0 ? 1 : p - 1;
    std::size_t c = 0;
    while (true) {
      while (c < m.rows && vec[c] == 0) ++c;
      if (c == m.rows) break;
      if (owner[c] < 0) {
        // Store normalized so the pivot entry is 1.
        const std::uint64_t inv = power_mod(vec[c], p - 2, p);
        for (std::size_t t = c; t < m.rows; ++t) vec[t] = vec[t] * inv % p;
        owner[c] = static_cast<std::int32_t>(basis.size());
        basis.push_back(vec);
        break;
      }
      const auto& pivot = basis[static_cast<std::size_t>(owner[c])];
      const std::uint64_t factor = vec[c];
      for (std::size_t t = c; t < m.rows; ++t) {
        if (pivot[t] != 0) vec[t] = (vec[t] + (p - factor) * pivot[t]) % p;
      }
    }
  }
  return basis.size();
}

std::size_t rank_rational(const BoundaryMatrix& m) {
  std::vector<std::vector<cpp_int>> basis;
  std::vector<std::int32_t> owner(m.rows, -1);
  std::vector<cpp_int> vec(m.rows);
  for (const auto& column : m.columns) {
    std::fill(vec.begin(), vec.end(), cpp_int(0));
    for (auto [row, sign] : column) vec[row] = sign;
    std::size_t c = 0;
    while (true) {
      while (c < m.rows && vec[c] == 0) ++c;
      if (c == m.rows) break;
      if (owner[c] < 0) {
        owner[c] = static_cast<std::int32_t>(basis.size());
        basis.push_back(vec);
        break;
      }
      // vec <- pivot[c] * vec - vec[c] * pivot, then strip the common content.
      const auto& pivot = basis[static_cast<std::size_t>(owner[c])];
      const cpp_int a = pivot[c], b = vec[c];
      cpp_int content = 0;
      for (std::size_t t = c; t < m.rows; ++t) {
        vec[t] = a * vec[t] - b * pivot[t];
        if (vec[t] != 0) content = content == 0 ? cpp_int(abs(vec[t])) : cpp_int(gcd(content, vec[t]));
      }
      if (content > 1) {
        for (std::size_t t = c; t < m.rows; ++t) vec[t] /= content;
      }
    }
  }
  return basis.size();
}

std::size_t face_index(std::span<const std::uint64_t> layer, std::uint64_t face) {
  auto it = std::lower_bound(layer.begin(), layer.end(), face, canonical_less);
  if (it == layer.end() || *it != face) throw std::logic_error("face lattice is not closed under taking subsets");
  return static_cast<std::size_t>(it - layer.begin());
}

std::size_t layer_size(const FaceLattice& faces, int k) {
  if (k == -1) return 1;
  if (k < -1 || k >= static_cast<int>(faces.size())) return 0;
  return faces[static_cast<std::size_t>(k)].size();
}

}  // namespace

BoundaryMatrix boundary_matrix(const FaceLattice& faces, int j) {
  if (j < 0) throw std::invalid_argument("boundary degree must be non-negative");
  BoundaryMatrix m;
  m.rows = layer_size(faces, j - 1);
  m.cols = layer_size(faces, j);
  m.columns.resize(m.cols);
  if (m.cols == 0) return m;
  if (j == 0) {
    for (auto& column : m.columns) column.emplace_back(0, 1);
    return m;
  }
  const auto& upper = faces[static_cast<std::size_t>(j)];
  const auto& lower = faces[static_cast<std::size_t>(j - 1)];
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int position = 0;
    for (std::uint64_t b = upper[c]; b != 0; b &= b - 1, ++position) {
      const std::uint64_t dropped = upper[c] & ~(b & (~b + 1));
      m.columns[c].emplace_back(static_cast<std::uint32_t>(face_index(lower, dropped)), position % 2 == 0 ? 1 : -1);
    }
    std::sort(m.columns[c].begin(), m.columns[c].end());
  }
  return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int j) {
  if (j > complex.dim() + 1) throw std::invalid_argument("boundary degree exceeds dim + 1");
  return boundary_matrix(complex.faces_by_dim(), j);
}

std::size_t matrix_rank(const BoundaryMatrix& matrix, const Field& field) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  if (field.kind() == Field::Kind::kRational) return rank_rational(matrix);
  if (field.is_gf2()) return rank_gf2(matrix);
  return rank_gfp(matrix, field.characteristic());
}

std::vector<Count> reduced_homology_dims(const FaceLattice& faces, const Field& field, int max_degree) {
  const int top = static_cast<int>(faces.size()) - 1;
  const int last = max_degree >= 0 ? std::min(max_degree, std::max(top, -1)) : top;
  // rank[k] = rank of the boundary map out of the k-faces, k = 0..last+1.
  std::vector<Count> rank(static_cast<std::size_t>(last + 2), 0);
  for (int k = 0; k <= last + 1 && k <= top; ++k) {
    rank[static_cast<std::size_t>(k)] = static_cast<Count>(matrix_rank(boundary_matrix(faces, k), field));
  }
  std::vector<Count> dims;
  for (int k = -1; k <= last; ++k) {
    const Count out = k >= 0 ? rank[static_cast<std::size_t>(k)] : 0;
    const Count in = rank[static_cast<std::size_t>(k + 1)];
    dims.push_back(static_cast<Count>(layer_size(faces, k)) - out - in);
  }
  return dims;
}

std::vector<Count> reduced_homology_dims(const SimplicialComplex& complex, const Field& field) {
  return reduced_homology_dims(complex.faces_by_dim(), field);
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field) {
  if (!complex.is_pure()) return false;
  const FaceLattice& faces = complex.faces_by_dim();
  const int dim = complex.dim();
  auto link_is_acyclic_below_top = [&](std::uint64_t face) {
    const int link_dim = dim - std::popcount(face);
    if (link_dim <= 0) return true;
    FaceLattice link_faces(static_cast<std::size_t>(link_dim + 1));
    for (const auto& layer : faces) {
      for (std::uint64_t g : layer) {
        if ((g & face) == face && g != face) {
          link_faces[static_cast<std::size_t>(std::popcount(g & ~face) - 1)].push_back(g & ~face);
        }
      }
    }
    const auto dims = reduced_homology_dims(link_faces, field, link_dim - 1);
    return std::all_of(dims.begin(), dims.end(), [](Count c) { return c == 0; });
  };
  if (!link_is_acyclic_below_top(0)) return false;
  for (const auto& layer : faces) {
    for (std::uint64_t f : layer) {
      if (!link_is_acyclic_below_top(f)) return false;
    }
  }
  return true;
}

}  // namespace betti
