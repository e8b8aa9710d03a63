#include "betti/hochster.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <thread>
#include <unordered_map>

#include "betti/homology.hpp"

namespace betti {

namespace {

struct MaskListHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t word : key) {
      h ^= word;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

unsigned worker_count(unsigned requested, std::uint64_t work) {
  unsigned threads = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (work < 4096) threads = 1;
  return threads;
}

// Splits [0, total) into contiguous chunks, one per worker, and sums the
// per-worker vectors. Addition is associative, so the result does not depend
// on scheduling.
template <typename Body>
std::vector<Count> parallel_sum(std::uint64_t total, unsigned threads, std::size_t width, Body body) {
  std::vector<std::vector<Count>> partial(threads, std::vector<Count>(width, 0));
  if (threads == 1) {
    body(0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(total, chunk * t), hi = std::min(total, chunk * (t + 1));
      pool.emplace_back([&, t, lo, hi] {
        try {
          body(lo, hi, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& worker : pool) worker.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }
  std::vector<Count> sum(width, 0);
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < width; ++k) sum[k] = checked_add(sum[k], part[k]);
  }
  return sum;
}

void check_cap(const SimplicialComplex& complex, const HochsterOptions& options) {
  if (complex.num_vertices() > options.cap) {
    throw CapExceeded("complex has " + std::to_string(complex.num_vertices()) +
                      " vertices, above the enumeration cap of " + std::to_string(options.cap) +
                      "; raise the cap or restrict the strands with max_j");
  }
}

}  // namespace

std::vector<Count> hilbert_alternating_sums(const std::vector<Count>& f_vector, int n) {
  using boost::multiprecision::cpp_int;
  std::vector<Count> out;
  for (int m = 0; m <= n; ++m) {
    cpp_int acc = 0;
    for (int k = 0; k <= m && k < static_cast<int>(f_vector.size()); ++k) {
      const cpp_int term = cpp_int(f_vector[static_cast<std::size_t>(k)]) * binom(n - k, m - k);
      acc += (m - k) % 2 == 0 ? term : cpp_int(-term);
    }
    out.push_back(static_cast<Count>(acc));
  }
  return out;
}

BettiTable graded_betti(const SimplicialComplex& complex, const HochsterOptions& options) {
  check_cap(complex, options);
  const int n = complex.num_vertices();
  const int d = complex.dim() + 1;
  const int top_j = options.max_j ? std::clamp(*options.max_j, 0, d) : d;
  const Field field = options.field;

  std::vector<std::uint64_t> facets;
  for (VertexSubset f : complex.facets()) facets.push_back(f.bits);

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t width = static_cast<std::size_t>((n + 1) * (d + 1));
  auto body = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Count>& acc) {
    std::unordered_map<std::vector<std::uint64_t>, std::vector<Count>, MaskListHash> memo;
    std::vector<std::uint64_t> restricted;
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (w == 0 || top_j == 0) continue;
      restricted.clear();
      for (std::uint64_t f : facets) restricted.push_back(f & w);
      std::vector<std::uint64_t> key = maximal_sets(restricted);
      for (auto& face : key) face = compress_mask(face, w);
      std::sort(key.begin(), key.end(), canonical_less);
      auto it = memo.find(key);
      if (it == memo.end()) {
        const FaceLattice faces = enumerate_faces(key);
        it = memo.emplace(std::move(key), reduced_homology_dims(faces, field, top_j - 1)).first;
      }
      const auto& dims = it->second;
      const int size = std::popcount(w);
      for (int j = 1; j <= top_j && j < static_cast<int>(dims.size()); ++j) {
        const int i = size - j;
        if (i >= 0 && dims[static_cast<std::size_t>(j)] != 0) {
          auto& slot = acc[static_cast<std::size_t>(j * (n + 1) + i)];
          slot = checked_add(slot, dims[static_cast<std::size_t>(j)]);
        }
      }
    }
  };
  const auto sums = parallel_sum(total, worker_count(options.threads, total), width, body);

  BettiTable table(n, d, field);
  table.set(0, 0, 1);
  for (int j = 1; j <= d; ++j) {
    for (int i = 0; i <= n; ++i) table.set(i, j, sums[static_cast<std::size_t>(j * (n + 1) + i)]);
  }

  if (top_j == d) {
    const auto expected = hilbert_alternating_sums(complex.f_vector(), n);
    for (int m = 0; m <= n; ++m) {
      Count got = 0;
      for (int i = 0; i <= m; ++i) {
        const Count b = table.at(i, m - i);
        got = i % 2 == 0 ? got + b : got - b;
      }
      if (got != expected[static_cast<std::size_t>(m)]) {
        throw std::logic_error("Betti table fails the Hilbert series checksum in degree " + std::to_string(m));
      }
    }
  }
  return table;
}

std::vector<Count> linear_strand(const SimplicialComplex& complex, const HochsterOptions& options) {
  check_cap(complex, options);
  const int n = complex.num_vertices();
  std::vector<std::uint64_t> adjacent(static_cast<std::size_t>(n), 0);
  const auto& faces = complex.faces_by_dim();
  if (faces.size() > 1) {
    for (std::uint64_t edge : faces[1]) {
      const int a = std::countr_zero(edge), b = 63 - std::countl_zero(edge);
      adjacent[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      adjacent[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  auto body = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Count>& acc) {
    for (std::uint64_t w = std::max<std::uint64_t>(lo, 1); w < hi; ++w) {
      int components = 0;
      std::uint64_t unseen = w;
      while (unseen != 0) {
        ++components;
        std::uint64_t frontier = unseen & (~unseen + 1);
        unseen &= ~frontier;
        while (frontier != 0) {
          const int v = std::countr_zero(frontier);
          frontier &= frontier - 1;
          const std::uint64_t next = adjacent[static_cast<std::size_t>(v)] & unseen;
          unseen &= ~next;
          frontier |= next;
        }
      }
      if (components > 1) acc[static_cast<std::size_t>(std::popcount(w) - 1)] += components - 1;
    }
  };
  return parallel_sum(total, worker_count(options.threads, total), static_cast<std::size_t>(n + 1), body);
}

}  // namespace betti
