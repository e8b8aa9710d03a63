#include "betti/scan.hpp"

#include <random>

#include "betti/bounds.hpp"
#include "betti/generators.hpp"

namespace betti {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::optional<PoolMember> random_stacking(int d, int k, Rng& rng) {
  const std::uint64_t s = rng();
  return PoolMember{"cross-stacked(seed=" + std::to_string(s) + ")",
                    stacked_cross_polytopal(d, k, GluingPlan::random(s))};
}

// s-fold suspension of a stacking of (d-s)-cross-polytopes on kd - 2s vertices.
std::optional<PoolMember> suspended_stacking(int d, int k, Rng& rng) {
  std::vector<int> depths;
  for (int s = 1; d - s >= 2; ++s) {
    const int rest = k * d - 2 * s, e = d - s;
    if (rest % e == 0 && rest / e >= 2) depths.push_back(s);
  }
  if (depths.empty()) return std::nullopt;
  const int s = depths[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(depths.size()) - 1))];
  const int e = d - s, copies = (k * d - 2 * s) / e;
  const std::uint64_t seed = rng();
  SimplicialComplex out = stacked_cross_polytopal(e, copies, GluingPlan::random(seed));
  for (int t = 0; t < s; ++t) out = suspension(out);
  return PoolMember{"suspension^" + std::to_string(s) + "(cross-stacked(d=" + std::to_string(e) + ",k=" +
                        std::to_string(copies) + ",seed=" + std::to_string(seed) + "))",
                    std::move(out)};
}

// c even cycles joined with a stacking of e-cross-polytopes, 2c + e = d.
std::optional<PoolMember> cycle_join(int d, int k, Rng& rng) {
  const int n = k * d;
  struct Shape {
    int cycles, e, copies;
  };
  std::vector<Shape> shapes;
  for (int c = 1; 2 * c <= d; ++c) {
    const int e = d - 2 * c;
    for (int copies = (e == 0 ? 0 : 2); copies <= (e == 0 ? 0 : n); ++copies) {
      if (e == 1 && copies != 2) continue;
      const int left = n - copies * e;
      if (left >= 4 * c && left % 2 == 0) shapes.push_back({c, e, copies});
    }
  }
  if (shapes.empty()) return std::nullopt;
  const Shape shape = shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shapes.size()) - 1))];
  // Split the remaining vertices into even cycle lengths of at least 4.
  std::vector<int> lengths(static_cast<std::size_t>(shape.cycles), 4);
  int spare = (n - shape.copies * shape.e - 4 * shape.cycles) / 2;
  while (spare-- > 0) lengths[static_cast<std::size_t>(uniform(rng, 0, shape.cycles - 1))] += 2;

  std::string name;
  std::optional<SimplicialComplex> out;
  for (int length : lengths) {
    const auto c = cycle(length);
    out = out ? join(*out, c) : c;
    name += (name.empty() ? "" : "*") + std::string("C") + std::to_string(length);
  }
  if (shape.e > 0) {
    const std::uint64_t seed = rng();
    out = join(*out, stacked_cross_polytopal(shape.e, shape.copies, GluingPlan::random(seed)));
    name += "*cross-stacked(d=" + std::to_string(shape.e) + ",k=" + std::to_string(shape.copies) +
            ",seed=" + std::to_string(seed) + ")";
  }
  return PoolMember{name, std::move(*out)};
}

}  // namespace

std::vector<PoolMember> conjecture_pool(int d, int k, int samples, std::uint64_t seed) {
  if (k < 2 || d < 3) throw EmptyPool("no balanced normal pseudomanifolds in the construction library for these parameters");
  if (k * d > kMaxVertices) throw EmptyPool("kd exceeds the vertex cap");
  Rng rng(seed);
  using Family = std::optional<PoolMember> (*)(int, int, Rng&);
  const Family families[] = {random_stacking, suspended_stacking, cycle_join};
  std::vector<PoolMember> out;
  for (int s = 0; s < samples; ++s) {
    std::optional<PoolMember> member;
    // Families that cannot produce kd vertices are skipped; stackings always can.
    for (int attempt = 0; attempt < 8 && !member; ++attempt) member = families[rng() % 3](d, k, rng);
    if (!member) member = random_stacking(d, k, rng);
    const auto& c = member->complex;
    if (c.num_vertices() != k * d || c.dim() != d - 1 || !is_balanced(c) || !is_normal_pseudomanifold(c)) {
      throw std::logic_error("construction produced an unexpected complex: " + member->construction);
    }
    out.push_back(std::move(*member));
  }
  return out;
}

int ScanReport::violation_count() const {
  int total = 0;
  for (const auto& s : samples) total += static_cast<int>(s.violations.size());
  return total;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json out{{"d", d}, {"k", k}, {"seed", seed}, {"violations", violation_count()}, {"warnings", warnings}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : samples) {
    list.push_back({{"construction", s.construction},
                    {"linear_strand", s.linear},
                    {"stacked_cross_polytopal", s.reference},
                    {"violations", s.violations},
                    {"equal", s.equal}});
  }
  out["samples"] = list;
  return out;
}

ScanReport conjecture_scan(int d, int k, int samples, std::uint64_t seed, const HochsterOptions& options) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  ScanReport report;
  report.d = d;
  report.k = k;
  report.seed = seed;
  if (d == 3) report.warnings.push_back("the conjecture is stated for d >= 4; d = 3 is scanned anyway");
  for (auto& member : conjecture_pool(d, k, samples, seed)) {
    ScanSample sample;
    sample.construction = member.construction;
    sample.linear = linear_strand(member.complex, options);
    sample.equal = true;
    for (int i = 0; i < static_cast<int>(sample.linear.size()); ++i) {
      const Count ref = betti_cross_stacked_closed(k, d, i, 1);
      sample.reference.push_back(ref);
      if (sample.linear[static_cast<std::size_t>(i)] > ref) sample.violations.push_back(i);
      if (sample.linear[static_cast<std::size_t>(i)] != ref) sample.equal = false;
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace betti
