#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gmac/channel.hpp"
#include "gmac/infotheory.hpp"
#include "gmac/one_set_bounds.hpp"
#include "gmac/regions.hpp"
#include "gmac/two_set_bounds.hpp"

// Search over factored input distributions ("schemes").
namespace gmac {

enum class SchemeKind { OneSet, Outer, TwoSet, Degraded };
std::string_view scheme_kind_name(SchemeKind k);

struct SchemeShape {
  SchemeKind kind = SchemeKind::OneSet;
  std::size_t q = 1, u = 1, v = 1, x1 = 2, x2 = 2;
};

// One group of `rows` independent distributions over `cols` points.
struct SimplexBlock {
  std::string name;
  std::size_t rows = 1;
  std::size_t cols = 1;
};

// Parameter layout per kind (blocks concatenated row-major):
//   OneSet   [q_x2 1 x |Q||X2|] [u_given_q] [x1_given_u]
//   Outer    OneSet blocks, then [v_given_q]
//   TwoSet   [q 1 x |Q|] [u_given_q] [x1_given_u] [v_given_q] [x2_given_v]
//   Degraded [q_x2 1 x |Q||X2|] [x1_given_q]
std::vector<SimplexBlock> scheme_layout(const SchemeShape& shape);
std::size_t parameter_count(const SchemeShape& shape);

using SchemeParams = std::vector<double>;
using AnyScheme = std::variant<SchemeOneSet, SchemeOneSetOuter, SchemeTwoSet, SchemeDegraded>;

AnyScheme make_scheme(const SchemeShape& shape, const SchemeParams& params);
SchemeShape shape_of(const AnyScheme& scheme, const ChannelSpec& channel);
SchemeParams params_of(const AnyScheme& scheme);

enum class Strategy { Auto, Grid, Random, RandomRefine };
std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);  // InvalidInput on unknown names

inline constexpr std::uint64_t kMaxGridSchemes = 100'000'000;

struct SearchConfig {
  std::size_t q = 2, u = 3, v = 2;
  // Auto grids small binary problems (|X1| = 2, |X2| <= 2, |Q|,|U|,|V| <= 2,
  // resolution <= 5) and uses random + refine otherwise.
  Strategy strategy = Strategy::Auto;
  std::size_t grid_resolution = 5;
  std::size_t sample_count = 2000;
  std::uint64_t seed = 1;
  std::size_t refine_iterations = 200;
  double refine_step = 0.1;
  std::size_t jobs = 0;  // 0 = hardware concurrency

  void validate() const;
};

// Strategy actually used for a given problem shape.
Strategy resolve_strategy(const SearchConfig& config, const SchemeShape& shape);

// Every scheme whose simplex rows lie on the grid {k / (resolution - 1)},
// enumerated in a fixed order with random access by index.
class SchemeGrid {
 public:
  SchemeGrid(SchemeShape shape, std::size_t resolution);
  std::uint64_t count() const { return count_; }
  SchemeParams at(std::uint64_t index) const;

 private:
  SchemeShape shape_;
  std::size_t resolution_;
  std::vector<SimplexBlock> blocks_;
  std::vector<std::vector<std::vector<double>>> points_;  // per block: grid points of one row
  std::uint64_t count_ = 1;
};

// Flat-Dirichlet draws; sample `index` depends only on (seed, index).
SchemeParams sample_scheme(const SchemeShape& shape, std::uint64_t seed, std::uint64_t index);
std::vector<SchemeParams> sample_schemes_random(const SchemeShape& shape, std::size_t count,
                                                std::uint64_t seed);

using Objective = std::function<double(const SchemeParams&)>;

// Pairwise mass moves inside each simplex row with a halving step; never
// returns anything worse than `start`.
SchemeParams refine_local(const Objective& objective, const SchemeShape& shape, SchemeParams start,
                          const SearchConfig& config);

enum class SecrecyVariant { General, Degraded };

struct SecrecyResult {
  double value = 0.0;
  SchemeShape shape;
  SchemeParams params;
  AnyScheme witness;
  std::size_t evaluated = 0;
  Strategy strategy = Strategy::Grid;
  // Every visited value, in visiting order (grid index or sample index,
  // refinements appended).
  std::vector<double> visited;
};

SecrecyResult maximize_secrecy_capacity(const ChannelSpec& channel, double r0, const SearchConfig& config,
                                        SecrecyVariant variant = SecrecyVariant::General);

enum class BoundKind { InnerOneSet, OuterOneSet, SecrecyOneSet, Degraded, TwoSet, SecrecyTwoSet };
std::string_view bound_name(BoundKind b);  // inner1, outer1, secrecy1, degraded, two-set, secrecy2
BoundKind parse_bound(std::string_view name);
SchemeKind scheme_kind_for(BoundKind b);
const CoordNames& bound_coords(BoundKind b);

// Per-scheme region for a bound (no convexification).
RateRegion scheme_region(BoundKind bound, const AnyScheme& scheme, const ChannelSpec& channel);

struct RegionResult {
  BoundKind bound = BoundKind::InnerOneSet;
  RateRegion region;  // convexified; piece provenance indexes `schemes`
  SchemeShape shape;
  std::vector<SchemeParams> schemes;
  Strategy strategy = Strategy::Grid;
  std::size_t evaluated = 0;
  std::size_t pruned = 0;  // schemes whose terms were dominated by another's

  const SchemeParams& witness_for_hull_point(std::size_t hull_index) const;
};

// Unions the per-scheme regions of every searched scheme and convexifies.
// With random + refine, the best scheme for each refinement direction is
// locally improved on its support value and added. Default directions are the
// coordinate axes, the all-ones vector, then pairwise sums (at most 8).
RegionResult assemble_region(const ChannelSpec& channel, BoundKind bound, const SearchConfig& config,
                             const std::vector<std::vector<double>>& refine_directions = {});

}  // namespace gmac
