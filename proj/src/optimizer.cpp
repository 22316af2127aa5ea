#include "gmac/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gmac/error.hpp"
#include "gmac/parallel.hpp"

namespace gmac {

std::string_view scheme_kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::OneSet: return "one-set";
    case SchemeKind::Outer: return "outer";
    case SchemeKind::TwoSet: return "two-set";
    case SchemeKind::Degraded: return "degraded";
  }
  return "unknown";
}

std::vector<SimplexBlock> scheme_layout(const SchemeShape& s) {
  switch (s.kind) {
    case SchemeKind::OneSet:
      return {{"q_x2", 1, s.q * s.x2}, {"u_given_q", s.q, s.u}, {"x1_given_u", s.u, s.x1}};
    case SchemeKind::Outer:
      return {{"q_x2", 1, s.q * s.x2}, {"u_given_q", s.q, s.u}, {"x1_given_u", s.u, s.x1}, {"v_given_q", s.q, s.v}};
    case SchemeKind::TwoSet:
      return {{"q", 1, s.q},
              {"u_given_q", s.q, s.u},
              {"x1_given_u", s.u, s.x1},
              {"v_given_q", s.q, s.v},
              {"x2_given_v", s.v, s.x2}};
    case SchemeKind::Degraded:
      return {{"q_x2", 1, s.q * s.x2}, {"x1_given_q", s.q, s.x1}};
  }
  fail(ErrorKind::Internal, "unknown scheme kind");
}

std::size_t parameter_count(const SchemeShape& shape) {
  std::size_t n = 0;
  for (const auto& b : scheme_layout(shape)) n += b.rows * b.cols;
  return n;
}

AnyScheme make_scheme(const SchemeShape& shape, const SchemeParams& params) {
  if (params.size() != parameter_count(shape)) {
    fail(ErrorKind::DimensionMismatch, "scheme parameter vector has the wrong length");
  }
  std::size_t off = 0;
  auto take = [&](std::size_t rows, std::size_t cols) {
    ProbMatrix m(rows, cols, std::vector<double>(params.begin() + static_cast<std::ptrdiff_t>(off),
                                                 params.begin() + static_cast<std::ptrdiff_t>(off + rows * cols)));
    off += rows * cols;
    return m;
  };
  const auto& s = shape;
  switch (s.kind) {
    case SchemeKind::OneSet: {
      SchemeOneSet r;
      r.q_x2 = take(s.q, s.x2);
      r.u_given_q = take(s.q, s.u);
      r.x1_given_u = take(s.u, s.x1);
      return r;
    }
    case SchemeKind::Outer: {
      SchemeOneSetOuter r;
      r.base.q_x2 = take(s.q, s.x2);
      r.base.u_given_q = take(s.q, s.u);
      r.base.x1_given_u = take(s.u, s.x1);
      r.v_given_q = take(s.q, s.v);
      return r;
    }
    case SchemeKind::TwoSet: {
      SchemeTwoSet r;
      r.q = take(1, s.q).data;
      r.u_given_q = take(s.q, s.u);
      r.x1_given_u = take(s.u, s.x1);
      r.v_given_q = take(s.q, s.v);
      r.x2_given_v = take(s.v, s.x2);
      return r;
    }
    case SchemeKind::Degraded: {
      SchemeDegraded r;
      r.q_x2 = take(s.q, s.x2);
      r.x1_given_q = take(s.q, s.x1);
      return r;
    }
  }
  fail(ErrorKind::Internal, "unknown scheme kind");
}

SchemeShape shape_of(const AnyScheme& scheme, const ChannelSpec& channel) {
  SchemeShape s;
  s.x1 = channel.sizes().x1;
  s.x2 = channel.sizes().x2;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SchemeOneSet>) {
          s.kind = SchemeKind::OneSet;
          s.q = v.q_card();
          s.u = v.u_card();
        } else if constexpr (std::is_same_v<T, SchemeOneSetOuter>) {
          s.kind = SchemeKind::Outer;
          s.q = v.base.q_card();
          s.u = v.base.u_card();
          s.v = v.v_card();
        } else if constexpr (std::is_same_v<T, SchemeTwoSet>) {
          s.kind = SchemeKind::TwoSet;
          s.q = v.q_card();
          s.u = v.u_card();
          s.v = v.v_card();
        } else {
          s.kind = SchemeKind::Degraded;
          s.q = v.q_card();
        }
      },
      scheme);
  return s;
}

SchemeParams params_of(const AnyScheme& scheme) {
  SchemeParams p;
  auto put = [&](const std::vector<double>& v) { p.insert(p.end(), v.begin(), v.end()); };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SchemeOneSet>) {
          put(v.q_x2.data), put(v.u_given_q.data), put(v.x1_given_u.data);
        } else if constexpr (std::is_same_v<T, SchemeOneSetOuter>) {
          put(v.base.q_x2.data), put(v.base.u_given_q.data), put(v.base.x1_given_u.data), put(v.v_given_q.data);
        } else if constexpr (std::is_same_v<T, SchemeTwoSet>) {
          put(v.q), put(v.u_given_q.data), put(v.x1_given_u.data), put(v.v_given_q.data), put(v.x2_given_v.data);
        } else {
          put(v.q_x2.data), put(v.x1_given_q.data);
        }
      },
      scheme);
  return p;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Grid: return "grid";
    case Strategy::Random: return "random";
    case Strategy::RandomRefine: return "random+refine";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Auto, Strategy::Grid, Strategy::Random, Strategy::RandomRefine}) {
    if (name == strategy_name(s)) return s;
  }
  fail(ErrorKind::InvalidInput, "unknown search strategy '" + std::string(name) + "'");
}

void SearchConfig::validate() const {
  if (q == 0 || u == 0 || v == 0) fail(ErrorKind::InvalidInput, "cardinalities must be at least 1");
  if (grid_resolution < 2) fail(ErrorKind::InvalidInput, "grid_resolution must be at least 2");
  if (sample_count < 1) fail(ErrorKind::InvalidInput, "sample_count must be at least 1");
  if (!(refine_step > 0.0) || !(refine_step <= 1.0)) fail(ErrorKind::InvalidInput, "refine_step must be in (0, 1]");
}

Strategy resolve_strategy(const SearchConfig& config, const SchemeShape& shape) {
  if (config.strategy != Strategy::Auto) return config.strategy;
  const bool small = shape.x1 == 2 && shape.x2 <= 2 && config.q <= 2 && config.u <= 2 && config.v <= 2 &&
                     config.grid_resolution <= 5;
  return small ? Strategy::Grid : Strategy::RandomRefine;
}

// ---------------------------------------------------------------------------

namespace {

// All compositions of `total` into `parts` nonnegative integers, in
// lexicographic order, scaled by 1 / total.
std::vector<std::vector<double>> simplex_grid(std::size_t parts, std::size_t total) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> c(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
    if (out.size() > 1'000'000) fail(ErrorKind::GridTooLarge, "simplex grid too large");
    if (k + 1 == parts) {
      c[k] = left;
      std::vector<double> p(parts);
      for (std::size_t i = 0; i < parts; ++i) p[i] = static_cast<double>(c[i]) / static_cast<double>(total);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      c[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace

SchemeGrid::SchemeGrid(SchemeShape shape, std::size_t resolution)
    : shape_(shape), resolution_(resolution), blocks_(scheme_layout(shape)) {
  if (resolution < 2) fail(ErrorKind::InvalidInput, "grid resolution must be at least 2");
  for (const auto& b : blocks_) {
    points_.push_back(simplex_grid(b.cols, resolution - 1));
    for (std::size_t r = 0; r < b.rows; ++r) {
      const auto n = static_cast<std::uint64_t>(points_.back().size());
      if (count_ > kMaxGridSchemes / n) {
        fail(ErrorKind::GridTooLarge, "scheme grid exceeds " + std::to_string(kMaxGridSchemes) + " schemes");
      }
      count_ *= n;
    }
  }
}

SchemeParams SchemeGrid::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorKind::InvalidInput, "grid index out of range");
  // Mixed radix with the last row varying fastest.
  std::vector<std::size_t> digits;
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    const auto n = static_cast<std::uint64_t>(points_[b].size());
    for (std::size_t r = 0; r < blocks_[b].rows; ++r) {
      digits.push_back(static_cast<std::size_t>(index % n));
      index /= n;
    }
  }
  std::reverse(digits.begin(), digits.end());
  SchemeParams p;
  std::size_t d = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t r = 0; r < blocks_[b].rows; ++r) {
      const auto& row = points_[b][digits[d++]];
      p.insert(p.end(), row.begin(), row.end());
    }
  }
  return p;
}

SchemeParams sample_scheme(const SchemeShape& shape, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::exponential_distribution<double> expo(1.0);
  SchemeParams p;
  for (const auto& b : scheme_layout(shape)) {
    for (std::size_t r = 0; r < b.rows; ++r) {
      std::vector<double> row(b.cols);
      double s = 0.0;
      for (auto& x : row) s += (x = expo(rng));
      for (auto& x : row) x /= s;
      p.insert(p.end(), row.begin(), row.end());
    }
  }
  return p;
}

std::vector<SchemeParams> sample_schemes_random(const SchemeShape& shape, std::size_t count, std::uint64_t seed) {
  if (count < 1) fail(ErrorKind::InvalidInput, "sample count must be at least 1");
  std::vector<SchemeParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_scheme(shape, seed, i));
  return out;
}

SchemeParams refine_local(const Objective& objective, const SchemeShape& shape, SchemeParams start,
                          const SearchConfig& config) {
  const auto blocks = scheme_layout(shape);
  double best = objective(start);
  double step = config.refine_step;
  for (std::size_t it = 0; it < config.refine_iterations && step >= 1e-6; ++it) {
    bool improved = false;
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (std::size_t r = 0; r < b.rows; ++r, off += b.cols) {
        for (std::size_t i = 0; i < b.cols; ++i) {
          for (std::size_t j = 0; j < b.cols; ++j) {
            if (i == j) continue;
            const double amount = std::min(step, start[off + i]);
            if (amount <= 0.0) continue;
            SchemeParams cand = start;
            cand[off + i] -= amount;
            cand[off + j] += amount;
            if (cand[off + i] < 1e-15) cand[off + i] = 0.0;
            const double v = objective(cand);
            if (v > best) {
              best = v;
              start = std::move(cand);
              improved = true;
            }
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return start;
}

// ---------------------------------------------------------------------------

namespace {

bool better(double v1, const SchemeParams& p1, double v2, const SchemeParams& p2) {
  return v1 > v2 || (v1 == v2 && p1 < p2);
}

std::size_t jobs_of(const SearchConfig& c) { return c.jobs == 0 ? default_jobs() : c.jobs; }

SchemeShape shape_for(SchemeKind kind, const SearchConfig& c, const ChannelSpec& channel) {
  SchemeShape s;
  s.kind = kind;
  s.x1 = channel.sizes().x1;
  s.x2 = channel.sizes().x2;
  s.q = c.q;
  s.u = kind == SchemeKind::Degraded ? 1 : c.u;
  s.v = (kind == SchemeKind::Outer || kind == SchemeKind::TwoSet) ? c.v : 1;
  return s;
}

// Evaluates f on every grid/sample index in fixed-size chunks so memory stays
// bounded; `visit` receives (index, params, value) in index order.
template <typename Gen, typename Visit>
void evaluate_stream(std::uint64_t count, std::size_t jobs, const Gen& gen, const Objective& f, Visit&& visit) {
  constexpr std::uint64_t kChunk = 1u << 14;
  std::vector<SchemeParams> params;
  std::vector<double> values;
  for (std::uint64_t start = 0; start < count; start += kChunk) {
    const std::size_t n = static_cast<std::size_t>(std::min(kChunk, count - start));
    params.assign(n, {});
    values.assign(n, 0.0);
    parallel_for(n, jobs, [&](std::size_t i) {
      params[i] = gen(start + i);
      values[i] = f(params[i]);
    });
    for (std::size_t i = 0; i < n; ++i) visit(start + i, params[i], values[i]);
  }
}

}  // namespace

SecrecyResult maximize_secrecy_capacity(const ChannelSpec& channel, double r0, const SearchConfig& config,
                                        SecrecyVariant variant) {
  config.validate();
  if (!(r0 >= 0.0) || !std::isfinite(r0)) fail(ErrorKind::InvalidInput, "common rate must be nonnegative");
  const SchemeKind kind = variant == SecrecyVariant::Degraded ? SchemeKind::Degraded : SchemeKind::OneSet;
  const SchemeShape shape = shape_for(kind, config, channel);
  const Objective f = [&](const SchemeParams& p) {
    const auto s = make_scheme(shape, p);
    return kind == SchemeKind::Degraded
               ? degraded_secrecy_capacity_value(std::get<SchemeDegraded>(s), channel, r0)
               : secrecy_capacity_value(std::get<SchemeOneSet>(s), channel, r0);
  };

  SecrecyResult res;
  res.shape = shape;
  res.strategy = resolve_strategy(config, shape);
  res.value = -1.0;
  constexpr std::size_t kMaxRecorded = 1'000'000;
  auto consider = [&](const SchemeParams& p, double v) {
    ++res.evaluated;
    if (res.visited.size() < kMaxRecorded) res.visited.push_back(v);
    if (res.params.empty() || better(v, p, res.value, res.params)) {
      res.value = v;
      res.params = p;
    }
  };

  if (res.strategy == Strategy::Grid) {
    const SchemeGrid grid(shape, config.grid_resolution);
    evaluate_stream(grid.count(), jobs_of(config), [&](std::uint64_t i) { return grid.at(i); }, f,
                    [&](std::uint64_t, const SchemeParams& p, double v) { consider(p, v); });
  } else {
    // Keep the few best samples as refinement seeds.
    constexpr std::size_t kSeeds = 4;
    std::vector<std::pair<double, SchemeParams>> top;
    evaluate_stream(
        config.sample_count, jobs_of(config), [&](std::uint64_t i) { return sample_scheme(shape, config.seed, i); },
        f, [&](std::uint64_t, const SchemeParams& p, double v) {
          consider(p, v);
          top.emplace_back(v, p);
          std::sort(top.begin(), top.end(),
                    [](const auto& a, const auto& b) { return better(a.first, a.second, b.first, b.second); });
          if (top.size() > kSeeds) top.pop_back();
        });
    if (res.strategy == Strategy::RandomRefine) {
      std::vector<SchemeParams> refined(top.size());
      parallel_for(top.size(), jobs_of(config),
                   [&](std::size_t i) { refined[i] = refine_local(f, shape, top[i].second, config); });
      for (const auto& p : refined) consider(p, f(p));
    }
  }
  res.witness = make_scheme(shape, res.params);
  return res;
}

// ---------------------------------------------------------------------------

std::string_view bound_name(BoundKind b) {
  switch (b) {
    case BoundKind::InnerOneSet: return "inner1";
    case BoundKind::OuterOneSet: return "outer1";
    case BoundKind::SecrecyOneSet: return "secrecy1";
    case BoundKind::Degraded: return "degraded";
    case BoundKind::TwoSet: return "two-set";
    case BoundKind::SecrecyTwoSet: return "secrecy2";
  }
  return "unknown";
}

BoundKind parse_bound(std::string_view name) {
  for (BoundKind b : {BoundKind::InnerOneSet, BoundKind::OuterOneSet, BoundKind::SecrecyOneSet, BoundKind::Degraded,
                      BoundKind::TwoSet, BoundKind::SecrecyTwoSet}) {
    if (name == bound_name(b)) return b;
  }
  fail(ErrorKind::InvalidInput, "unknown bound '" + std::string(name) + "'");
}

SchemeKind scheme_kind_for(BoundKind b) {
  switch (b) {
    case BoundKind::InnerOneSet:
    case BoundKind::SecrecyOneSet: return SchemeKind::OneSet;
    case BoundKind::OuterOneSet: return SchemeKind::Outer;
    case BoundKind::Degraded: return SchemeKind::Degraded;
    case BoundKind::TwoSet:
    case BoundKind::SecrecyTwoSet: return SchemeKind::TwoSet;
  }
  fail(ErrorKind::Internal, "unknown bound");
}

const CoordNames& bound_coords(BoundKind b) {
  switch (b) {
    case BoundKind::InnerOneSet:
    case BoundKind::OuterOneSet:
    case BoundKind::Degraded: return equivocation_coords();
    case BoundKind::SecrecyOneSet: return secrecy_coords();
    case BoundKind::TwoSet: return two_set_coords();
    case BoundKind::SecrecyTwoSet: return mac_coords();
  }
  fail(ErrorKind::Internal, "unknown bound");
}

namespace {

// Information terms of one scheme, oriented so that larger is better for
// every entry (leakage terms negated); every bound is monotone in them.
struct Evaluated {
  std::vector<double> key;
  RateRegion region;
};

Evaluated evaluate_scheme(BoundKind bound, const AnyScheme& scheme, const ChannelSpec& channel) {
  Evaluated e;
  switch (bound) {
    case BoundKind::InnerOneSet:
    case BoundKind::SecrecyOneSet: {
      const auto t = one_set_terms(std::get<SchemeOneSet>(scheme), channel);
      e.key = {t.a, t.b, -t.d};
      e.region = bound == BoundKind::InnerOneSet ? inner_region(t) : secrecy_region(t);
      break;
    }
    case BoundKind::OuterOneSet: {
      const auto t = outer_terms(std::get<SchemeOneSetOuter>(scheme), channel);
      e.key = {t.r1, t.base.a, t.base.b, -t.base.d};
      e.region = outer_region(t);
      break;
    }
    case BoundKind::Degraded: {
      const auto t = degraded_terms(std::get<SchemeDegraded>(scheme), channel);
      e.key = {t.a, t.b, -t.d};
      e.region = degraded_region(t);
      break;
    }
    case BoundKind::TwoSet:
    case BoundKind::SecrecyTwoSet: {
      const auto t = two_set_terms(std::get<SchemeTwoSet>(scheme), channel);
      e.key = {t.i1, t.i2, t.i12, t.i0, -t.e1, -t.e2};
      e.region = bound == BoundKind::TwoSet ? two_set_region(t) : secrecy_inner_region(t);
      break;
    }
  }
  return e;
}

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

std::vector<std::vector<double>> default_directions(std::size_t d) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    out.push_back(std::move(e));
  }
  out.emplace_back(d, 1.0);
  for (std::size_t i = 0; i < d && out.size() < 8; ++i)
    for (std::size_t j = i + 1; j < d && out.size() < 8; ++j) {
      std::vector<double> e(d, 0.0);
      e[i] = e[j] = 1.0;
      out.push_back(std::move(e));
    }
  if (out.size() > 8) out.resize(8);
  return out;
}

}  // namespace

RateRegion scheme_region(BoundKind bound, const AnyScheme& scheme, const ChannelSpec& channel) {
  return evaluate_scheme(bound, scheme, channel).region;
}

const SchemeParams& RegionResult::witness_for_hull_point(std::size_t hull_index) const {
  if (hull_index >= region.hull_sources.size()) fail(ErrorKind::InvalidInput, "hull index out of range");
  return schemes.at(region.provenance.at(region.hull_sources[hull_index]));
}

RegionResult assemble_region(const ChannelSpec& channel, BoundKind bound, const SearchConfig& config,
                             const std::vector<std::vector<double>>& refine_directions) {
  config.validate();
  RegionResult res;
  res.bound = bound;
  res.shape = shape_for(scheme_kind_for(bound), config, channel);
  res.strategy = resolve_strategy(config, res.shape);
  const std::size_t jobs = jobs_of(config);

  if (res.strategy == Strategy::Grid) {
    const SchemeGrid grid(res.shape, config.grid_resolution);
    res.schemes.resize(static_cast<std::size_t>(grid.count()));
    for (std::uint64_t i = 0; i < grid.count(); ++i) res.schemes[static_cast<std::size_t>(i)] = grid.at(i);
  } else {
    res.schemes = sample_schemes_random(res.shape, config.sample_count, config.seed);
  }

  std::vector<Evaluated> evals(res.schemes.size());
  parallel_for(evals.size(), jobs, [&](std::size_t i) {
    evals[i] = evaluate_scheme(bound, make_scheme(res.shape, res.schemes[i]), channel);
  });

  if (res.strategy == Strategy::RandomRefine) {
    const auto& coords = bound_coords(bound);
    auto dirs = refine_directions.empty() ? default_directions(coords.size()) : refine_directions;
    std::vector<SchemeParams> refined(dirs.size());
    parallel_for(dirs.size(), jobs, [&](std::size_t k) {
      const auto& dir = dirs[k];
      if (dir.size() != coords.size()) fail(ErrorKind::DimensionMismatch, "refinement direction dimension");
      auto value = [&](const RateRegion& r) { return r.pieces.empty() ? -1.0 : support(r, dir); };
      std::size_t best = 0;
      double best_v = value(evals[0].region);
      for (std::size_t i = 1; i < evals.size(); ++i) {
        const double v = value(evals[i].region);
        if (better(v, res.schemes[i], best_v, res.schemes[best])) {
          best = i;
          best_v = v;
        }
      }
      const Objective f = [&](const SchemeParams& p) {
        return value(evaluate_scheme(bound, make_scheme(res.shape, p), channel).region);
      };
      refined[k] = refine_local(f, res.shape, res.schemes[best], config);
    });
    for (auto& p : refined) {
      if (std::find(res.schemes.begin(), res.schemes.end(), p) != res.schemes.end()) continue;
      evals.push_back(evaluate_scheme(bound, make_scheme(res.shape, p), channel));
      res.schemes.push_back(std::move(p));
    }
  }
  res.evaluated = res.schemes.size();

  // Drop schemes whose terms are dominated by another scheme's (ties keep the
  // lower index); their regions are contained in the dominating region.
  std::vector<std::size_t> order(evals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return evals[a].key > evals[b].key; });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t k : kept) {
      if (dominates(evals[k].key, evals[i].key) && (evals[k].key != evals[i].key || k < i)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  res.pruned = evals.size() - kept.size();

  RateRegion merged;
  merged.coords = bound_coords(bound);
  for (std::size_t i : kept) {
    auto& r = evals[i].region;
    for (std::size_t p = 0; p < r.pieces.size(); ++p) merged.add(std::move(r.pieces[p]), i);
    merged.dropped_empty += r.dropped_empty;
  }
  if (bound == BoundKind::Degraded && classify_degradedness(channel).verdict == Degradedness::NotDegraded) {
    merged.warnings.emplace_back(kNotDegradedWarning);
  }
  if (bound == BoundKind::OuterOneSet) {
    merged.warnings.emplace_back("sampled under-approximation of the outer bound (union over searched schemes only)");
  }
  res.region = convexify(std::move(merged));
  return res;
}

}  // namespace gmac
