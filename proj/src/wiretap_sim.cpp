#include "gmac/wiretap_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "gmac/error.hpp"
#include "gmac/parallel.hpp"

namespace gmac {

namespace {

struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit, const char* what) {
  if (b != 0 && a > limit / b) {
    fail(ErrorKind::EnumerationTooLarge,
         std::string(what) + " exceeds the enumeration guard of " + std::to_string(limit) + " states");
  }
  return a * b;
}

std::uint64_t power_guarded(std::uint64_t base, std::size_t n, std::uint64_t limit, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r = checked_mul(r, base, limit, what);
  return r;
}

// |X1|^n |X2|^n M0 M1 M2 J1 J2.
void check_joint_states(const CodeDimensions& d, std::size_t x1, std::size_t x2) {
  const auto limit = max_enumeration_states();
  const char* what = "codebook joint state count";
  std::uint64_t s = power_guarded(x1, d.n, limit, what);
  s = checked_mul(s, power_guarded(x2, d.n, limit, what), limit, what);
  for (std::size_t f : {d.m0, d.m1, d.m2, d.j1, d.j2}) s = checked_mul(s, f, limit, what);
}

// Likelihood of every output sequence (first letter most significant) for a
// fixed codeword pair under a per-letter kernel.
void sequence_likelihood(const MarginalKernel& k, std::size_t x2_size, std::span<const std::uint32_t> a,
                         std::span<const std::uint32_t> b, std::vector<double>& out) {
  const std::size_t z = k.table.cols;
  out.assign(1, 1.0);
  std::vector<double> next;
  for (std::size_t t = 0; t < a.size(); ++t) {
    next.assign(out.size() * z, 0.0);
    for (std::size_t p = 0; p < out.size(); ++p)
      for (std::size_t s = 0; s < z; ++s) next[p * z + s] = out[p] * k(a[t], b[t], s, x2_size);
    out.swap(next);
  }
}

}  // namespace

std::uint64_t max_enumeration_states() {
  if (const char* env = std::getenv("GMAC_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxStates;
}

std::array<double, 3> CodeDimensions::rates() const {
  const double nn = static_cast<double>(n);
  return {std::log2(static_cast<double>(m0)) / nn, std::log2(static_cast<double>(m1)) / nn,
          std::log2(static_cast<double>(m2)) / nn};
}

void CodeDimensions::validate() const {
  if (n == 0) fail(ErrorKind::InvalidInput, "blocklength must be at least 1");
  for (std::size_t v : {m0, m1, m2, j1, j2})
    if (v == 0) fail(ErrorKind::InvalidInput, "message and bin sizes must be at least 1");
}

std::span<const std::uint32_t> Codebook::x1(std::size_t w0, std::size_t w1, std::size_t j1) const {
  return {x1_words.data() + ((w0 * dims.m1 + w1) * dims.j1 + j1) * dims.n, dims.n};
}

std::span<const std::uint32_t> Codebook::x2(std::size_t w0, std::size_t w2, std::size_t j2) const {
  return {x2_words.data() + ((w0 * dims.m2 + w2) * dims.j2 + j2) * dims.n, dims.n};
}

void Codebook::validate(const ChannelSpec& channel) const {
  dims.validate();
  if (x1_size != channel.sizes().x1 || x2_size != channel.sizes().x2) {
    fail(ErrorKind::DimensionMismatch, "codebook alphabets do not match the channel");
  }
  if (x1_words.size() != dims.m0 * dims.m1 * dims.j1 * dims.n ||
      x2_words.size() != dims.m0 * dims.m2 * dims.j2 * dims.n) {
    fail(ErrorKind::DimensionMismatch, "codebook map sizes do not match its dimensions");
  }
  for (auto l : x1_words)
    if (l >= x1_size) fail(ErrorKind::InvalidInput, "codeword letter outside the X1 alphabet");
  for (auto l : x2_words)
    if (l >= x2_size) fail(ErrorKind::InvalidInput, "codeword letter outside the X2 alphabet");
}

Codebook make_codebook(const ChannelSpec& channel, const CodeDimensions& dims, std::vector<std::uint32_t> x1_words,
                       std::vector<std::uint32_t> x2_words) {
  Codebook c;
  c.dims = dims;
  c.x1_size = channel.sizes().x1;
  c.x2_size = channel.sizes().x2;
  c.x1_words = std::move(x1_words);
  c.x2_words = std::move(x2_words);
  c.validate(channel);
  check_joint_states(dims, c.x1_size, c.x2_size);
  return c;
}

Codebook build_codebook(const ChannelSpec& channel, const CodeDimensions& dims, const InputDistribution& input,
                        std::uint64_t seed) {
  dims.validate();
  const auto& s = channel.sizes();
  auto check_dist = [](const std::vector<double>& p, std::size_t size, const char* who) {
    if (p.size() != size) fail(ErrorKind::DimensionMismatch, std::string(who) + " input distribution size");
    double sum = 0.0;
    for (double v : p) {
      if (!(v >= 0.0)) fail(ErrorKind::NegativeProbability, std::string(who) + " input distribution");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) fail(ErrorKind::RowSumViolation, std::string(who) + " input distribution");
  };
  check_dist(input.x1, s.x1, "X1");
  check_dist(input.x2, s.x2, "X2");
  check_joint_states(dims, s.x1, s.x2);

  // Inverse-CDF draws from 53-bit uniforms keep the stream portable.
  std::mt19937_64 rng(seed);
  auto draw = [&](const std::vector<double>& p) -> std::uint32_t {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      if (u < acc) return static_cast<std::uint32_t>(i);
    }
    std::size_t last = p.size() - 1;
    while (last > 0 && p[last] == 0.0) --last;
    return static_cast<std::uint32_t>(last);
  };
  Codebook c;
  c.dims = dims;
  c.x1_size = s.x1;
  c.x2_size = s.x2;
  c.seed = seed;
  c.x1_words.resize(dims.m0 * dims.m1 * dims.j1 * dims.n);
  c.x2_words.resize(dims.m0 * dims.m2 * dims.j2 * dims.n);
  for (auto& l : c.x1_words) l = draw(input.x1);
  for (auto& l : c.x2_words) l = draw(input.x2);
  return c;
}

ExactValue exact_error_probability_detailed(const Codebook& code, const ChannelSpec& channel) {
  code.validate(channel);
  const auto& d = code.dims;
  check_joint_states(d, code.x1_size, code.x2_size);
  const auto limit = max_enumeration_states();
  const char* what = "decoder enumeration";
  std::uint64_t work = power_guarded(channel.sizes().y, d.n, limit, what);
  for (std::size_t f : {d.m0, d.m1, d.m2, d.j1, d.j2}) work = checked_mul(work, f, limit, what);

  const auto k = marginal_kernel(channel, Receiver::Destination);
  const std::size_t ny = static_cast<std::size_t>(power_guarded(channel.sizes().y, d.n, limit, what));
  std::vector<double> best(ny, 0.0), like(ny, 0.0), lik;
  Kahan mass;
  const double bins = static_cast<double>(d.j1 * d.j2);
  // The ML rule keeps the first maximizer in (w0, w1, w2) order; only the
  // maximum enters the probability of correct decoding.
  for (std::size_t w0 = 0; w0 < d.m0; ++w0)
    for (std::size_t w1 = 0; w1 < d.m1; ++w1)
      for (std::size_t w2 = 0; w2 < d.m2; ++w2) {
        std::fill(like.begin(), like.end(), 0.0);
        for (std::size_t j1 = 0; j1 < d.j1; ++j1)
          for (std::size_t j2 = 0; j2 < d.j2; ++j2) {
            sequence_likelihood(k, code.x2_size, code.x1(w0, w1, j1), code.x2(w0, w2, j2), lik);
            for (std::size_t y = 0; y < ny; ++y) like[y] += lik[y];
          }
        for (std::size_t y = 0; y < ny; ++y) {
          like[y] /= bins;
          mass.add(like[y]);
          if (like[y] > best[y]) best[y] = like[y];
        }
      }
  const double m = static_cast<double>(d.m0 * d.m1 * d.m2);
  Kahan correct;
  for (double b : best) correct.add(b);
  ExactValue r;
  r.value = std::clamp(1.0 - correct.sum / m, 0.0, 1.0);
  r.mass = mass.sum / m;
  return r;
}

double exact_error_probability(const Codebook& code, const ChannelSpec& channel) {
  return exact_error_probability_detailed(code, channel).value;
}

namespace {

// (1/n) H(W_t | Z^n, X_o^n, W0, W_o) for target user t observed through
// `receiver`; the other user's bin index is marginalized by grouping equal
// codewords.
ExactValue conditional_equivocation(const Codebook& code, const ChannelSpec& channel, bool target_is_user1,
                                    Receiver receiver) {
  code.validate(channel);
  const auto& d = code.dims;
  check_joint_states(d, code.x1_size, code.x2_size);
  const auto k = marginal_kernel(channel, receiver);
  const std::size_t z = k.table.cols;
  const std::size_t mt = target_is_user1 ? d.m1 : d.m2, jt = target_is_user1 ? d.j1 : d.j2;
  const std::size_t mo = target_is_user1 ? d.m2 : d.m1, jo = target_is_user1 ? d.j2 : d.j1;

  const auto limit = max_enumeration_states();
  const char* what = "equivocation enumeration";
  std::uint64_t work = power_guarded(z, d.n, limit, what);
  for (std::size_t f : {d.m0, mt, jt, mo, jo}) work = checked_mul(work, f, limit, what);
  const std::size_t nz = static_cast<std::size_t>(power_guarded(z, d.n, limit, what));

  auto target_word = [&](std::size_t w0, std::size_t w, std::size_t j) {
    return target_is_user1 ? code.x1(w0, w, j) : code.x2(w0, w, j);
  };
  auto other_word = [&](std::size_t w0, std::size_t w, std::size_t j) {
    return target_is_user1 ? code.x2(w0, w, j) : code.x1(w0, w, j);
  };

  Kahan entropy, mass;
  std::vector<double> q(mt * nz), lik;
  const double outer = 1.0 / static_cast<double>(d.m0 * mo);
  for (std::size_t w0 = 0; w0 < d.m0; ++w0)
    for (std::size_t wo = 0; wo < mo; ++wo) {
      std::map<std::vector<std::uint32_t>, std::size_t> groups;
      for (std::size_t j = 0; j < jo; ++j) {
        const auto s = other_word(w0, wo, j);
        ++groups[std::vector<std::uint32_t>(s.begin(), s.end())];
      }
      for (const auto& [seq, count] : groups) {
        const double scale = static_cast<double>(count) / static_cast<double>(jo * mt * jt);
        std::fill(q.begin(), q.end(), 0.0);
        for (std::size_t w = 0; w < mt; ++w)
          for (std::size_t j = 0; j < jt; ++j) {
            const auto t = target_word(w0, w, j);
            if (target_is_user1)
              sequence_likelihood(k, code.x2_size, t, seq, lik);
            else
              sequence_likelihood(k, code.x2_size, seq, t, lik);
            for (std::size_t y = 0; y < nz; ++y) q[w * nz + y] += lik[y];
          }
        for (std::size_t y = 0; y < nz; ++y) {
          double total = 0.0;
          for (std::size_t w = 0; w < mt; ++w) total += q[w * nz + y] * scale;
          if (total <= 0.0) continue;
          for (std::size_t w = 0; w < mt; ++w) {
            const double p = q[w * nz + y] * scale;
            mass.add(outer * p);
            if (p > 0.0) entropy.add(outer * p * (std::log2(total) - std::log2(p)));
          }
        }
      }
    }
  ExactValue r;
  r.value = std::max(0.0, entropy.sum / static_cast<double>(d.n));
  r.mass = mass.sum;
  return r;
}

}  // namespace

ExactValue exact_equivocation_detailed(const Codebook& code, const ChannelSpec& channel, EquivocationTarget target) {
  return target == EquivocationTarget::User2AboutW1
             ? conditional_equivocation(code, channel, true, Receiver::User2)
             : conditional_equivocation(code, channel, false, Receiver::User1);
}

double exact_equivocation(const Codebook& code, const ChannelSpec& channel, EquivocationTarget target) {
  return exact_equivocation_detailed(code, channel, target).value;
}

double exact_destination_equivocation(const Codebook& code, const ChannelSpec& channel) {
  return conditional_equivocation(code, channel, true, Receiver::Destination).value;
}

SimSummary simulate(const ChannelSpec& channel, const CodeDimensions& dims, const InputDistribution& input,
                    const std::vector<std::uint64_t>& seeds, std::size_t jobs) {
  if (seeds.empty()) fail(ErrorKind::InvalidInput, "at least one seed is required");
  SimSummary out;
  out.reports.resize(seeds.size());
  parallel_for(seeds.size(), jobs == 0 ? default_jobs() : jobs, [&](std::size_t i) {
    const auto code = build_codebook(channel, dims, input, seeds[i]);
    SimReport r;
    r.seed = seeds[i];
    const auto err = exact_error_probability_detailed(code, channel);
    const auto e2 = exact_equivocation_detailed(code, channel, EquivocationTarget::User2AboutW1);
    r.error_probability = err.value;
    r.equivocation_user2 = e2.value;
    r.equivocation_user1 = exact_equivocation(code, channel, EquivocationTarget::User1AboutW2);
    r.rates = dims.rates();
    r.mass = e2.mass;
    out.reports[i] = r;
  });
  Kahan e, q2, q1;
  for (const auto& r : out.reports) {
    e.add(r.error_probability);
    q2.add(r.equivocation_user2);
    q1.add(r.equivocation_user1);
  }
  const double n = static_cast<double>(seeds.size());
  out.mean_error_probability = e.sum / n;
  out.mean_equivocation_user2 = q2.sum / n;
  out.mean_equivocation_user1 = q1.sum / n;
  return out;
}

}  // namespace gmac
