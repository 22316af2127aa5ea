#include "gmac/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmac/error.hpp"
#include "gmac/lp.hpp"

namespace gmac {

ChannelSpec validate_channel(std::vector<double> raw, const AlphabetSizes& sizes) {
  if (sizes.x1 == 0 || sizes.x2 == 0 || sizes.y == 0 || sizes.y1 == 0 || sizes.y2 == 0) {
    fail(ErrorKind::DimensionMismatch, "channel: alphabet sizes must be at least 1");
  }
  if (raw.size() != sizes.total()) {
    fail(ErrorKind::DimensionMismatch,
         "channel: table has " + std::to_string(raw.size()) + " entries, expected " +
             std::to_string(sizes.total()));
  }
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) {
      fail(ErrorKind::NegativeProbability, "channel: negative or non-finite probability");
    }
  }
  const std::size_t block = sizes.outputs();
  for (std::size_t in = 0; in < sizes.inputs(); ++in) {
    double s = 0.0;
    for (std::size_t k = 0; k < block; ++k) s += raw[in * block + k];
    const double dev = std::abs(s - 1.0);
    if (dev > kRowSumTolerance) {
      fail(ErrorKind::RowSumViolation,
           "channel: block (x1=" + std::to_string(in / sizes.x2) + ", x2=" +
               std::to_string(in % sizes.x2) + ") sums to " + std::to_string(s));
    }
    if (dev > 0.0) {
      for (std::size_t k = 0; k < block; ++k) raw[in * block + k] /= s;
    }
  }
  return ChannelSpec(sizes, std::move(raw));
}

std::string_view receiver_name(Receiver r) {
  switch (r) {
    case Receiver::Destination: return "destination";
    case Receiver::User1: return "user1";
    case Receiver::User2: return "user2";
  }
  return "destination";
}

MarginalKernel marginal_kernel(const ChannelSpec& spec, Receiver receiver) {
  const auto& s = spec.sizes();
  const std::size_t out = receiver == Receiver::Destination ? s.y
                          : receiver == Receiver::User1     ? s.y1
                                                            : s.y2;
  MarginalKernel k{receiver, ProbMatrix(s.inputs(), out)};
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y = 0; y < s.y; ++y)
        for (std::size_t y1 = 0; y1 < s.y1; ++y1)
          for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
            const std::size_t o = receiver == Receiver::Destination ? y
                                  : receiver == Receiver::User1     ? y1
                                                                    : y2;
            k.table(x1 * s.x2 + x2, o) += spec.p(x1, x2, y, y1, y2);
          }
  return k;
}

std::string_view degradedness_name(Degradedness d) {
  switch (d) {
    case Degradedness::Physically: return "physically-degraded";
    case Degradedness::Stochastically: return "stochastically-degraded";
    case Degradedness::NotDegraded: return "not-degraded";
  }
  return "not-degraded";
}

namespace {

// p(y, y2 | x1, x2) with Y1 summed out; rows x1 * |X2| + x2, cols y * |Y2| + y2.
ProbMatrix destination_wiretap_pair(const ChannelSpec& spec) {
  const auto& s = spec.sizes();
  ProbMatrix pair(s.inputs(), s.y * s.y2);
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y = 0; y < s.y; ++y)
        for (std::size_t y1 = 0; y1 < s.y1; ++y1)
          for (std::size_t y2 = 0; y2 < s.y2; ++y2)
            pair(x1 * s.x2 + x2, y * s.y2 + y2) += spec.p(x1, x2, y, y1, y2);
  return pair;
}

// max |p(y2|x1,x2) - sum_y p(y|x1,x2) w(y2|y,x2)| over all entries.
double stochastic_residual(const ChannelSpec& spec, const ProbMatrix& w) {
  const auto& s = spec.sizes();
  const auto dest = marginal_kernel(spec, Receiver::Destination);
  const auto tap = marginal_kernel(spec, Receiver::User2);
  double worst = 0.0;
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
        double v = 0.0;
        for (std::size_t y = 0; y < s.y; ++y) v += dest.table(x1 * s.x2 + x2, y) * w(y * s.x2 + x2, y2);
        worst = std::max(worst, std::abs(v - tap.table(x1 * s.x2 + x2, y2)));
      }
  return worst;
}

}  // namespace

DegradednessCertificate check_physically_degraded(const ChannelSpec& spec, double tol) {
  if (!(tol > 0.0)) fail(ErrorKind::InvalidInput, "degradedness tolerance must be positive");
  const auto& s = spec.sizes();
  const ProbMatrix pair = destination_wiretap_pair(spec);
  const auto dest = marginal_kernel(spec, Receiver::Destination);

  // Candidate kernel: condition on (y, x2) aggregating over x1. Any valid
  // kernel must agree with this ratio wherever p(y|x1,x2) > 0.
  ProbMatrix w(s.y * s.x2, s.y2);
  for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
    for (std::size_t y = 0; y < s.y; ++y) {
      double denom = 0.0;
      for (std::size_t x1 = 0; x1 < s.x1; ++x1) denom += dest.table(x1 * s.x2 + x2, y);
      const std::size_t r = y * s.x2 + x2;
      if (denom <= 0.0) {
        for (std::size_t y2 = 0; y2 < s.y2; ++y2) w(r, y2) = 1.0 / static_cast<double>(s.y2);
        continue;
      }
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
        double num = 0.0;
        for (std::size_t x1 = 0; x1 < s.x1; ++x1) num += pair(x1 * s.x2 + x2, y * s.y2 + y2);
        w(r, y2) = num / denom;
      }
    }
  }

  double residual = 0.0;
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y = 0; y < s.y; ++y)
        for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
          const std::size_t in = x1 * s.x2 + x2;
          const double predicted = dest.table(in, y) * w(y * s.x2 + x2, y2);
          residual = std::max(residual, std::abs(pair(in, y * s.y2 + y2) - predicted));
        }

  DegradednessCertificate cert;
  cert.residual = residual;
  if (residual <= tol) {
    cert.verdict = Degradedness::Physically;
    cert.witness = std::move(w);
  }
  return cert;
}

DegradednessCertificate check_stochastically_degraded(const ChannelSpec& spec, double tol) {
  if (!(tol > 0.0)) fail(ErrorKind::InvalidInput, "degradedness tolerance must be positive");
  const auto& s = spec.sizes();
  const auto dest = marginal_kernel(spec, Receiver::Destination);
  const auto tap = marginal_kernel(spec, Receiver::User2);

  ProbMatrix w(s.y * s.x2, s.y2);
  double lp_residual = 0.0;
  // The constraints decouple across x2: solve one min-max LP per input x2.
  // Variables: w(y, y2) for all y, y2, then the residual bound t.
  const std::size_t nw = s.y * s.y2;
  for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
    lp::Problem prob(nw + 1);
    prob.objective[nw] = -1.0;
    for (std::size_t y = 0; y < s.y; ++y) {
      std::vector<double> row(nw + 1, 0.0);
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) row[y * s.y2 + y2] = 1.0;
      prob.add_eq(std::move(row), 1.0);
    }
    for (std::size_t x1 = 0; x1 < s.x1; ++x1) {
      const std::size_t in = x1 * s.x2 + x2;
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
        std::vector<double> row(nw + 1, 0.0);
        for (std::size_t y = 0; y < s.y; ++y) row[y * s.y2 + y2] = dest.table(in, y);
        std::vector<double> neg(row);
        for (double& v : neg) v = -v;
        row[nw] = -1.0;
        neg[nw] = -1.0;
        prob.add_le(std::move(row), tap.table(in, y2));
        prob.add_le(std::move(neg), -tap.table(in, y2));
      }
    }
    const auto sol = lp::solve(prob);
    if (sol.status != lp::Status::Optimal) {
      fail(ErrorKind::Internal, "degradedness LP did not reach an optimum");
    }
    lp_residual = std::max(lp_residual, sol.x[nw]);
    for (std::size_t y = 0; y < s.y; ++y) {
      double reach = 0.0;
      for (std::size_t x1 = 0; x1 < s.x1; ++x1) reach += dest.table(x1 * s.x2 + x2, y);
      const std::size_t r = y * s.x2 + x2;
      if (reach <= 0.0) {
        for (std::size_t y2 = 0; y2 < s.y2; ++y2) w(r, y2) = 1.0 / static_cast<double>(s.y2);
        continue;
      }
      double sum = 0.0;
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) sum += sol.x[y * s.y2 + y2];
      for (std::size_t y2 = 0; y2 < s.y2; ++y2) w(r, y2) = sol.x[y * s.y2 + y2] / sum;
    }
  }

  DegradednessCertificate cert;
  if (lp_residual <= tol) {
    cert.residual = stochastic_residual(spec, w);
    cert.verdict = Degradedness::Stochastically;
    cert.witness = std::move(w);
  } else {
    cert.residual = lp_residual;
  }
  return cert;
}

DegradednessCertificate classify_degradedness(const ChannelSpec& spec, double tol) {
  auto physical = check_physically_degraded(spec, tol);
  if (physical.verdict == Degradedness::Physically) return physical;
  return check_stochastically_degraded(spec, tol);
}

ChannelSpec compose_degraded_channel(std::size_t size_x1, std::size_t size_x2,
                                     const ProbMatrix& main, const ProbMatrix& degrade,
                                     const std::optional<ProbMatrix>& side) {
  require_row_stochastic(main, "main kernel");
  require_row_stochastic(degrade, "degrade kernel");
  if (side) require_row_stochastic(*side, "side kernel");
  const std::size_t inputs = size_x1 * size_x2;
  if (main.rows != inputs) {
    fail(ErrorKind::DimensionMismatch, "main kernel must have |X1|*|X2| rows");
  }
  if (degrade.rows != main.cols * size_x2) {
    fail(ErrorKind::DimensionMismatch, "degrade kernel must have |Y|*|X2| rows");
  }
  if (side && side->rows != inputs) {
    fail(ErrorKind::DimensionMismatch, "side kernel must have |X1|*|X2| rows");
  }
  AlphabetSizes s{size_x1, size_x2, main.cols, side ? side->cols : 1, degrade.cols};
  std::vector<double> raw(s.total(), 0.0);
  for (std::size_t x1 = 0; x1 < s.x1; ++x1)
    for (std::size_t x2 = 0; x2 < s.x2; ++x2)
      for (std::size_t y = 0; y < s.y; ++y)
        for (std::size_t y1 = 0; y1 < s.y1; ++y1)
          for (std::size_t y2 = 0; y2 < s.y2; ++y2) {
            const std::size_t in = x1 * s.x2 + x2;
            const double ps = side ? (*side)(in, y1) : 1.0;
            raw[(((in * s.y + y) * s.y1 + y1) * s.y2) + y2] =
                main(in, y) * ps * degrade(y * s.x2 + x2, y2);
          }
  return validate_channel(std::move(raw), s);
}

ChannelSpec product_channel(std::size_t size_x1, std::size_t size_x2, const ProbMatrix& dest,
                            const ProbMatrix& user1, const ProbMatrix& user2) {
  require_row_stochastic(dest, "destination kernel");
  require_row_stochastic(user1, "user1 kernel");
  require_row_stochastic(user2, "user2 kernel");
  const std::size_t inputs = size_x1 * size_x2;
  if (dest.rows != inputs || user1.rows != inputs || user2.rows != inputs) {
    fail(ErrorKind::DimensionMismatch, "product channel kernels must have |X1|*|X2| rows");
  }
  AlphabetSizes s{size_x1, size_x2, dest.cols, user1.cols, user2.cols};
  std::vector<double> raw(s.total(), 0.0);
  for (std::size_t in = 0; in < inputs; ++in)
    for (std::size_t y = 0; y < s.y; ++y)
      for (std::size_t y1 = 0; y1 < s.y1; ++y1)
        for (std::size_t y2 = 0; y2 < s.y2; ++y2)
          raw[(((in * s.y + y) * s.y1 + y1) * s.y2) + y2] = dest(in, y) * user1(in, y1) * user2(in, y2);
  return validate_channel(std::move(raw), s);
}

}  // namespace gmac
