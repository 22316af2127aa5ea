#include "gmac/infotheory.hpp"

#include <algorithm>
#include <cmath>

#include "gmac/error.hpp"

namespace gmac {

JointPMF::JointPMF(std::vector<Variable> variables, std::vector<double> prob)
    : vars_(std::move(variables)), prob_(std::move(prob)) {
  std::size_t total = 1;
  for (const auto& v : vars_) {
    if (v.size == 0) fail(ErrorKind::DimensionMismatch, "joint: variable " + v.name + " has size 0");
    if (total > kMaxJointEntries / v.size) {
      fail(ErrorKind::EnumerationTooLarge, "joint: table exceeds the dense size guard");
    }
    total *= v.size;
  }
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name) {
        fail(ErrorKind::InvalidInput, "joint: duplicate variable " + vars_[i].name);
      }
  if (prob_.size() != total) fail(ErrorKind::DimensionMismatch, "joint: table size mismatch");
  require_distribution(prob_, "joint distribution");
}

std::size_t JointPMF::position(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  fail(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

bool JointPMF::has(std::string_view name) const {
  return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.name == name; });
}

std::vector<double> JointPMF::marginal(std::vector<std::size_t> positions) const {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  const std::size_t k = vars_.size();

  // Stride of each joint variable inside the marginal table (0 if summed out).
  std::vector<std::size_t> mstride(k, 0);
  std::size_t msize = 1;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    if (*it >= k) fail(ErrorKind::UnknownVariable, "variable position out of range");
    mstride[*it] = msize;
    msize *= vars_[*it].size;
  }

  std::vector<double> out(msize, 0.0);
  std::vector<std::size_t> idx(k, 0);
  std::size_t m = 0;
  for (double p : prob_) {
    out[m] += p;
    // Odometer increment, last variable fastest.
    for (std::size_t d = k; d-- > 0;) {
      if (++idx[d] < vars_[d].size) {
        m += mstride[d];
        break;
      }
      m -= mstride[d] * (vars_[d].size - 1);
      idx[d] = 0;
    }
  }
  return out;
}

double JointPMF::joint_entropy(const std::vector<std::size_t>& positions) const {
  if (positions.empty()) return 0.0;
  double h = 0.0;
  for (double p : marginal(positions)) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

namespace {

std::vector<std::size_t> positions_of(const JointPMF& joint, const VarSet& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(joint.position(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> merge(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

double entropy(const JointPMF& joint, const VarSet& targets, const VarSet& given) {
  const auto t = positions_of(joint, targets);
  const auto g = positions_of(joint, given);
  const double h = joint.joint_entropy(merge(t, g)) - joint.joint_entropy(g);
  return std::max(0.0, h);
}

double mutual_information_unclamped(const JointPMF& joint, const VarSet& a, const VarSet& b,
                                    const VarSet& given) {
  const auto pa = positions_of(joint, a);
  const auto pb = positions_of(joint, b);
  const auto pg = positions_of(joint, given);
  const auto ag = merge(pa, pg);
  const auto bg = merge(pb, pg);
  const auto abg = merge(ag, pb);
  return joint.joint_entropy(ag) + joint.joint_entropy(bg) - joint.joint_entropy(abg) -
         joint.joint_entropy(pg);
}

double mutual_information(const JointPMF& joint, const VarSet& a, const VarSet& b,
                          const VarSet& given) {
  return std::max(0.0, mutual_information_unclamped(joint, a, b, given));
}

// ---------------------------------------------------------------------------

void SchemeOneSet::validate() const {
  require_joint(q_x2, "p(q,x2)");
  require_row_stochastic(u_given_q, "p(u|q)");
  require_row_stochastic(x1_given_u, "p(x1|u)");
  if (u_given_q.rows != q_x2.rows) fail(ErrorKind::DimensionMismatch, "p(u|q) rows must equal |Q|");
  if (x1_given_u.rows != u_given_q.cols) {
    fail(ErrorKind::DimensionMismatch, "p(x1|u) rows must equal |U|");
  }
}

void SchemeOneSetOuter::validate() const {
  base.validate();
  require_row_stochastic(v_given_q, "p(v|q)");
  if (v_given_q.rows != base.q_card()) fail(ErrorKind::DimensionMismatch, "p(v|q) rows must equal |Q|");
}

void SchemeTwoSet::validate() const {
  require_distribution(q, "p(q)");
  require_row_stochastic(u_given_q, "p(u|q)");
  require_row_stochastic(x1_given_u, "p(x1|u)");
  require_row_stochastic(v_given_q, "p(v|q)");
  require_row_stochastic(x2_given_v, "p(x2|v)");
  if (u_given_q.rows != q.size() || v_given_q.rows != q.size()) {
    fail(ErrorKind::DimensionMismatch, "p(u|q) and p(v|q) rows must equal |Q|");
  }
  if (x1_given_u.rows != u_given_q.cols) fail(ErrorKind::DimensionMismatch, "p(x1|u) rows must equal |U|");
  if (x2_given_v.rows != v_given_q.cols) fail(ErrorKind::DimensionMismatch, "p(x2|v) rows must equal |V|");
}

void SchemeDegraded::validate() const {
  require_joint(q_x2, "p(q,x2)");
  require_row_stochastic(x1_given_q, "p(x1|q)");
  if (x1_given_q.rows != q_x2.rows) fail(ErrorKind::DimensionMismatch, "p(x1|q) rows must equal |Q|");
}

SchemeOneSet as_one_set(const SchemeDegraded& scheme) {
  const std::size_t nx1 = scheme.x1_given_q.cols;
  return SchemeOneSet{scheme.q_x2, scheme.x1_given_q, ProbMatrix::identity(nx1)};
}

namespace {

void require_inputs(std::size_t x1, std::size_t x2, const ChannelSpec& channel) {
  if (x1 != channel.sizes().x1 || x2 != channel.sizes().x2) {
    fail(ErrorKind::DimensionMismatch, "scheme input alphabets do not match the channel");
  }
}

// p(y, y2 | x1, x2) with Y1 summed out; rows x1 * |X2| + x2, cols y * |Y2| + y2.
ProbMatrix destination_wiretap_pair(const ChannelSpec& channel) {
  const auto& s = channel.sizes();
  ProbMatrix pair(s.inputs(), s.y * s.y2);
  for (std::size_t in = 0; in < s.inputs(); ++in)
    for (std::size_t y = 0; y < s.y; ++y)
      for (std::size_t y1 = 0; y1 < s.y1; ++y1)
        for (std::size_t y2 = 0; y2 < s.y2; ++y2)
          pair(in, y * s.y2 + y2) += channel.p(in / s.x2, in % s.x2, y, y1, y2);
  return pair;
}

}  // namespace

JointPMF assemble_joint_one_set(const SchemeOneSet& scheme, const ChannelSpec& channel) {
  scheme.validate();
  const auto& s = channel.sizes();
  require_inputs(scheme.x1_given_u.cols, scheme.q_x2.cols, channel);
  const std::size_t nq = scheme.q_card(), nu = scheme.u_card();
  const ProbMatrix pair = destination_wiretap_pair(channel);
  const std::size_t nout = s.y * s.y2;

  std::vector<double> prob(nq * nu * s.x1 * s.x2 * nout, 0.0);
  std::size_t f = 0;
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t x1 = 0; x1 < s.x1; ++x1)
        for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
          const double w = scheme.q_x2(q, x2) * scheme.u_given_q(q, u) * scheme.x1_given_u(u, x1);
          const auto row = pair.row(x1 * s.x2 + x2);
          for (std::size_t o = 0; o < nout; ++o) prob[f++] = w * row[o];
        }
  return JointPMF({{"Q", nq}, {"U", nu}, {"X1", s.x1}, {"X2", s.x2}, {"Y", s.y}, {"Y2", s.y2}},
                  std::move(prob));
}

JointPMF assemble_joint_outer(const SchemeOneSetOuter& scheme, const ChannelSpec& channel) {
  scheme.validate();
  const auto& s = channel.sizes();
  const auto& b = scheme.base;
  require_inputs(b.x1_given_u.cols, b.q_x2.cols, channel);
  const std::size_t nq = b.q_card(), nu = b.u_card(), nv = scheme.v_card();
  const ProbMatrix pair = destination_wiretap_pair(channel);
  const std::size_t nout = s.y * s.y2;

  std::vector<double> prob(nq * nu * nv * s.x1 * s.x2 * nout, 0.0);
  std::size_t f = 0;
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t x1 = 0; x1 < s.x1; ++x1)
          for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
            const double w = b.q_x2(q, x2) * b.u_given_q(q, u) * b.x1_given_u(u, x1) *
                             scheme.v_given_q(q, v);
            const auto row = pair.row(x1 * s.x2 + x2);
            for (std::size_t o = 0; o < nout; ++o) prob[f++] = w * row[o];
          }
  return JointPMF({{"Q", nq}, {"U", nu}, {"V", nv}, {"X1", s.x1}, {"X2", s.x2}, {"Y", s.y}, {"Y2", s.y2}},
                  std::move(prob));
}

JointPMF assemble_joint_two_set(const SchemeTwoSet& scheme, const ChannelSpec& channel) {
  scheme.validate();
  const auto& s = channel.sizes();
  require_inputs(scheme.x1_given_u.cols, scheme.x2_given_v.cols, channel);
  const std::size_t nq = scheme.q_card(), nu = scheme.u_card(), nv = scheme.v_card();
  const std::size_t nout = s.outputs();
  const auto table = channel.table();

  std::vector<double> prob(nq * nu * nv * s.x1 * s.x2 * nout, 0.0);
  std::size_t f = 0;
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t x1 = 0; x1 < s.x1; ++x1)
          for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
            const double w = scheme.q[q] * scheme.u_given_q(q, u) * scheme.x1_given_u(u, x1) *
                             scheme.v_given_q(q, v) * scheme.x2_given_v(v, x2);
            const std::size_t base = (x1 * s.x2 + x2) * nout;
            for (std::size_t o = 0; o < nout; ++o) prob[f++] = w * table[base + o];
          }
  return JointPMF({{"Q", nq}, {"U", nu}, {"V", nv}, {"X1", s.x1}, {"X2", s.x2},
                   {"Y", s.y}, {"Y1", s.y1}, {"Y2", s.y2}},
                  std::move(prob));
}

JointPMF assemble_joint_degraded(const SchemeDegraded& scheme, const ChannelSpec& channel) {
  scheme.validate();
  const auto& s = channel.sizes();
  require_inputs(scheme.x1_given_q.cols, scheme.q_x2.cols, channel);
  const std::size_t nq = scheme.q_card();
  const ProbMatrix pair = destination_wiretap_pair(channel);
  const std::size_t nout = s.y * s.y2;

  std::vector<double> prob(nq * s.x1 * s.x2 * nout, 0.0);
  std::size_t f = 0;
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t x1 = 0; x1 < s.x1; ++x1)
      for (std::size_t x2 = 0; x2 < s.x2; ++x2) {
        const double w = scheme.q_x2(q, x2) * scheme.x1_given_q(q, x1);
        const auto row = pair.row(x1 * s.x2 + x2);
        for (std::size_t o = 0; o < nout; ++o) prob[f++] = w * row[o];
      }
  return JointPMF({{"Q", nq}, {"X1", s.x1}, {"X2", s.x2}, {"Y", s.y}, {"Y2", s.y2}}, std::move(prob));
}

}  // namespace gmac
