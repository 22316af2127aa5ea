#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmac/channel.hpp"
#include "gmac/prob.hpp"

namespace gmac {

// Largest dense joint table the engine will allocate.
inline constexpr std::size_t kMaxJointEntries = 10'000'000;

struct Variable {
  std::string name;
  std::size_t size = 1;
};

// Dense joint distribution over named discrete variables, row-major with the
// first variable varying slowest.
class JointPMF {
 public:
  JointPMF(std::vector<Variable> variables, std::vector<double> prob);

  const std::vector<Variable>& variables() const { return vars_; }
  std::span<const double> table() const { return prob_; }

  // Throws UnknownVariable.
  std::size_t position(std::string_view name) const;
  bool has(std::string_view name) const;

  // Marginal table over the given variable positions (any order, duplicates
  // ignored); the result is laid out in the joint's variable order.
  std::vector<double> marginal(std::vector<std::size_t> positions) const;

  // Joint entropy H(vars) in bits.
  double joint_entropy(const std::vector<std::size_t>& positions) const;

 private:
  std::vector<Variable> vars_;
  std::vector<double> prob_;
};

using VarSet = std::vector<std::string>;

// H(targets | given) in bits. Sets are interpreted as sets: overlap between
// targets and given is allowed and simply contributes nothing.
double entropy(const JointPMF& joint, const VarSet& targets, const VarSet& given = {});

// I(a; b | given) in bits, computed from entropy differences and clamped at
// zero. I(A;A) = H(A).
double mutual_information(const JointPMF& joint, const VarSet& a, const VarSet& b,
                          const VarSet& given = {});

// Same quantity before the clamp, for nonnegativity checks.
double mutual_information_unclamped(const JointPMF& joint, const VarSet& a, const VarSet& b,
                                    const VarSet& given = {});

// ---------------------------------------------------------------------------
// Factored input distributions ("schemes").

// p(q, x2) p(u | q) p(x1 | u)
struct SchemeOneSet {
  ProbMatrix q_x2;        // |Q| x |X2|, sums to one
  ProbMatrix u_given_q;   // |Q| x |U|
  ProbMatrix x1_given_u;  // |U| x |X1|

  std::size_t q_card() const { return q_x2.rows; }
  std::size_t u_card() const { return u_given_q.cols; }
  void validate() const;
};

// p(q, x2) p(u | q) p(x1 | u) p(v | q)
struct SchemeOneSetOuter {
  SchemeOneSet base;
  ProbMatrix v_given_q;  // |Q| x |V|

  std::size_t v_card() const { return v_given_q.cols; }
  void validate() const;
};

// p(q) p(u | q) p(x1 | u) p(v | q) p(x2 | v)
struct SchemeTwoSet {
  std::vector<double> q;
  ProbMatrix u_given_q;
  ProbMatrix x1_given_u;
  ProbMatrix v_given_q;
  ProbMatrix x2_given_v;

  std::size_t q_card() const { return q.size(); }
  std::size_t u_card() const { return u_given_q.cols; }
  std::size_t v_card() const { return v_given_q.cols; }
  void validate() const;
};

// p(q, x2) p(x1 | q)
struct SchemeDegraded {
  ProbMatrix q_x2;
  ProbMatrix x1_given_q;

  std::size_t q_card() const { return q_x2.rows; }
  void validate() const;
};

// The degraded scheme seen as a one-set scheme with U = X1 given Q, i.e. the
// auxiliary is the input itself (|U| = |X1|, p(x1|u) the identity).
SchemeOneSet as_one_set(const SchemeDegraded& scheme);

// Joint over (Q, U, X1, X2, Y, Y2); Y1 is summed out.
JointPMF assemble_joint_one_set(const SchemeOneSet& scheme, const ChannelSpec& channel);
// Joint over (Q, U, V, X1, X2, Y, Y2).
JointPMF assemble_joint_outer(const SchemeOneSetOuter& scheme, const ChannelSpec& channel);
// Joint over (Q, U, V, X1, X2, Y, Y1, Y2).
JointPMF assemble_joint_two_set(const SchemeTwoSet& scheme, const ChannelSpec& channel);
// Joint over (Q, X1, X2, Y, Y2).
JointPMF assemble_joint_degraded(const SchemeDegraded& scheme, const ChannelSpec& channel);

}  // namespace gmac
