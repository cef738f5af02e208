// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/wqo.hpp"

#include <algorithm>
#include <vector>

namespace ctlspec {

namespace {

// Maximum bipartite matching by augmenting paths. adj[i] lists the right
// nodes admissible for left node i.
class Matcher {
 public:
  explicit Matcher(std::size_t rights) : match_right_(rights, -1) {}

  bool augment(const std::vector<std::vector<int>>& adj, int left,
               std::vector<bool>& visited) {
    for (int r : adj[static_cast<std::size_t>(left)]) {
      if (visited[static_cast<std::size_t>(r)]) continue;
      visited[static_cast<std::size_t>(r)] = true;
      if (match_right_[static_cast<std::size_t>(r)] < 0 ||
          augment(adj, match_right_[static_cast<std::size_t>(r)], visited)) {
        match_right_[static_cast<std::size_t>(r)] = left;
        return true;
      }
    }
    return false;
  }

  bool perfect_for_lefts(const std::vector<std::vector<int>>& adj) {
    for (std::size_t i = 0; i < adj.size(); ++i) {
      std::vector<bool> visited(match_right_.size(), false);
      if (!augment(adj, static_cast<int>(i), visited)) return false;
    }
    return true;
  }

 private:
  std::vector<int> match_right_;
};

bool position_matching(const AtomicConstraint& a, const AtomicConstraint& b) {
  // Coefficient positions 0..k with position 0 the constant; absent
  // coefficients are zero and zero is below everything, so the position
  // range only needs to reach the largest variable either atom mentions.
  VarId top = -1;
  if (!a.term.coeffs.empty()) top = std::max(top, a.term.coeffs.rbegin()->first);
  if (!b.term.coeffs.empty()) top = std::max(top, b.term.coeffs.rbegin()->first);
  std::size_t n = static_cast<std::size_t>(top + 2);  // constant + vars
  auto at = [](const AtomicConstraint& x, std::size_t i) {
    return i == 0 ? abs_int(x.term.constant)
                  : abs_int(x.term.coeff(static_cast<VarId>(i - 1)));
  };
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(a, i) <= at(b, j)) adj[i].push_back(static_cast<int>(j));
  Matcher m(n);
  return m.perfect_for_lefts(adj);
}

}  // namespace

bool atomic_rel(FiringRelation rel, const AtomicConstraint& a,
                const AtomicConstraint& b) {
  switch (rel) {
    case FiringRelation::Always:
      return true;
    case FiringRelation::Maxcoeff:
      return a.op == b.op && maxcoeff(a) <= maxcoeff(b);
    case FiringRelation::Sumcoeff:
      return a.op == b.op && sumcoeff(a) <= sumcoeff(b);
    case FiringRelation::Homeocoeff:
      return a.op == b.op && position_matching(a, b);
  }
  return false;
}

bool fires(FiringRelation rel, const Constraint& c1, const Constraint& c2) {
  if (rel == FiringRelation::Always) return true;
  const auto& as = c1.atoms();
  const auto& bs = c2.atoms();
  if (rel == FiringRelation::Homeocoeff) {
    if (as.size() > bs.size()) return false;
    std::vector<std::vector<int>> adj(as.size());
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (atomic_rel(rel, as[i], bs[j])) adj[i].push_back(static_cast<int>(j));
    Matcher m(bs.size());
    return m.perfect_for_lefts(adj);
  }
  for (const auto& a : as) {
    bool below = false;
    for (const auto& b : bs) {
      if (atomic_rel(rel, a, b)) {
        below = true;
        break;
      }
    }
    if (!below) return false;
  }
  return true;
}

std::string to_string(FiringRelation rel) {
  switch (rel) {
    case FiringRelation::Always:
      return "always";
    case FiringRelation::Maxcoeff:
      return "maxcoeff";
    case FiringRelation::Sumcoeff:
      return "sumcoeff";
    case FiringRelation::Homeocoeff:
      return "homeocoeff";
  }
  return "?";
}

std::optional<FiringRelation> firing_from_string(std::string_view s) {
  if (s == "always") return FiringRelation::Always;
  if (s == "maxcoeff") return FiringRelation::Maxcoeff;
  if (s == "sumcoeff") return FiringRelation::Sumcoeff;
  if (s == "homeocoeff") return FiringRelation::Homeocoeff;
  return std::nullopt;
}

}  // namespace ctlspec
