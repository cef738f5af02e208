// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctlspec/numeric.hpp"

namespace ctlspec {

// Variables are dense indexes into a per-context variable table.
using VarId = std::int32_t;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atom polarity: p <= 0 or p < 0. Interpreted over the rationals.
enum class RelOp { NonStrict, Strict };

// q0 + q1*X1 + ... + qk*Xk with integer coefficients; zero coefficients are
// never stored.
struct LinearTerm {
  Int constant{};
  std::map<VarId, Int> coeffs;

  Int coeff(VarId v) const {
    auto it = coeffs.find(v);
    return it == coeffs.end() ? Int(0) : it->second;
  }
  void set_coeff(VarId v, Int c) {
    if (c == 0)
      coeffs.erase(v);
    else
      coeffs[v] = std::move(c);
  }
  void add(const LinearTerm& other, const Int& scale = Int(1));
  LinearTerm negated() const;
  bool is_constant() const { return coeffs.empty(); }
  Rat evaluate(const std::vector<Rat>& point) const;

  bool operator==(const LinearTerm& other) const = default;
};

// Total deterministic order: coefficients walked in ascending VarId
// (absent = 0), then the constant. Keeps canonical atom lists stable.
int compare(const LinearTerm& a, const LinearTerm& b);

struct AtomicConstraint {
  LinearTerm term;
  RelOp op = RelOp::NonStrict;

  bool operator==(const AtomicConstraint& other) const = default;
};

int compare(const AtomicConstraint& a, const AtomicConstraint& b);
inline bool atom_less(const AtomicConstraint& a, const AtomicConstraint& b) {
  return compare(a, b) < 0;
}

// Negation of an atom: not(p <= 0) is -p < 0, not(p < 0) is -p <= 0.
AtomicConstraint negate_atom(const AtomicConstraint& a);

// max |qi| / sum |qi| over the constant and all stored coefficients.
Int maxcoeff(const AtomicConstraint& a);
Int sumcoeff(const AtomicConstraint& a);

// A canonical conjunction of atomic constraints, or FALSE. Canonical form:
// each atom gcd-reduced, ground atoms folded away (unsatisfiable ground atoms
// collapse the whole conjunction to FALSE), atoms sorted and deduplicated.
// TRUE is the empty conjunction.
class Constraint {
 public:
  Constraint() = default;

  static Constraint truth() { return Constraint(); }
  static Constraint falsity() {
    Constraint c;
    c.false_ = true;
    return c;
  }
  // Canonicalizes the given atoms.
  static Constraint make(std::vector<AtomicConstraint> atoms);

  bool is_false() const { return false_; }
  bool is_true() const { return !false_ && atoms_.empty(); }
  const std::vector<AtomicConstraint>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  std::set<VarId> vars() const;
  VarId max_var() const;  // -1 when no variable occurs

  bool operator==(const Constraint& other) const = default;

 private:
  bool false_ = false;
  std::vector<AtomicConstraint> atoms_;
};

int compare(const Constraint& a, const Constraint& b);

// Gcd-reduces an atom. Returns nullopt for trivially true ground atoms;
// a ground FALSE atom comes back as the canonical 1 <= 0.
std::optional<AtomicConstraint> canonical_atom(AtomicConstraint a);

Constraint canonicalize(const Constraint& c);
Constraint conjoin(const Constraint& a, const Constraint& b);
Constraint conjoin(const Constraint& a, const AtomicConstraint& atom);

// Exact satisfiability over the rationals by Fourier-Motzkin elimination.
bool satisfiable(const Constraint& c);

// c entails d iff for every atom a of d, c /\ not(a) is unsatisfiable.
bool entails(const Constraint& c, const Constraint& d);
bool entails(const Constraint& c, const AtomicConstraint& a);

// Existential projection onto `keep`: eliminates all other variables in
// descending VarId order. Exact over the rationals.
Constraint project(const Constraint& c, const std::set<VarId>& keep);
Constraint project(const Constraint& c, const std::vector<VarId>& keep);

// Drops atoms entailed by the remaining ones; atoms are tested in the
// canonical sort order. Input must be satisfiable.
Constraint remove_redundant(const Constraint& c);

// Replaces every strict atom by its non-strict relaxation. For satisfiable c
// this is the topological closure.
Constraint closure(const Constraint& c);

// Closed convex hull of the union of two satisfiable constraints, computed on
// their closures by projecting the lifted sum encoding
//   x = z1 + z2,  A1 z1 <= l1 b1,  A2 z2 <= l2 b2,  l1 + l2 = 1,  l >= 0
// onto x. All output atoms are non-strict; the result is redundancy-free.
// Signals InvalidInput on an unsatisfiable operand.
Constraint convex_hull(const Constraint& c, const Constraint& d);

// Applies a variable substitution. `map` must cover every variable of c.
Constraint rename(const Constraint& c,
                  const std::function<VarId(VarId)>& map);

// Renames `from[i]` to `to[i]` positionally; other variables must not occur.
Constraint rename_tuple(const Constraint& c, const std::vector<VarId>& from,
                        const std::vector<VarId>& to);

bool evaluate(const AtomicConstraint& a, const std::vector<Rat>& point);
bool evaluate(const Constraint& c, const std::vector<Rat>& point);

std::string to_string(const LinearTerm& t,
                      const std::function<std::string(VarId)>& name);
std::string to_string(const AtomicConstraint& a,
                      const std::function<std::string(VarId)>& name);
std::string to_string(const Constraint& c,
                      const std::function<std::string(VarId)>& name);
// Default variable names X1, X2, ...
std::string to_string(const Constraint& c);

}  // namespace ctlspec
