// Copyright (c) ctlspec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "ctlspec/constraint.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ctlspec {

void LinearTerm::add(const LinearTerm& other, const Int& scale) {
  if (scale == 0) return;
  constant += other.constant * scale;
  for (const auto& [v, c] : other.coeffs) {
    Int next = coeff(v) + c * scale;
    set_coeff(v, std::move(next));
  }
}

LinearTerm LinearTerm::negated() const {
  LinearTerm t;
  t.constant = -constant;
  for (const auto& [v, c] : coeffs) t.coeffs.emplace(v, -c);
  return t;
}

Rat LinearTerm::evaluate(const std::vector<Rat>& point) const {
  Rat sum(constant);
  for (const auto& [v, c] : coeffs) {
    assert(v >= 0 && static_cast<std::size_t>(v) < point.size());
    sum += Rat(c) * point[static_cast<std::size_t>(v)];
  }
  return sum;
}

int compare(const LinearTerm& a, const LinearTerm& b) {
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  while (ia != a.coeffs.end() || ib != b.coeffs.end()) {
    VarId va = ia == a.coeffs.end() ? std::numeric_limits<VarId>::max() : ia->first;
    VarId vb = ib == b.coeffs.end() ? std::numeric_limits<VarId>::max() : ib->first;
    // The atom whose next stored coefficient sits on a smaller VarId is
    // compared against an implicit zero on the other side.
    VarId v = std::min(va, vb);
    const Int za(0);
    const Int& ca = va == v ? ia->second : za;
    const Int& cb = vb == v ? ib->second : za;
    if (ca != cb) return ca < cb ? -1 : 1;
    if (va == v) ++ia;
    if (vb == v) ++ib;
  }
  if (a.constant != b.constant) return a.constant < b.constant ? -1 : 1;
  return 0;
}

int compare(const AtomicConstraint& a, const AtomicConstraint& b) {
  if (a.op != b.op) return a.op == RelOp::NonStrict ? -1 : 1;
  return compare(a.term, b.term);
}

AtomicConstraint negate_atom(const AtomicConstraint& a) {
  return {a.term.negated(),
          a.op == RelOp::NonStrict ? RelOp::Strict : RelOp::NonStrict};
}

Int maxcoeff(const AtomicConstraint& a) {
  Int m = abs_int(a.term.constant);
  for (const auto& [v, c] : a.term.coeffs) m = std::max(m, abs_int(c));
  return m;
}

Int sumcoeff(const AtomicConstraint& a) {
  Int s = abs_int(a.term.constant);
  for (const auto& [v, c] : a.term.coeffs) s += abs_int(c);
  return s;
}

std::optional<AtomicConstraint> canonical_atom(AtomicConstraint a) {
  if (a.term.is_constant()) {
    bool holds = a.op == RelOp::NonStrict ? a.term.constant <= 0
                                          : a.term.constant < 0;
    if (holds) return std::nullopt;
    AtomicConstraint fail;
    fail.term.constant = 1;
    fail.op = RelOp::NonStrict;
    return fail;
  }
  Int g = abs_int(a.term.constant);
  for (const auto& [v, c] : a.term.coeffs) g = gcd_int(g, c);
  if (g > 1) {
    a.term.constant /= g;
    for (auto& [v, c] : a.term.coeffs) c /= g;
  }
  return a;
}

namespace {

bool ground_false(const AtomicConstraint& a) {
  return a.term.is_constant() &&
         (a.op == RelOp::NonStrict ? a.term.constant > 0
                                   : a.term.constant >= 0);
}

// Sorted union of two ancestor index sets.
std::vector<int> merge_hist(const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Working atom set for canonicalization and Fourier-Motzkin steps. Atoms with
// identical coefficient vectors are collapsed to the single tightest bound,
// which keeps intermediate systems small without changing the solution set.
// Each atom carries the set of input atoms it was derived from: after k
// pairwise elimination rounds, a derived atom combining more than k+1 inputs
// is redundant (Kohler's criterion) and is dropped to curb fill-in.
class AtomSet {
 public:
  bool contradiction = false;
  int eliminated = 0;

  void add(AtomicConstraint a, std::vector<int> hist) {
    if (contradiction) return;
    if (static_cast<int>(hist.size()) > eliminated + 1) return;  // redundant
    auto canon = canonical_atom(std::move(a));
    if (!canon) return;
    if (ground_false(*canon)) {
      contradiction = true;
      return;
    }
    auto key = canon->term.coeffs;
    auto [it, inserted] =
        tightest_.try_emplace(std::move(key), Entry{*canon, std::move(hist)});
    if (inserted) return;
    // Same coefficient vector: keep the single tighter bound. Larger constant
    // means a smaller upper bound on the variable part; ties favor strict,
    // then the shorter derivation.
    Entry& old = it->second;
    int cmp = canon->term.constant > old.atom.term.constant   ? 1
              : canon->term.constant < old.atom.term.constant ? -1
              : canon->op == old.atom.op                      ? 0
              : canon->op == RelOp::Strict                    ? 1
                                                              : -1;
    if (cmp > 0 || (cmp == 0 && hist.size() < old.hist.size())) {
      old.atom = *canon;
      old.hist = std::move(hist);
    }
  }

  std::vector<AtomicConstraint> materialize() const {
    std::vector<AtomicConstraint> out;
    out.reserve(tightest_.size());
    for (const auto& [key, e] : tightest_) out.push_back(e.atom);
    std::sort(out.begin(), out.end(), atom_less);
    return out;
  }

  // Eliminates v. When v occurs in an equation (a nonstrict atom stored with
  // its exact negation), the equation is solved for v and substituted: the
  // result is the same solution set with none of the pairwise fill-in.
  // Otherwise every pair of a lower and an upper bound on v is combined with
  // positive multipliers; a strict parent makes the combination strict.
  AtomSet eliminate(VarId v) const {
    for (const auto& [key, e] : tightest_) {
      Int q = e.atom.term.coeff(v);
      if (q == 0 || e.atom.op != RelOp::NonStrict) continue;
      auto it = tightest_.find(e.atom.term.negated().coeffs);
      if (it == tightest_.end() || it->second.atom.op != RelOp::NonStrict ||
          it->second.atom.term.constant != -e.atom.term.constant)
        continue;
      // q*v + r = 0; scale each atom by |q| and cancel v. The equation
      // halves themselves reduce to 0 <= 0 and vanish. Substitution yields
      // an equivalent system, so derivation histories restart here.
      const LinearTerm& eq = q > 0 ? e.atom.term : it->second.atom.term;
      Int scale = abs_int(q);
      AtomSet next;
      int fresh = 0;
      for (const auto& [k2, e2] : tightest_) {
        Int s = e2.atom.term.coeff(v);
        if (s == 0) {
          next.add(e2.atom, {fresh++});
        } else {
          AtomicConstraint n;
          n.term = e2.atom.term;
          for (auto& [var, co] : n.term.coeffs) co *= scale;
          n.term.constant *= scale;
          n.term.add(eq, -s);
          n.op = e2.atom.op;
          next.add(std::move(n), {fresh++});
        }
        if (next.contradiction) break;
      }
      return next;
    }
    AtomSet next;
    next.eliminated = eliminated + 1;
    std::vector<const Entry*> lowers, uppers;
    for (const auto& [key, e] : tightest_) {
      Int c = e.atom.term.coeff(v);
      if (c == 0)
        next.add(e.atom, e.hist);
      else if (c > 0)
        uppers.push_back(&e);
      else
        lowers.push_back(&e);
    }
    for (const auto* lo : lowers) {
      if (next.contradiction) break;
      Int a = -lo->atom.term.coeff(v);  // positive
      for (const auto* up : uppers) {
        Int b = up->atom.term.coeff(v);  // positive
        AtomicConstraint combined;
        combined.term = lo->atom.term;
        for (auto& [var, c] : combined.term.coeffs) c *= b;
        combined.term.constant *= b;
        combined.term.add(up->atom.term, a);
        combined.op =
            (lo->atom.op == RelOp::Strict || up->atom.op == RelOp::Strict)
                ? RelOp::Strict
                : RelOp::NonStrict;
        next.add(std::move(combined), merge_hist(lo->hist, up->hist));
        if (next.contradiction) break;
      }
    }
    return next;
  }

  std::set<VarId> vars() const {
    std::set<VarId> out;
    for (const auto& [key, e] : tightest_)
      for (const auto& [v, c] : e.atom.term.coeffs) out.insert(v);
    return out;
  }

  // Fill-in estimate for eliminating v: negative when an equation lets v be
  // substituted away, otherwise the growth from pairwise combination.
  long long fill_score(VarId v) const {
    long long lo = 0, up = 0;
    for (const auto& [key, e] : tightest_) {
      Int q = e.atom.term.coeff(v);
      if (q == 0) continue;
      if (e.atom.op == RelOp::NonStrict) {
        auto it = tightest_.find(e.atom.term.negated().coeffs);
        if (it != tightest_.end() && it->second.atom.op == RelOp::NonStrict &&
            it->second.atom.term.constant == -e.atom.term.constant)
          return -1;
      }
      (q > 0 ? up : lo) += 1;
    }
    return lo * up - lo - up;
  }

 private:
  struct Entry {
    AtomicConstraint atom;
    std::vector<int> hist;
  };
  std::map<std::map<VarId, Int>, Entry> tightest_;
};

// Greedy min-fill choice among candidate variables; candidates is nonempty.
VarId pick_victim(const AtomSet& s, const std::set<VarId>& candidates) {
  VarId victim = *candidates.begin();
  long long best = s.fill_score(victim);
  for (VarId v : candidates) {
    long long score = s.fill_score(v);
    if (score < best) {
      best = score;
      victim = v;
    }
  }
  return victim;
}

AtomSet atom_set_of(const Constraint& c) {
  AtomSet s;
  int i = 0;
  for (const auto& a : c.atoms()) {
    s.add(a, {i++});
    if (s.contradiction) break;
  }
  return s;
}

}  // namespace

Constraint Constraint::make(std::vector<AtomicConstraint> atoms) {
  std::vector<AtomicConstraint> kept;
  kept.reserve(atoms.size());
  for (auto& a : atoms) {
    auto canon = canonical_atom(std::move(a));
    if (!canon) continue;
    if (ground_false(*canon)) return falsity();
    kept.push_back(std::move(*canon));
  }
  std::sort(kept.begin(), kept.end(), atom_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  Constraint c;
  c.atoms_ = std::move(kept);
  return c;
}

std::set<VarId> Constraint::vars() const {
  std::set<VarId> out;
  for (const auto& a : atoms_)
    for (const auto& [v, c] : a.term.coeffs) out.insert(v);
  return out;
}

VarId Constraint::max_var() const {
  VarId m = -1;
  for (const auto& a : atoms_)
    if (!a.term.coeffs.empty()) m = std::max(m, a.term.coeffs.rbegin()->first);
  return m;
}

int compare(const Constraint& a, const Constraint& b) {
  if (a.is_false() != b.is_false()) return a.is_false() ? -1 : 1;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.atoms()[i], b.atoms()[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Constraint canonicalize(const Constraint& c) {
  if (c.is_false()) return c;
  return Constraint::make(c.atoms());
}

Constraint conjoin(const Constraint& a, const Constraint& b) {
  if (a.is_false() || b.is_false()) return Constraint::falsity();
  std::vector<AtomicConstraint> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return Constraint::make(std::move(atoms));
}

Constraint conjoin(const Constraint& a, const AtomicConstraint& atom) {
  if (a.is_false()) return a;
  std::vector<AtomicConstraint> atoms = a.atoms();
  atoms.push_back(atom);
  return Constraint::make(std::move(atoms));
}

bool satisfiable(const Constraint& c) {
  if (c.is_false()) return false;
  AtomSet s = atom_set_of(c);
  while (!s.contradiction) {
    auto vs = s.vars();
    if (vs.empty()) break;
    s = s.eliminate(pick_victim(s, vs));
  }
  return !s.contradiction;
}

bool entails(const Constraint& c, const AtomicConstraint& a) {
  if (c.is_false()) return true;
  return !satisfiable(conjoin(c, negate_atom(a)));
}

bool entails(const Constraint& c, const Constraint& d) {
  if (c.is_false()) return true;
  if (d.is_false()) return !satisfiable(c);
  for (const auto& a : d.atoms())
    if (!entails(c, a)) return false;
  return true;
}

static Constraint project_impl(const Constraint& c,
                               const std::set<VarId>& keep) {
  if (c.is_false()) return c;
  AtomSet s = atom_set_of(c);
  while (!s.contradiction) {
    std::set<VarId> candidates;
    for (VarId v : s.vars())
      if (!keep.count(v)) candidates.insert(v);
    if (candidates.empty()) break;
    s = s.eliminate(pick_victim(s, candidates));
  }
  if (s.contradiction) return Constraint::falsity();
  return Constraint::make(s.materialize());
}

Constraint project(const Constraint& c, const std::set<VarId>& keep) {
  return project_impl(c, keep);
}

Constraint project(const Constraint& c, const std::vector<VarId>& keep) {
  return project_impl(c, std::set<VarId>(keep.begin(), keep.end()));
}

Constraint remove_redundant(const Constraint& c) {
  if (c.is_false() || c.is_true()) return c;
  std::vector<AtomicConstraint> atoms = canonicalize(c).atoms();
  std::vector<bool> removed(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<AtomicConstraint> rest;
    rest.reserve(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (j != i && !removed[j]) rest.push_back(atoms[j]);
    if (entails(Constraint::make(std::move(rest)), atoms[i]))
      removed[i] = true;
  }
  std::vector<AtomicConstraint> kept;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (!removed[i]) kept.push_back(atoms[i]);
  return Constraint::make(std::move(kept));
}

Constraint closure(const Constraint& c) {
  if (c.is_false()) return c;
  std::vector<AtomicConstraint> atoms = c.atoms();
  for (auto& a : atoms) a.op = RelOp::NonStrict;
  return Constraint::make(std::move(atoms));
}

namespace {

// t := q*t - s*row where q is row's (positive) coefficient on v and s is t's;
// clears v from t. A positive q preserves inequality direction.
void clear_var(LinearTerm& t, VarId v, const LinearTerm& row) {
  Int s = t.coeff(v);
  if (s == 0) return;
  Int q = row.coeff(v);
  for (auto& [var, co] : t.coeffs) co *= q;
  t.constant *= q;
  t.add(row, -s);
}

void gcd_reduce_term(LinearTerm& t) {
  Int g = abs_int(t.constant);
  for (const auto& [v, q] : t.coeffs) g = g == 0 ? abs_int(q) : gcd_int(g, q);
  if (g > 1) {
    t.constant /= g;
    for (auto& [v, q] : t.coeffs) q /= g;
  }
}

// Canonical minimized representation of a satisfiable closed polyhedron.
// Every implicit equality is made explicit, the equation system is brought to
// reduced echelon form with ascending pivot variables, the pivots are
// substituted out of the inequalities, and redundant inequalities dropped.
// The remaining coordinates carry a full-dimensional polyhedron whose facet
// representation is unique, so equal polyhedra come out atom-identical no
// matter how they were produced.
Constraint canonical_polyhedron(const Constraint& c) {
  if (c.is_false() || c.is_true()) return c;
  std::vector<LinearTerm> rows;
  std::vector<AtomicConstraint> ineqs;
  for (const auto& a : c.atoms()) {
    if (entails(c, AtomicConstraint{a.term.negated(), RelOp::NonStrict}))
      rows.push_back(a.term);
    else
      ineqs.push_back(a);
  }
  // Forward elimination; pivot is the lowest variable of each row.
  std::vector<std::pair<VarId, LinearTerm>> basis;
  for (LinearTerm row : rows) {
    for (const auto& [pv, prow] : basis) clear_var(row, pv, prow);
    if (row.coeffs.empty()) continue;  // dependent equation
    if (row.coeffs.begin()->second < 0) row = row.negated();
    gcd_reduce_term(row);
    basis.emplace_back(row.coeffs.begin()->first, row);
  }
  std::sort(basis.begin(), basis.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Back substitution for the unique reduced form.
  for (std::size_t k = basis.size(); k-- > 0;) {
    for (std::size_t j = 0; j < k; ++j) {
      clear_var(basis[j].second, basis[k].first, basis[k].second);
      gcd_reduce_term(basis[j].second);
    }
  }
  std::vector<AtomicConstraint> out;
  for (const auto& [pv, row] : basis) {
    out.push_back({row, RelOp::NonStrict});
    out.push_back({row.negated(), RelOp::NonStrict});
  }
  for (AtomicConstraint a : ineqs) {
    for (const auto& [pv, prow] : basis) clear_var(a.term, pv, prow);
    out.push_back(std::move(a));
  }
  return remove_redundant(Constraint::make(std::move(out)));
}

}  // namespace

Constraint convex_hull(const Constraint& c, const Constraint& d) {
  if (!satisfiable(c) || !satisfiable(d))
    throw InvalidInput("convex_hull: unsatisfiable operand");
  Constraint cc = closure(c);
  Constraint dc = closure(d);

  std::set<VarId> varset = cc.vars();
  for (VarId v : dc.vars()) varset.insert(v);
  std::vector<VarId> vars(varset.begin(), varset.end());
  VarId base = 0;
  for (VarId v : vars) base = std::max(base, v + 1);
  const auto n = static_cast<VarId>(vars.size());
  auto z1 = [&](std::size_t i) { return base + static_cast<VarId>(i); };
  auto z2 = [&](std::size_t i) { return base + n + static_cast<VarId>(i); };
  const VarId l1 = base + 2 * n;
  const VarId l2 = base + 2 * n + 1;

  std::vector<AtomicConstraint> sys;
  // x_v = z1_v + z2_v
  for (std::size_t i = 0; i < vars.size(); ++i) {
    LinearTerm t;
    t.set_coeff(vars[i], 1);
    t.set_coeff(z1(i), -1);
    t.set_coeff(z2(i), -1);
    sys.push_back({t, RelOp::NonStrict});
    sys.push_back({t.negated(), RelOp::NonStrict});
  }
  // Homogenized operands: q0*l + sum qi*z_i <= 0.
  auto homogenize = [&](const Constraint& op, VarId lambda,
                        const std::function<VarId(std::size_t)>& z) {
    for (const auto& a : op.atoms()) {
      LinearTerm t;
      t.set_coeff(lambda, a.term.constant);
      for (const auto& [v, coef] : a.term.coeffs) {
        auto it = std::lower_bound(vars.begin(), vars.end(), v);
        t.set_coeff(z(static_cast<std::size_t>(it - vars.begin())), coef);
      }
      sys.push_back({t, RelOp::NonStrict});
    }
  };
  homogenize(cc, l1, z1);
  homogenize(dc, l2, z2);
  // l1 + l2 = 1, l1 >= 0, l2 >= 0
  {
    LinearTerm t;
    t.constant = -1;
    t.set_coeff(l1, 1);
    t.set_coeff(l2, 1);
    sys.push_back({t, RelOp::NonStrict});
    sys.push_back({t.negated(), RelOp::NonStrict});
    LinearTerm n1;
    n1.set_coeff(l1, -1);
    sys.push_back({n1, RelOp::NonStrict});
    LinearTerm n2;
    n2.set_coeff(l2, -1);
    sys.push_back({n2, RelOp::NonStrict});
  }
  Constraint lifted = Constraint::make(std::move(sys));
  Constraint hull = project(lifted, varset);
  return canonical_polyhedron(hull);
}

Constraint rename(const Constraint& c,
                  const std::function<VarId(VarId)>& map) {
  if (c.is_false()) return c;
  std::vector<AtomicConstraint> atoms;
  atoms.reserve(c.size());
  for (const auto& a : c.atoms()) {
    AtomicConstraint r;
    r.op = a.op;
    r.term.constant = a.term.constant;
    for (const auto& [v, coef] : a.term.coeffs) {
      VarId w = map(v);
      r.term.set_coeff(w, r.term.coeff(w) + coef);
    }
    atoms.push_back(std::move(r));
  }
  return Constraint::make(std::move(atoms));
}

Constraint rename_tuple(const Constraint& c, const std::vector<VarId>& from,
                        const std::vector<VarId>& to) {
  assert(from.size() == to.size());
  std::map<VarId, VarId> m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
  return rename(c, [&](VarId v) {
    auto it = m.find(v);
    if (it == m.end()) throw InvalidInput("rename_tuple: unmapped variable");
    return it->second;
  });
}

bool evaluate(const AtomicConstraint& a, const std::vector<Rat>& point) {
  Rat v = a.term.evaluate(point);
  return a.op == RelOp::NonStrict ? v <= 0 : v < 0;
}

bool evaluate(const Constraint& c, const std::vector<Rat>& point) {
  if (c.is_false()) return false;
  for (const auto& a : c.atoms())
    if (!evaluate(a, point)) return false;
  return true;
}

std::string to_string(const LinearTerm& t,
                      const std::function<std::string(VarId)>& name) {
  std::ostringstream os;
  bool first = true;
  if (t.constant != 0 || t.coeffs.empty()) {
    os << t.constant.str();
    first = false;
  }
  for (const auto& [v, c] : t.coeffs) {
    if (first) {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c.str() << "*";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      Int a = abs_int(c);
      if (a != 1) os << a.str() << "*";
    }
    os << name(v);
  }
  return os.str();
}

std::string to_string(const AtomicConstraint& a,
                      const std::function<std::string(VarId)>& name) {
  return to_string(a.term, name) + (a.op == RelOp::NonStrict ? " <= 0" : " < 0");
}

std::string to_string(const Constraint& c,
                      const std::function<std::string(VarId)>& name) {
  if (c.is_false()) return "false";
  if (c.is_true()) return "true";
  std::string out;
  for (std::size_t i = 0; i < c.atoms().size(); ++i) {
    if (i) out += ", ";
    out += to_string(c.atoms()[i], name);
  }
  return out;
}

std::string to_string(const Constraint& c) {
  return to_string(c, [](VarId v) { return "X" + std::to_string(v + 1); });
}

}  // namespace ctlspec
