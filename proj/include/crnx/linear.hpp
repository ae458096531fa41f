#pragma once

// Exact rational feasibility with Farkas certificates, conservation tests and
// generators of the nonnegative kernel cone (P-/T-invariants).

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "crnx/crn_model.hpp"
#include "crnx/rational.hpp"

namespace crnx {

using RationalVector = std::vector<Rational>;

// Rows  E x = f  and  G x >= h  over variables that are either free or
// constrained to x_j >= 0.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars, bool nonnegative = false)
      : nonnegative_(num_vars, nonnegative) {}

  std::size_t num_vars() const { return nonnegative_.size(); }
  bool is_nonnegative(std::size_t j) const { return nonnegative_[j]; }
  void set_nonnegative(std::size_t j, bool value = true) { nonnegative_.at(j) = value; }

  void add_equality(RationalVector row, Rational rhs);
  void add_inequality(RationalVector row, Rational rhs);

  const std::vector<RationalVector>& eq_rows() const { return eq_rows_; }
  const RationalVector& eq_rhs() const { return eq_rhs_; }
  const std::vector<RationalVector>& ge_rows() const { return ge_rows_; }
  const RationalVector& ge_rhs() const { return ge_rhs_; }

  // Every row multiplied by a positive factor; used by scaling tests.
  LinearSystem scaled(std::span<const Rational> eq_factors,
                      std::span<const Rational> ge_factors) const;

 private:
  void check_width(const RationalVector& row) const;

  std::vector<bool> nonnegative_;
  std::vector<RationalVector> eq_rows_;
  RationalVector eq_rhs_;
  std::vector<RationalVector> ge_rows_;
  RationalVector ge_rhs_;
};

// Multipliers u (free, one per equality) and v >= 0 (one per inequality) with
// u^T E + v^T G vanishing on free variables, nonpositive on nonnegative ones,
// and u.f + v.h = 1. Adding the rows with these weights yields 0 >= 1.
struct FarkasWitness {
  RationalVector eq_multipliers;
  RationalVector ge_multipliers;
};

struct Feasible {
  RationalVector point;
};
struct Infeasible {
  FarkasWitness farkas;
};
using FeasibilityOutcome = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const FeasibilityOutcome& o) {
  return std::holds_alternative<Feasible>(o);
}

// Exact two-phase simplex (phase one only) with Bland's rule.
// Throws InputError on inconsistent dimensions.
FeasibilityOutcome solve_feasibility(const LinearSystem& system);

bool satisfies(const LinearSystem& system, std::span<const Rational> x);
bool certifies_infeasibility(const LinearSystem& system, const FarkasWitness& w);

// Checks whichever side of the outcome is present.
bool check_outcome(const LinearSystem& system, const FeasibilityOutcome& outcome);

// Conservation systems over c (one variable per species): c >= 1 componentwise
// and c^T Gamma = 0 (conservative) or c^T Gamma <= 0 (subconservative, written
// as -c^T Gamma_k >= 0). Inequality rows: the m positivity rows first, then one
// row per reaction.
LinearSystem conservation_system(const StoichMatrix& gamma);
LinearSystem subconservation_system(const StoichMatrix& gamma);

FeasibilityOutcome is_conservative(const StoichMatrix& gamma);
FeasibilityOutcome is_subconservative(const StoichMatrix& gamma);

// Extreme rays of { v >= 0 : A v = 0 } as coprime nonnegative integer vectors,
// sorted lexicographically.
struct ConeGenerators {
  std::vector<std::vector<Integer>> rays;
};

ConeGenerators nonneg_kernel_generators(const StoichMatrix& a);
ConeGenerators t_invariants(const StoichMatrix& gamma);
ConeGenerators p_invariants(const StoichMatrix& gamma);

}  // namespace crnx
