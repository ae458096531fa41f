#include "crnx/linear.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crnx/errors.hpp"

namespace crnx {

void LinearSystem::check_width(const RationalVector& row) const {
  if (row.size() != num_vars()) {
    throw InputError("constraint row has " + std::to_string(row.size()) +
                     " entries, expected " + std::to_string(num_vars()));
  }
}

void LinearSystem::add_equality(RationalVector row, Rational rhs) {
  check_width(row);
  eq_rows_.push_back(std::move(row));
  eq_rhs_.push_back(std::move(rhs));
}

void LinearSystem::add_inequality(RationalVector row, Rational rhs) {
  check_width(row);
  ge_rows_.push_back(std::move(row));
  ge_rhs_.push_back(std::move(rhs));
}

LinearSystem LinearSystem::scaled(std::span<const Rational> eq_factors,
                                  std::span<const Rational> ge_factors) const {
  if (eq_factors.size() != eq_rows_.size() || ge_factors.size() != ge_rows_.size()) {
    throw InputError("scaling factor count does not match row count");
  }
  LinearSystem out(num_vars());
  out.nonnegative_ = nonnegative_;
  for (std::size_t i = 0; i < eq_rows_.size(); ++i) {
    RationalVector row = eq_rows_[i];
    for (Rational& a : row) a *= eq_factors[i];
    out.add_equality(std::move(row), eq_rhs_[i] * eq_factors[i]);
  }
  for (std::size_t i = 0; i < ge_rows_.size(); ++i) {
    if (ge_factors[i] <= 0) throw InputError("inequality scale factor must be positive");
    RationalVector row = ge_rows_[i];
    for (Rational& a : row) a *= ge_factors[i];
    out.add_inequality(std::move(row), ge_rhs_[i] * ge_factors[i]);
  }
  return out;
}

namespace {

Rational dot(const RationalVector& a, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sgn(a[j]) != 0) s += a[j] * x[j];
  }
  return s;
}

// Dense phase-one simplex over  A z = b, z >= 0, b >= 0  with one artificial
// per row. Column layout: structural columns, then artificials.
class PhaseOne {
 public:
  PhaseOne(std::vector<RationalVector> a, RationalVector b)
      : rows_(a.size()), cols_(rows_ == 0 ? 0 : a.front().size()) {
    const std::size_t width = cols_ + rows_ + 1;
    tableau_.assign(rows_, RationalVector(width, 0));
    reduced_.assign(width, 0);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] = a[i][j];
      tableau_[i][cols_ + i] = 1;
      tableau_[i][width - 1] = b[i];
      basis_[i] = cols_ + i;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= a[i][j];
      reduced_[width - 1] -= b[i];  // holds -objective
    }
  }

  void run() {
    const std::size_t rhs = cols_ + rows_;
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(tableau_[i][enter]) <= 0) continue;
        Rational ratio = tableau_[i][rhs] / tableau_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so an entering column always
      // has a positive entry.
      if (leave == rows_) throw std::logic_error("phase-one simplex unbounded");
      pivot(leave, enter);
    }
  }

  Rational objective() const { return -reduced_[cols_ + rows_]; }

  // Dual values y_i = 1 - reduced cost of artificial i.
  RationalVector duals() const {
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = 1 - reduced_[cols_ + i];
    return y;
  }

  RationalVector primal() const {
    RationalVector z(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) z[basis_[i]] = tableau_[i][cols_ + rows_];
    }
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = cols_ + rows_ + 1;
    Rational p = tableau_[r][c];
    for (Rational& v : tableau_[r]) v /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(tableau_[i][c]) == 0) continue;
      Rational f = tableau_[i][c];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(tableau_[r][j]) != 0) tableau_[i][j] -= f * tableau_[r][j];
      }
    }
    if (sgn(reduced_[c]) != 0) {
      Rational f = reduced_[c];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(tableau_[r][j]) != 0) reduced_[j] -= f * tableau_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalVector> tableau_;
  RationalVector reduced_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityOutcome solve_feasibility(const LinearSystem& system) {
  const std::size_t n = system.num_vars();
  const std::size_t n_eq = system.eq_rows().size();
  const std::size_t n_ge = system.ge_rows().size();
  const std::size_t rows = n_eq + n_ge;

  // Structural column map: each variable contributes x+ (and x- when free),
  // each inequality contributes a surplus column.
  std::vector<std::size_t> plus_col(n), minus_col(n, static_cast<std::size_t>(-1));
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = cols++;
    if (!system.is_nonnegative(j)) minus_col[j] = cols++;
  }
  const std::size_t surplus_base = cols;
  cols += n_ge;

  std::vector<RationalVector> a(rows, RationalVector(cols, 0));
  RationalVector b(rows);
  std::vector<int> sign(rows, 1);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool is_eq = i < n_eq;
    const RationalVector& row = is_eq ? system.eq_rows()[i] : system.ge_rows()[i - n_eq];
    const Rational& rhs = is_eq ? system.eq_rhs()[i] : system.ge_rhs()[i - n_eq];
    for (std::size_t j = 0; j < n; ++j) {
      a[i][plus_col[j]] = row[j];
      if (minus_col[j] != static_cast<std::size_t>(-1)) a[i][minus_col[j]] = -row[j];
    }
    if (!is_eq) a[i][surplus_base + (i - n_eq)] = -1;
    b[i] = rhs;
    if (sgn(b[i]) < 0) {
      sign[i] = -1;
      b[i] = -b[i];
      for (Rational& v : a[i]) v = -v;
    }
  }

  PhaseOne lp(std::move(a), std::move(b));
  lp.run();

  if (sgn(lp.objective()) == 0) {
    RationalVector z = lp.primal();
    RationalVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = z[plus_col[j]];
      if (minus_col[j] != static_cast<std::size_t>(-1)) x[j] -= z[minus_col[j]];
    }
    return Feasible{std::move(x)};
  }

  RationalVector y = lp.duals();
  FarkasWitness w;
  Rational total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    Rational m = sign[i] > 0 ? y[i] : Rational(-y[i]);
    const Rational& rhs = i < n_eq ? system.eq_rhs()[i] : system.ge_rhs()[i - n_eq];
    total += m * rhs;
    (i < n_eq ? w.eq_multipliers : w.ge_multipliers).push_back(std::move(m));
  }
  for (Rational& m : w.eq_multipliers) m /= total;
  for (Rational& m : w.ge_multipliers) m /= total;
  if (!certifies_infeasibility(system, w)) {
    throw std::logic_error("simplex produced an invalid Farkas certificate");
  }
  return Infeasible{std::move(w)};
}

bool satisfies(const LinearSystem& system, std::span<const Rational> x) {
  if (x.size() != system.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (system.is_nonnegative(j) && sgn(x[j]) < 0) return false;
  }
  for (std::size_t i = 0; i < system.eq_rows().size(); ++i) {
    if (dot(system.eq_rows()[i], x) != system.eq_rhs()[i]) return false;
  }
  for (std::size_t i = 0; i < system.ge_rows().size(); ++i) {
    if (dot(system.ge_rows()[i], x) < system.ge_rhs()[i]) return false;
  }
  return true;
}

bool certifies_infeasibility(const LinearSystem& system, const FarkasWitness& w) {
  if (w.eq_multipliers.size() != system.eq_rows().size() ||
      w.ge_multipliers.size() != system.ge_rows().size()) {
    return false;
  }
  RationalVector combined(system.num_vars(), 0);
  Rational rhs = 0;
  auto accumulate = [&](const RationalVector& row, const Rational& m, const Rational& r) {
    if (sgn(m) == 0) return;
    for (std::size_t j = 0; j < row.size(); ++j) combined[j] += m * row[j];
    rhs += m * r;
  };
  for (std::size_t i = 0; i < w.eq_multipliers.size(); ++i) {
    accumulate(system.eq_rows()[i], w.eq_multipliers[i], system.eq_rhs()[i]);
  }
  for (std::size_t i = 0; i < w.ge_multipliers.size(); ++i) {
    if (sgn(w.ge_multipliers[i]) < 0) return false;
    accumulate(system.ge_rows()[i], w.ge_multipliers[i], system.ge_rhs()[i]);
  }
  for (std::size_t j = 0; j < combined.size(); ++j) {
    int s = sgn(combined[j]);
    if (system.is_nonnegative(j) ? s > 0 : s != 0) return false;
  }
  return sgn(rhs) > 0;
}

bool check_outcome(const LinearSystem& system, const FeasibilityOutcome& outcome) {
  if (const auto* f = std::get_if<Feasible>(&outcome)) return satisfies(system, f->point);
  return certifies_infeasibility(system, std::get<Infeasible>(outcome).farkas);
}

namespace {

LinearSystem conservation_like(const StoichMatrix& gamma, bool equality) {
  const std::size_t m = gamma.rows();
  LinearSystem sys(m);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m, 0);
    row[i] = 1;
    sys.add_inequality(std::move(row), 1);
  }
  for (std::size_t k = 0; k < gamma.cols(); ++k) {
    RationalVector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = equality ? gamma(i, k) : -gamma(i, k);
    if (equality) {
      sys.add_equality(std::move(row), 0);
    } else {
      sys.add_inequality(std::move(row), 0);
    }
  }
  return sys;
}

}  // namespace

LinearSystem conservation_system(const StoichMatrix& gamma) {
  return conservation_like(gamma, true);
}

LinearSystem subconservation_system(const StoichMatrix& gamma) {
  return conservation_like(gamma, false);
}

FeasibilityOutcome is_conservative(const StoichMatrix& gamma) {
  return solve_feasibility(conservation_system(gamma));
}

FeasibilityOutcome is_subconservative(const StoichMatrix& gamma) {
  return solve_feasibility(subconservation_system(gamma));
}

namespace {

using Ray = std::vector<Integer>;

void normalize(Ray& r) {
  Integer g = 0;
  for (const Integer& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (Integer& v : r) v /= g;
  }
}

std::vector<bool> zero_set(const Ray& r) {
  std::vector<bool> z(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) z[j] = sgn(r[j]) == 0;
  return z;
}

bool covers(const std::vector<bool>& big, const std::vector<bool>& small) {
  for (std::size_t j = 0; j < big.size(); ++j) {
    if (small[j] && !big[j]) return false;
  }
  return true;
}

}  // namespace

ConeGenerators nonneg_kernel_generators(const StoichMatrix& a) {
  // Double description: start from the orthant's unit rays and intersect
  // with one hyperplane a_i . v = 0 at a time.
  const std::size_t n = a.cols();
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    Ray r(n, 0);
    r[j] = 1;
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < a.rows() && !rays.empty(); ++i) {
    std::vector<Integer> value(rays.size());
    for (std::size_t t = 0; t < rays.size(); ++t) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) != 0) s += rays[t][j] * Integer(static_cast<long>(a(i, j)));
      }
      value[t] = s;
    }
    std::vector<std::vector<bool>> zeros;
    zeros.reserve(rays.size());
    for (const Ray& r : rays) zeros.push_back(zero_set(r));

    std::vector<Ray> next;
    for (std::size_t t = 0; t < rays.size(); ++t) {
      if (sgn(value[t]) == 0) next.push_back(rays[t]);
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sgn(value[p]) <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sgn(value[q]) >= 0) continue;
        std::vector<bool> common(n);
        for (std::size_t j = 0; j < n; ++j) common[j] = zeros[p][j] && zeros[q][j];
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t != p && t != q && covers(zeros[t], common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray combo(n);
        for (std::size_t j = 0; j < n; ++j) {
          combo[j] = value[p] * rays[q][j] - value[q] * rays[p][j];
        }
        normalize(combo);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  // Keep minimal supports only.
  std::vector<Ray> minimal;
  for (std::size_t t = 0; t < rays.size(); ++t) {
    auto zt = zero_set(rays[t]);
    bool dominated = false;
    for (std::size_t u = 0; u < rays.size() && !dominated; ++u) {
      if (u == t) continue;
      auto zu = zero_set(rays[u]);
      if (zu != zt && covers(zu, zt)) dominated = true;
    }
    if (!dominated) minimal.push_back(rays[t]);
  }
  return ConeGenerators{std::move(minimal)};
}

ConeGenerators t_invariants(const StoichMatrix& gamma) {
  return nonneg_kernel_generators(gamma);
}

ConeGenerators p_invariants(const StoichMatrix& gamma) {
  return nonneg_kernel_generators(gamma.transposed());
}

}  // namespace crnx
