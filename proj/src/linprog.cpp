#include "lctcert/linprog.hpp"

#include <cstddef>

namespace lctcert::lp {

namespace {

struct Tableau {
  Mat body;                 // rows x (n + m) columns; artificial columns kept all the way
  Vec rhs;                  // one per row
  std::vector<int> basis;   // column index of the basic variable of each row
  int n = 0;                // structural columns
  int m = 0;                // artificial columns (= original row count)
  std::vector<char> banned; // artificial columns that left the basis for good

  int width() const { return n + m; }

  void pivot(std::size_t row, int col) {
    const BigRational pivot_value = body[row][col];
    for (auto& v : body[row]) v /= pivot_value;
    rhs[row] /= pivot_value;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i == row || body[i][col] == 0) continue;
      const BigRational factor = body[i][col];
      for (int j = 0; j < width(); ++j) body[i][j] -= factor * body[row][j];
      rhs[i] -= factor * rhs[row];
    }
    if (basis[row] >= n) banned[static_cast<std::size_t>(basis[row] - n)] = 1;
    basis[row] = col;
  }
};

// Dantzig pivoting (most negative reduced cost) with a permanent switch to
// Bland's rule after a run of degenerate pivots; exact arithmetic makes the
// switch the textbook anti-cycling guarantee. Returns Optimal or Unbounded.
Status run_simplex(Tableau& t, const Vec& cost, bool allow_artificial_entering) {
  constexpr int kDegenerateBudget = 60;
  int degenerate_streak = 0;
  bool bland = false;
  std::vector<char> is_basic(static_cast<std::size_t>(t.width()), 0);
  for (;;) {
    std::fill(is_basic.begin(), is_basic.end(), 0);
    for (int b : t.basis) is_basic[static_cast<std::size_t>(b)] = 1;

    int entering = -1;
    BigRational best_rc;
    for (int j = 0; j < t.width(); ++j) {
      if (is_basic[static_cast<std::size_t>(j)]) continue;
      if (j >= t.n && (!allow_artificial_entering || t.banned[static_cast<std::size_t>(j - t.n)]))
        continue;
      BigRational rc = cost[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < t.body.size(); ++i)
        rc -= cost[static_cast<std::size_t>(t.basis[i])] * t.body[i][j];
      if (rc < 0) {
        if (bland) {
          entering = j;
          break;
        }
        if (entering < 0 || rc < best_rc) {
          entering = j;
          best_rc = rc;
        }
      }
    }
    if (entering < 0) return Status::Optimal;

    std::ptrdiff_t leave_row = -1;
    BigRational best_ratio;
    for (std::size_t i = 0; i < t.body.size(); ++i) {
      if (t.body[i][entering] <= 0) continue;
      const BigRational ratio = t.rhs[i] / t.body[i][entering];
      if (leave_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[static_cast<std::size_t>(leave_row)])) {
        leave_row = static_cast<std::ptrdiff_t>(i);
        best_ratio = ratio;
      }
    }
    if (leave_row < 0) return Status::Unbounded;
    t.pivot(static_cast<std::size_t>(leave_row), entering);

    if (!bland) {
      if (best_ratio == 0) {
        if (++degenerate_streak > kDegenerateBudget) bland = true;
      } else {
        degenerate_streak = 0;
      }
    }
  }
}

}  // namespace

Result minimize_equality_form(Mat A, Vec b, Vec c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("minimize_equality_form: row count mismatch");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("minimize_equality_form: column count mismatch");

  std::vector<char> flipped(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (b[static_cast<std::size_t>(i)] < 0) {
      for (auto& v : A[static_cast<std::size_t>(i)]) v = -v;
      b[static_cast<std::size_t>(i)] = -b[static_cast<std::size_t>(i)];
      flipped[static_cast<std::size_t>(i)] = 1;
    }
  }

  Tableau t;
  t.n = n;
  t.m = m;
  t.banned.assign(static_cast<std::size_t>(m), 0);
  t.body.assign(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(n + m), BigRational(0)));
  t.basis.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j)
      t.body[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    t.body[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  t.rhs = b;
  std::vector<int> origin(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) origin[static_cast<std::size_t>(i)] = i;

  // Crash basis: a positive singleton column with zero cost (a slack) can
  // carry its row without an artificial variable.
  {
    std::vector<int> nonzero_row(static_cast<std::size_t>(n), -1);
    std::vector<int> nonzero_count(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          ++nonzero_count[static_cast<std::size_t>(j)];
          nonzero_row[static_cast<std::size_t>(j)] = i;
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      if (nonzero_count[static_cast<std::size_t>(j)] != 1) continue;
      if (c[static_cast<std::size_t>(j)] != 0) continue;
      const int i = nonzero_row[static_cast<std::size_t>(j)];
      if (t.basis[static_cast<std::size_t>(i)] != -1) continue;
      const BigRational& coeff = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (coeff <= 0) continue;
      if (coeff != 1) {
        for (auto& v : t.body[static_cast<std::size_t>(i)]) v /= coeff;
        t.rhs[static_cast<std::size_t>(i)] /= coeff;
      }
      t.basis[static_cast<std::size_t>(i)] = j;
    }
  }
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] == -1) {
      t.basis[static_cast<std::size_t>(i)] = n + i;
      // zero-level artificials are handled by the drive-out step below
      if (t.rhs[static_cast<std::size_t>(i)] != 0) need_phase1 = true;
    } else {
      t.banned[static_cast<std::size_t>(i)] = 1;  // artificial never needed for this row
    }
  }

  Result result;
  if (need_phase1) {
    Vec phase1_cost(static_cast<std::size_t>(n + m), BigRational(0));
    for (int j = n; j < n + m; ++j) phase1_cost[static_cast<std::size_t>(j)] = 1;
    const Status s1 = run_simplex(t, phase1_cost, /*allow_artificial_entering=*/true);
    if (s1 == Status::Unbounded)
      throw std::logic_error("minimize_equality_form: phase 1 unbounded");
    BigRational infeasibility = 0;
    for (std::size_t i = 0; i < t.basis.size(); ++i)
      infeasibility += phase1_cost[static_cast<std::size_t>(t.basis[i])] * t.rhs[i];
    if (infeasibility != 0) {
      result.status = Status::Infeasible;
      return result;
    }
  }

  // Pivot remaining zero-level artificials out; rows that cannot release
  // their artificial are redundant and get discarded (dual contribution 0).
  for (std::size_t i = 0; i < t.basis.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (t.body[i][j] != 0) col = j;
    if (col >= 0) {
      t.pivot(i, col);
      ++i;
    } else {
      t.body.erase(t.body.begin() + static_cast<std::ptrdiff_t>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 on the real objective.
  Vec phase2_cost(static_cast<std::size_t>(n + m), BigRational(0));
  for (int j = 0; j < n; ++j) phase2_cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
  const Status s2 = run_simplex(t, phase2_cost, /*allow_artificial_entering=*/false);
  if (s2 == Status::Unbounded) {
    result.status = Status::Unbounded;
    return result;
  }

  result.status = Status::Optimal;
  result.x.assign(static_cast<std::size_t>(n), BigRational(0));
  for (std::size_t i = 0; i < t.basis.size(); ++i)
    if (t.basis[i] < n) result.x[static_cast<std::size_t>(t.basis[i])] = t.rhs[i];
  result.objective = 0;
  for (int j = 0; j < n; ++j)
    result.objective += c[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
  // y_i = c_B . (B^-1 e_i); the artificial column of row i carries B^-1 e_i.
  result.dual.assign(static_cast<std::size_t>(m), BigRational(0));
  for (int i = 0; i < m; ++i) {
    BigRational y = 0;
    for (std::size_t r = 0; r < t.body.size(); ++r)
      y += phase2_cost[static_cast<std::size_t>(t.basis[r])] * t.body[r][n + i];
    result.dual[static_cast<std::size_t>(i)] = flipped[static_cast<std::size_t>(i)] ? -y : y;
  }
  return result;
}

Result minimize(const std::vector<Row>& rows, const Vec& c) {
  const int n = static_cast<int>(c.size());
  int slacks = 0;
  for (const auto& row : rows)
    if (row.rel != Rel::Eq) ++slacks;
  Mat A;
  Vec b;
  Vec cost(static_cast<std::size_t>(n + slacks), BigRational(0));
  for (int j = 0; j < n; ++j) cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
  int next_slack = n;
  for (const auto& row : rows) {
    if (static_cast<int>(row.coeffs.size()) != n)
      throw std::invalid_argument("lp::minimize: row width mismatch");
    Vec full(static_cast<std::size_t>(n + slacks), BigRational(0));
    for (int j = 0; j < n; ++j) full[static_cast<std::size_t>(j)] = row.coeffs[static_cast<std::size_t>(j)];
    if (row.rel == Rel::Le) full[static_cast<std::size_t>(next_slack++)] = 1;
    if (row.rel == Rel::Ge) full[static_cast<std::size_t>(next_slack++)] = -1;
    A.push_back(std::move(full));
    b.push_back(row.rhs);
  }
  Result res = minimize_equality_form(std::move(A), std::move(b), std::move(cost));
  if (res.status == Status::Optimal) res.x.resize(static_cast<std::size_t>(n));
  return res;
}

}  // namespace lctcert::lp
