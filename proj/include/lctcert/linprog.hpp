#pragma once

#include "lctcert/rational.hpp"

#include <vector>

namespace lctcert::lp {

using Vec = std::vector<BigRational>;
using Mat = std::vector<Vec>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  BigRational objective;
  Vec x;     // primal values of the structural variables
  Vec dual;  // one multiplier per input row (zero for redundant rows)
};

// Minimize c.x subject to A x = b, x >= 0. Exact rational two-phase simplex
// with Bland's rule; no floating point, no tolerances. Duals are read off the
// artificial columns of the final tableau.
Result minimize_equality_form(Mat A, Vec b, Vec c);

enum class Rel { Le, Eq, Ge };

struct Row {
  Vec coeffs;
  Rel rel;
  BigRational rhs;
};

// Same solver after slack/surplus augmentation; x >= 0.
Result minimize(const std::vector<Row>& rows, const Vec& c);

}  // namespace lctcert::lp
