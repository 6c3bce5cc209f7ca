#ifndef XICHAR_JACK_HPP
#define XICHAR_JACK_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "xichar/symfunc.hpp"

namespace xichar {

// Jack symmetric function J_shape(.; alpha) with the scalars the map series needs.
struct JackRecord {
  Partition shape;
  SymFn expansion;     // power-sum expansion, homogeneous of weight |shape|
  AlphaFn norm;        // <J, J>_alpha
  XPoly principal;     // J(1_N; alpha) with N written as x (every p_k -> x)
  AlphaFn p2coeff;     // [p_2^{n/2}] J, zero for odd n
  bool alpha_polynomial = true;  // every expansion coefficient lies in Q[alpha]
};

// The defining linear system had no unique solution for this shape.
class SingularJackSystem : public std::runtime_error {
 public:
  explicit SingularJackSystem(const Partition& shape)
      : std::runtime_error("Jack system singular for shape " + shape.to_string()) {}
};

// Solves the defining conditions for one shape: monomial coefficients vanish
// above the shape in reverse-lex order, [m_{1^n}] J = n!, and J is orthogonal
// to every m_nu strictly below the shape (which spans the same space as the
// lower J's). Shapes are independent of each other.
JackRecord solve_jack(const Partition& shape);

// All shapes of weight n, in partitions_of(n) order.
std::vector<JackRecord> jack_weight_serial(int n);
// Same result; shapes are solved in parallel with OpenMP.
std::vector<JackRecord> jack_weight_parallel(int n);

// Cached lookup. The cache holds whole weights and is safe for concurrent use.
std::shared_ptr<const JackRecord> jack(const Partition& shape);
std::vector<std::shared_ptr<const JackRecord>> jacks_of_weight(int n);
void evict_jack_weight(int n);
void clear_jack_cache();

struct CauchyReport {
  bool pass = true;
  int coefficients_checked = 0;
  std::string first_discrepancy;
};

// Degree-n part of prod_{i,j} (1 - x_i y_j)^{-1/alpha} = sum_theta J(x)J(y)/<J,J>,
// compared coefficient by coefficient in the m(x) m(y) basis with num_vars
// variables on each side. The left side is summed directly over nonnegative
// integer matrices with the given row and column sums. Also checks that at
// alpha = 1 the right side counts those matrices, i.e. the kernel
// prod (1 - x_i y_j)^{-1}.
CauchyReport cauchy_check(int n, int num_vars);

}  // namespace xichar

#endif
