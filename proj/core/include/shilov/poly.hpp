#pragma once

#include "shilov/hahn.hpp"
#include "shilov/monomial.hpp"

#include <map>
#include <string>

namespace shilov {

// Sparse homogeneous polynomial of one degree in d+1 variables with
// HahnSeries coefficients: a section of O(degree) on P^d.
class HomPoly {
 public:
  HomPoly(int d, int degree) : d_(d), degree_(degree) {}

  static HomPoly monomial(int d, const ExpVec& a, HahnSeries coeff = HahnSeries::one());

  int dim_projective() const { return d_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<ExpVec, HahnSeries, GradedLexLess>& terms() const { return terms_; }

  // Adds c * x^a; drops the slot if the coefficient cancels to exact zero.
  void add_term(const ExpVec& a, const HahnSeries& c);

  friend HomPoly operator+(const HomPoly& f, const HomPoly& g);
  friend HomPoly operator-(const HomPoly& f, const HomPoly& g);
  friend HomPoly operator*(const HomPoly& f, const HomPoly& g);
  HomPoly operator*(const HahnSeries& c) const;

  HomPoly pow(unsigned k) const;

  std::string str() const;

 private:
  int d_;
  int degree_;
  std::map<ExpVec, HahnSeries, GradedLexLess> terms_;
};

// Matrix of the injection R_n --(.s)--> R_{n+1} in the fixed monomial bases:
// the column at x^a holds the expansion of s*x^a. Stored column-sparse.
struct MultOpMatrix {
  int src_degree = 0;
  int tgt_degree = 0;
  MonomialBasis src;
  MonomialBasis tgt;
  // columns[j] = list of (row index, coefficient)
  std::vector<std::vector<std::pair<std::size_t, HahnSeries>>> columns;
};

// s must be a nonzero section of degree 1.
MultOpMatrix mult_operator(const HomPoly& s, int n);

}  // namespace shilov
