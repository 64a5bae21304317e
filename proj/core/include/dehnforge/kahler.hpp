#pragma once

#include <map>
#include <string>
#include <vector>

#include "dehnforge/ratfunc.hpp"
#include "dehnforge/tensor.hpp"

namespace dehnforge {

// Kahler form over Q(t, t1, ...): sum of f_I dt_I over increasing index sets.
// Variable 0 is t, variable i > 0 is t_i.
class OmegaForm {
 public:
  explicit OmegaForm(int degree = 0) : degree_(degree) {}
  static OmegaForm differential(const RatFunc& f);  // df
  static OmegaForm dlog(const RatFunc& f);          // df / f

  int degree() const { return degree_; }
  const std::map<std::vector<int>, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const std::vector<int>& index) const;

  void add(std::vector<int> index, const RatFunc& c);
  OmegaForm& operator+=(const OmegaForm& o);
  friend OmegaForm operator+(OmegaForm a, const OmegaForm& b) { return a += b; }
  OmegaForm scaled(const RatFunc& c) const;
  friend OmegaForm wedge(const OmegaForm& a, const OmegaForm& b);
  friend bool operator==(const OmegaForm& a, const OmegaForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int degree_ = 0;
  std::map<std::vector<int>, RatFunc> terms_;
};

// a (x) b_1 ^ ... ^ b_k  ->  a dlog b_1 ^ ... ^ dlog b_k on the canonical
// symbol basis of F* (x) Q. Keys are wedge words, optionally prefixed "F|" as
// in the terminal term of a Cathelineau complex. degree < 0 infers it from
// the keys (zero input then has degree 0).
OmegaForm dlog_map(const TensorElement& x, int degree = -1);

}  // namespace dehnforge
