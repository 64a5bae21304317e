#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/complex.hpp"
#include "dehnforge/tensor.hpp"

namespace dehnforge {

// V = V0 + V1*eps with eps^2 = 0. Generator names of the two parts must be
// distinct.
struct EpsObject {
  PresentedSpace<Rational> v0;
  PresentedSpace<Rational> v1;

  std::pair<std::size_t, std::size_t> dims() const { return {v0.dimension(), v1.dimension()}; }
};

struct EpsElement {
  QSum part0;
  QSum part1;
  friend bool operator==(const EpsElement&, const EpsElement&) = default;
};

std::pair<QSum, QSum> split_components(const EpsElement& x);
EpsElement assemble(const QSum& part0, const QSum& part1);

// Bases of tensor products are words "(a)*(b)" in the order of the factors.
EpsObject eps_tensor(const EpsObject& v, const EpsObject& w);

// Image of the antisymmetrizer on the n-fold tensor power. Basis elements are
// named by sorted words "a&b" in the first part and "a&b|e" in the eps part.
EpsObject eps_exterior(const EpsObject& v, int n);

// Rank of the antisymmetrizer on the n-fold tensor power, per part.
std::pair<std::size_t, std::size_t> antisymmetrizer_rank(const EpsObject& v, int n);

// Hom(V, W) = Hom(V0, W0) + Hom(V1, W1); maps are given on generators.
struct EpsMorphism {
  GeneratorMap<Rational> f0;
  GeneratorMap<Rational> f1;

  EpsElement operator()(const EpsElement& x) const;
};

EpsMorphism compose(const EpsMorphism& g, const EpsMorphism& f);
EpsMorphism identity_morphism();

// (U (x) V) (x) W -> U (x) (V (x) W) on free generators.
EpsMorphism associator(const EpsObject& u, const EpsObject& v, const EpsObject& w);

// Graded Lie coalgebra L = L0 + L1*eps. The cobracket on L0 is written on
// wedge keys "a&b"; the coaction of L1 is written on keys "q|e" standing for
// q ^ e in the eps part of Lambda^2 L (q in L0, e in L1). Generators are a basis.
class EpsLieCoalgebra {
 public:
  EpsLieCoalgebra(std::map<std::string, int> l0_weights, std::map<std::string, int> l1_weights,
                  std::map<std::string, QSum> cobracket, std::map<std::string, QSum> coaction);

  const std::map<std::string, int>& l0() const { return l0_; }
  const std::map<std::string, int>& l1() const { return l1_; }

  QSum cobracket(const std::string& x) const;
  QSum coaction(const std::string& e) const;

  // Chevalley-Eilenberg differential on a sorted wedge key of L0.
  QSum d_plain(const std::string& wedge_word) const;
  // Differential on an eps key "w|e".
  QSum d_eps(const std::string& key) const;

  struct Complexes {
    FiniteComplex<Rational> total;
    FiniteComplex<Rational> plain;
    FiniteComplex<Rational> eps;
  };
  // Weight-n part of Lambda^1 L -> Lambda^2 L -> ... -> Lambda^max_degree L.
  Complexes cochain_complex(int weight, int max_degree) const;

 private:
  void check_axioms() const;
  int weight_of_word(const std::vector<std::string>& word) const;

  std::map<std::string, int> l0_;
  std::map<std::string, int> l1_;
  std::map<std::string, QSum> delta_;
  std::map<std::string, QSum> nu_;
};

}  // namespace dehnforge
