#include "dehnforge/qeps.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

namespace dehnforge {

std::pair<QSum, QSum> split_components(const EpsElement& x) { return {x.part0, x.part1}; }

EpsElement assemble(const QSum& part0, const QSum& part1) { return {part0, part1}; }

namespace {

std::string pair_key(const std::string& a, const std::string& b) { return "(" + a + ")*(" + b + ")"; }

void add_unique(PresentedSpace<Rational>& s, const std::string& g) {
  if (s.has_generator(g)) throw Error(ErrorCode::InvalidInput, "generator name clash: " + g, g);
  s.add_generator(g);
}

// A word of the n-fold tensor power; eps_pos marks the factor taken from V1.
struct Word {
  std::vector<std::string> letters;
  int eps_pos = -1;
};

std::string word_key(const Word& w) { return join_keys(w.letters, '*') + "#" + std::to_string(w.eps_pos); }

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

QSum antisymmetrize(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  QSum out;
  do {
    Word img;
    img.letters.resize(w.letters.size());
    for (int i = 0; i < n; ++i) {
      const auto src = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
      img.letters[static_cast<std::size_t>(i)] = w.letters[src];
      if (static_cast<int>(src) == w.eps_pos) img.eps_pos = i;
    }
    out.add(word_key(img), Rational(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void for_each_tuple(const std::vector<std::string>& letters, int n,
                    const std::function<void(const std::vector<std::string>&)>& f) {
  std::vector<std::string> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      f(cur);
      return;
    }
    for (const auto& l : letters) {
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

// Strictly increasing selections of k letters.
void for_each_subset(const std::vector<std::string>& letters, int k,
                     const std::function<void(const std::vector<std::string>&)>& f) {
  std::vector<std::string> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      cur.push_back(letters[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<std::string> sorted_free(const PresentedSpace<Rational>& s) {
  auto g = s.free_generators();
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

EpsObject eps_tensor(const EpsObject& v, const EpsObject& w) {
  EpsObject out;
  const auto v0 = v.v0.free_generators();
  const auto v1 = v.v1.free_generators();
  const auto w0 = w.v0.free_generators();
  const auto w1 = w.v1.free_generators();
  for (const auto& a : v0)
    for (const auto& b : w0) add_unique(out.v0, pair_key(a, b));
  for (const auto& a : v0)
    for (const auto& b : w1) add_unique(out.v1, pair_key(a, b));
  for (const auto& a : v1)
    for (const auto& b : w0) add_unique(out.v1, pair_key(a, b));
  return out;
}

std::pair<std::size_t, std::size_t> antisymmetrizer_rank(const EpsObject& v, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "exterior power degree must be positive");
  const auto v0 = v.v0.free_generators();
  const auto v1 = v.v1.free_generators();
  Echelon<Rational> e0;
  Echelon<Rational> e1;
  for_each_tuple(v0, n, [&](const std::vector<std::string>& t) { e0.insert(antisymmetrize({t, -1})); });
  for (int p = 0; p < n; ++p)
    for (const auto& e : v1)
      for_each_tuple(v0, n - 1, [&](const std::vector<std::string>& t) {
        Word w{t, p};
        w.letters.insert(w.letters.begin() + p, e);
        e1.insert(antisymmetrize(w));
      });
  return {e0.rank(), e1.rank()};
}

EpsObject eps_exterior(const EpsObject& v, int n) {
  const auto [r0, r1] = antisymmetrizer_rank(v, n);
  EpsObject out;
  const auto v0 = sorted_free(v.v0);
  const auto v1 = sorted_free(v.v1);
  Echelon<Rational> e0;
  Echelon<Rational> e1;
  for_each_subset(v0, n, [&](const std::vector<std::string>& s) {
    if (!e0.insert(antisymmetrize({s, -1})).is_zero()) out.v0.add_generator(join_keys(s, kWedgeSep));
  });
  for_each_subset(v0, n - 1, [&](const std::vector<std::string>& s) {
    for (const auto& e : v1) {
      Word w{s, n - 1};
      w.letters.push_back(e);
      if (!e1.insert(antisymmetrize(w)).is_zero()) out.v1.add_generator(join_keys(s, kWedgeSep) + "|" + e);
    }
  });
  if (e0.rank() != r0 || e1.rank() != r1)
    throw std::logic_error("sorted words do not span the antisymmetrizer image");
  return out;
}

EpsElement EpsMorphism::operator()(const EpsElement& x) const {
  return {x.part0.map_linear(f0), x.part1.map_linear(f1)};
}

EpsMorphism compose(const EpsMorphism& g, const EpsMorphism& f) {
  EpsMorphism h;
  h.f0 = [g, f](const std::string& k) { return f.f0(k).map_linear(g.f0); };
  h.f1 = [g, f](const std::string& k) { return f.f1(k).map_linear(g.f1); };
  return h;
}

EpsMorphism identity_morphism() {
  const auto id = [](const std::string& k) { return QSum(k); };
  return {id, id};
}

EpsMorphism associator(const EpsObject& u, const EpsObject& v, const EpsObject& w) {
  auto m0 = std::make_shared<std::map<std::string, std::string>>();
  auto m1 = std::make_shared<std::map<std::string, std::string>>();
  const std::vector<std::vector<std::string>> parts[3] = {
      {u.v0.free_generators(), u.v1.free_generators()},
      {v.v0.free_generators(), v.v1.free_generators()},
      {w.v0.free_generators(), w.v1.free_generators()}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (i + j + k > 1) continue;
        auto& m = (i + j + k == 0) ? *m0 : *m1;
        for (const auto& a : parts[0][static_cast<std::size_t>(i)])
          for (const auto& b : parts[1][static_cast<std::size_t>(j)])
            for (const auto& c : parts[2][static_cast<std::size_t>(k)])
              m[pair_key(pair_key(a, b), c)] = pair_key(a, pair_key(b, c));
      }
  const auto lookup = [](std::shared_ptr<std::map<std::string, std::string>> m) {
    return [m](const std::string& k) {
      auto it = m->find(k);
      if (it == m->end()) throw Error(ErrorCode::UnknownGenerator, "not a basis word: " + k, k);
      return QSum(it->second);
    };
  };
  return {lookup(m0), lookup(m1)};
}

}  // namespace dehnforge
