#include "cfhp/perms.hpp"

#include <cctype>

namespace cfhp {

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
  int m = static_cast<int>(w_.size());
  if (m == 0) throw std::invalid_argument("empty permutation");
  inv_.assign(m, 0);
  for (int i = 1; i <= m; ++i) {
    int v = w_[i - 1];
    if (v < 1 || v > m || inv_[v - 1] != 0)
      throw std::invalid_argument("not a permutation of {1.." +
                                  std::to_string(m) + "}");
    inv_[v - 1] = i;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::optional<Permutation> Permutation::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::vector<int> w;
  if (s.find(',') != std::string_view::npos) {
    int cur = -1;
    for (char ch : s) {
      if (ch == ',') {
        if (cur < 0) return std::nullopt;
        w.push_back(cur);
        cur = -1;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
        if (cur > 100) return std::nullopt;
      } else {
        return std::nullopt;
      }
    }
    if (cur < 0) return std::nullopt;
    w.push_back(cur);
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        return std::nullopt;
      w.push_back(ch - '0');
    }
  }
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string Permutation::to_string() const {
  std::string s;
  if (size() <= 9) {
    for (int v : w_) s += static_cast<char>('0' + v);
  } else {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(w_[i]);
    }
  }
  return s;
}

SignedWord::SignedWord(std::vector<int> entries) : a_(std::move(entries)) {
  for (int x : a_)
    if (x == 0) throw std::invalid_argument("signed word entry is zero");
}

std::string SignedWord::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(a_[i]);
  }
  return s + ")";
}

std::vector<int> descent_set(const std::vector<int>& word) {
  std::vector<int> d;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] > word[i]) d.push_back(static_cast<int>(i));
  return d;
}

std::vector<int> ascent_set(const std::vector<int>& word) {
  std::vector<int> a;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] < word[i]) a.push_back(static_cast<int>(i));
  return a;
}

std::vector<int> descent_set(const Permutation& w) {
  return descent_set(w.oneline());
}
std::vector<int> descent_set(const SignedWord& a) {
  return descent_set(a.entries());
}
std::vector<int> ascent_set(const SignedWord& a) {
  return ascent_set(a.entries());
}

int des(const Permutation& w) {
  return static_cast<int>(descent_set(w).size());
}
int asc(const SignedWord& a) {
  return static_cast<int>(ascent_set(a).size());
}

std::vector<int> ltr_minima(const Permutation& w) {
  std::vector<int> vals;
  int best = w.size() + 1;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) < best) {
      best = w(i);
      vals.push_back(best);
    }
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::vector<int> rtl_minima(const Permutation& w) {
  std::vector<int> vals;
  int best = w.size() + 1;
  for (int i = w.size(); i >= 1; --i)
    if (w(i) < best) {
      best = w(i);
      vals.push_back(best);
    }
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::vector<Permutation> all_permutations(int m) {
  if (m < 1 || m > budgets::kPermutationMaterialize)
    throw BudgetError("all_permutations", m, budgets::kPermutationMaterialize);
  std::vector<Permutation> out;
  for_each_permutation(m, [&](const std::vector<int>& w) {
    out.push_back(Permutation(w));
  });
  return out;
}

Poly eulerian_polynomial(int n) {
  if (n < 1 || n > budgets::kEulerian)
    throw BudgetError("eulerian_polynomial", n, budgets::kEulerian);
  Poly e;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    int d = static_cast<int>(descent_set(w).size());
    e.add_term(Monomial::power(Variable::t(), d), 1);
  });
  return e;
}

}  // namespace cfhp
