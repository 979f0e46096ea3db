#include "cfhp/poly.hpp"

#include <algorithm>
#include <cctype>

namespace cfhp {

Variable Variable::yi(int index) {
  if (index < 1) throw std::invalid_argument("y_i index must be >= 1");
  return Variable(Kind::Yi, index);
}

Variable Variable::ti(int index) {
  if (index < 1) throw std::invalid_argument("t_i index must be >= 1");
  return Variable(Kind::Ti, index);
}

std::string Variable::name() const {
  switch (kind_) {
    case Kind::Y:
      return "y";
    case Kind::T:
      return "t";
    case Kind::Yi:
      return "y" + std::to_string(index_);
    case Kind::Ti:
      return "t" + std::to_string(index_);
  }
  return "?";
}

std::string Variable::latex() const {
  switch (kind_) {
    case Kind::Y:
      return "y";
    case Kind::T:
      return "t";
    case Kind::Yi:
      return "y_{" + std::to_string(index_) + "}";
    case Kind::Ti:
      return "t_{" + std::to_string(index_) + "}";
  }
  return "?";
}

std::optional<Variable> Variable::parse(std::string_view s) {
  if (s.empty() || (s[0] != 'y' && s[0] != 't')) return std::nullopt;
  if (s.size() == 1) return s[0] == 'y' ? y() : t();
  int idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    idx = idx * 10 + (s[i] - '0');
    if (idx > 1000000) return std::nullopt;
  }
  if (idx < 1) return std::nullopt;
  return s[0] == 'y' ? yi(idx) : ti(idx);
}

Monomial Monomial::power(Variable v, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  if (e > 0) m.factors_.emplace_back(v, e);
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(Variable v) const {
  for (const auto& [u, e] : factors_)
    if (u == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first == o.factors_[j].first) {
      r.factors_.emplace_back(factors_[i].first,
                              factors_[i].second + o.factors_[j].second);
      ++i, ++j;
    } else if (factors_[i].first < o.factors_[j].first) {
      r.factors_.push_back(factors_[i++]);
    } else {
      r.factors_.push_back(o.factors_[j++]);
    }
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  while (j < o.factors_.size()) r.factors_.push_back(o.factors_[j++]);
  return r;
}

static bool is_t_kind(Variable v) {
  return v.kind() == Variable::Kind::T || v.kind() == Variable::Kind::Ti;
}

Monomial Monomial::y_part() const {
  Monomial r;
  for (const auto& [v, e] : factors_)
    if (!is_t_kind(v)) r = r * Monomial::power(v, e);
  return r;
}

Monomial Monomial::t_part() const {
  Monomial r;
  for (const auto& [v, e] : factors_)
    if (is_t_kind(v)) r = r * Monomial::power(v, e);
  return r;
}

bool display_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first)
      /* the one holding the earlier variable has higher power there */
      return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i, ++j;
  }
  return false;  // identical
}

Poly Poly::constant(Integer c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
  return p;
}

Poly Poly::variable(Variable v) {
  return term(Monomial::power(v, 1), 1);
}

Poly Poly::term(Monomial m, Integer c) {
  Poly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Integer Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::substitute(const std::map<Variable, Poly>& bindings) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly acc = Poly::constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        acc *= Poly::term(Monomial::power(v, e), 1);
      else
        acc *= it->second.pow(e);
    }
    out += acc;
  }
  return out;
}

Integer Poly::sum_coefficients() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

namespace {

struct RenderStyle {
  const char* mul;        // between coefficient group and t-part
  const char* pow_open;   // exponent delimiters
  const char* pow_close;
  bool latex;
};

std::string render_monomial(const Monomial& m, const RenderStyle& st) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    s += st.latex ? v.latex() : v.name();
    if (e > 1)
      s += "^" + std::string(st.pow_open) + std::to_string(e) +
           std::string(st.pow_close);
  }
  return s;
}

/* "3y^2", "y", "1", "-2t" etc.; sign handled by the caller via isfirst. */
std::string render_term(const Monomial& m, const Integer& c, bool first,
                        const RenderStyle& st) {
  Integer a = c < 0 ? Integer(-c) : c;
  std::string body = render_monomial(m, st);
  std::string mag = (a == 1 && !body.empty()) ? body : a.str() + body;
  if (first) return c < 0 ? "-" + mag : mag;
  return (c < 0 ? " - " : " + ") + mag;
}

std::string render_grouped(const std::map<Monomial, Integer>& terms,
                           const RenderStyle& st) {
  if (terms.empty()) return "0";

  /* collect by t-part, keep y-parts sorted for display */
  std::map<Monomial, std::vector<std::pair<Monomial, Integer>>,
           bool (*)(const Monomial&, const Monomial&)>
      groups(&display_less);
  for (const auto& [m, c] : terms)
    groups[m.t_part()].emplace_back(m.y_part(), c);

  std::string out;
  bool first_group = true;
  for (auto& [tp, ys] : groups) {
    std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) {
      return display_less(a.first, b.first);
    });
    std::string inner;
    for (std::size_t i = 0; i < ys.size(); ++i)
      inner += render_term(ys[i].first, ys[i].second, i == 0, st);

    std::string piece;
    if (tp.is_one()) {
      /* parenthesize a multi-term constant group when other groups follow */
      piece = (groups.size() > 1 && ys.size() > 1) ? "(" + inner + ")" : inner;
    } else if (ys.size() == 1) {
      /* single term: render as one signed monomial, e.g. "y3t1" or "-2t" */
      piece = render_term(ys[0].first * tp, ys[0].second, true, st);
    } else {
      piece = "(" + inner + ")" + st.mul + render_monomial(tp, st);
    }

    if (first_group) {
      out = piece;
      first_group = false;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  return render_grouped(terms_, RenderStyle{"*", "", "", false});
}

std::string Poly::to_latex() const {
  return render_grouped(terms_, RenderStyle{"\\,", "{", "}", true});
}

nlohmann::json Poly::to_json() const {
  std::vector<const std::map<Monomial, Integer>::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return display_less(a->first, b->first);
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* kv : order) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : kv->first.factors()) exps[v.name()] = e;
    arr.push_back({{"coeff", kv->second.str()}, {"exponents", exps}});
  }
  return arr;
}

Poly Poly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON: not an array");
  Poly p;
  for (const auto& rec : j) {
    Integer c(rec.at("coeff").get<std::string>());
    Monomial m;
    for (const auto& [name, e] : rec.at("exponents").items()) {
      auto v = Variable::parse(name);
      if (!v) throw std::invalid_argument("polynomial JSON: bad variable " + name);
      m = m * Monomial::power(*v, e.get<int>());
    }
    p.add_term(m, c);
  }
  return p;
}

Poly pow_binomial(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("pow_binomial: negative power");
  Poly one_minus_t = Poly::constant(1) - Poly::variable(Variable::t());
  return Poly::term(Monomial::power(Variable::t(), k), 1) * one_minus_t.pow(m);
}

}  // namespace cfhp
