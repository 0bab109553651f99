#include "weyl/json_io.hpp"

namespace weyl {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(Int(s.substr(0, slash)), den);
}

Json pair_to_json(const WeylPair& p) {
  Json j;
  j["name"] = p.name;
  j["n"] = p.s.size();
  Json mul = Json::array();
  for (int a = 0; a < p.s.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < p.s.size(); ++b) row.push_back(p.s.mul(a, b));
    mul.push_back(row);
  }
  j["mult"] = mul;
  Json star = Json::array();
  for (int a = 0; a < p.s.size(); ++a) star.push_back(p.s.star(a));
  j["star"] = star;
  if (p.s.zero()) j["zero"] = *p.s.zero();
  j["E"] = p.e.elements();
  return j;
}

WeylPair pair_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> mul = j.at("mult").get<std::vector<std::vector<int>>>();
  std::vector<int> star = j.at("star").get<std::vector<int>>();
  std::optional<int> zero;
  if (j.contains("zero") && !j.at("zero").is_null()) zero = j.at("zero").get<int>();
  if (static_cast<int>(mul.size()) != n || static_cast<int>(star.size()) != n)
    throw std::invalid_argument("semigroup tables do not match n");
  StarSemigroup s(n, mul, star, zero);
  ElementSet e(static_cast<std::size_t>(n));
  for (int x : j.at("E").get<std::vector<int>>()) {
    if (x < 0 || x >= n) throw std::invalid_argument("E element out of range");
    e.add(x);
  }
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
  return WeylPair{std::move(s), e, name};
}

Json matrix_to_json(const RMatrix& m) {
  Json j;
  j["d"] = m.dim();
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(rat_to_string(m.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

RMatrix matrix_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  if (d <= 0) throw std::invalid_argument("matrix dimension must be positive");
  RMatrix m(d);
  const Json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != d) throw std::invalid_argument("entry rows do not match d");
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d)
      throw std::invalid_argument("entry columns do not match d");
    for (int k = 0; k < d; ++k)
      m.at(i, k) = rat_from_string(
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<std::string>());
  }
  return m;
}

Json report_to_json(const Report& r) {
  Json j;
  j["ok"] = r.ok;
  Json v = Json::array();
  for (const Witness& w : r.violations) {
    Json e;
    e["law"] = w.law;
    e["elems"] = w.elems;
    if (!w.note.empty()) e["note"] = w.note;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

}  // namespace weyl
