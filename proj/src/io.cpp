#include "cmreal/io.hpp"

#include <fstream>
#include <sstream>

namespace cmreal {

namespace {

[[noreturn]] void fail(const Json::json_pointer& at, const std::string& what) {
  throw ParseError("at " + (at.empty() ? std::string("/") : at.to_string()) + ": " + what);
}

const Json& field(const Json& j, const Json::json_pointer& at, const char* key) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(at, std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_at(const Json& j, const Json::json_pointer& at) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(at, e.what());
  }
  fail(at, "expected a rational string");
}

Gq gq_at(const Json& j, const Json::json_pointer& at) {
  if (j.is_object()) {
    Rational re = rational_at(field(j, at, "re"), at / "re");
    Rational im = j.contains("im") ? rational_at(j["im"], at / "im") : Rational(0);
    return Gq(re, im);
  }
  if (j.is_number_integer()) return Gq(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_gq(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
  }
  fail(at, "expected a scalar");
}

MatQ matq_at(const Json& j, const Json::json_pointer& at) {
  const Json& re = field(j, at, "re");
  if (!re.is_array()) fail(at / "re", "expected an array of rows");
  const int rows = static_cast<int>(re.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(re[0].size());
  if (j.contains("n") && (j["n"] != rows || j["n"] != cols)) fail(at / "n", "does not match the entry arrays");
  const Json* im = j.contains("im") ? &j["im"] : nullptr;
  MatQ m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    auto rp = at / "re" / static_cast<size_t>(r);
    if (!re[static_cast<size_t>(r)].is_array() || static_cast<int>(re[static_cast<size_t>(r)].size()) != cols)
      fail(rp, "ragged row");
    for (int c = 0; c < cols; ++c) {
      Rational a = rational_at(re[static_cast<size_t>(r)][static_cast<size_t>(c)], rp / static_cast<size_t>(c));
      Rational b(0);
      if (im) {
        auto ip = at / "im" / static_cast<size_t>(r) / static_cast<size_t>(c);
        if (!im->is_array() || im->size() != re.size() || (*im)[static_cast<size_t>(r)].size() != static_cast<size_t>(cols))
          fail(at / "im", "shape differs from \"re\"");
        b = rational_at((*im)[static_cast<size_t>(r)][static_cast<size_t>(c)], ip);
      }
      m(r, c) = Gq(a, b);
    }
  }
  return m;
}

std::vector<Gq> gq_list_at(const Json& j, const Json::json_pointer& at) {
  if (!j.is_array()) fail(at, "expected an array");
  std::vector<Gq> out;
  for (size_t k = 0; k < j.size(); ++k) out.push_back(gq_at(j[k], at / k));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json to_json(const Gq& a) { return {{"re", rational_str(a.re)}, {"im", rational_str(a.im)}}; }
Json to_json(const cplx& a) { return {{"re", a.real()}, {"im", a.imag()}}; }

Json to_json(const MatQ& m) {
  Json re = Json::array(), im = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ir = Json::array();
    for (int c = 0; c < m.cols(); ++c) {
      rr.push_back(rational_str(m(r, c).re));
      ir.push_back(rational_str(m(r, c).im));
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  Json out;
  if (m.is_square()) out["n"] = m.rows();
  out["re"] = re;
  out["im"] = im;
  return out;
}

Json to_json(const MatC& m) {
  Json re = Json::array(), im = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ir = Json::array();
    for (int c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"n", m.rows()}, {"re", re}, {"im", im}};
}

Json to_json(const CMPair& p) { return {{"n", p.n()}, {"X", to_json(p.X)}, {"Z", to_json(p.Z)}}; }
Json to_json(const CMPairC& p) { return {{"n", p.n()}, {"X", to_json(p.X)}, {"Z", to_json(p.Z)}}; }

Json to_json(const CMChart& c) {
  Json l = Json::array(), a = Json::array();
  for (const Gq& v : c.lambda) l.push_back(to_json(v));
  for (const Gq& v : c.alpha) a.push_back(to_json(v));
  return {{"lambda", l}, {"alpha", a}};
}

Json to_json(const CMChartC& c) {
  Json l = Json::array(), a = Json::array();
  for (const cplx& v : c.lambda) l.push_back(to_json(v));
  for (const cplx& v : c.alpha) a.push_back(to_json(v));
  return {{"lambda", l}, {"alpha", a}};
}

Json to_json(const PolyQ& p) {
  Json out = Json::array();
  for (const Gq& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json to_json(const QuasiExpSpace& s) {
  Json spaces = Json::array();
  for (int j = 0; j < s.k(); ++j) {
    Json basis = Json::array();
    for (const PolyQ& p : s.spaces[static_cast<size_t>(j)]) basis.push_back(to_json(p));
    spaces.push_back({{"mu", to_json(s.mus[static_cast<size_t>(j)])}, {"basis", basis}});
  }
  return {{"spaces", spaces}};
}

Json to_json(const Partition& lam) { return {{"parts", lam.parts}}; }

Json to_json(const DunklRep& rep) {
  Json out;
  for (int k = 0; k < rep.n; ++k) out["x" + std::to_string(k + 1)] = to_json(rep.x[static_cast<size_t>(k)]);
  for (int k = 0; k < rep.n; ++k) out["y" + std::to_string(k + 1)] = to_json(rep.y[static_cast<size_t>(k)]);
  for (int i = 0; i < rep.n; ++i)
    for (int j = i + 1; j < rep.n; ++j)
      out["s" + std::to_string(i + 1) + std::to_string(j + 1)] = to_json(rep.transposition(i, j));
  return out;
}

Gq gq_from_json(const Json& j) { return gq_at(j, Json::json_pointer()); }
MatQ matq_from_json(const Json& j) { return matq_at(j, Json::json_pointer()); }

CMPair cmpair_from_json(const Json& j) {
  Json::json_pointer root;
  MatQ x = matq_at(field(j, root, "X"), root / "X");
  MatQ z = matq_at(field(j, root, "Z"), root / "Z");
  if (!x.is_square() || x.rows() != z.rows() || x.cols() != z.cols()) fail(root, "X and Z must be square of equal size");
  if (j.contains("n") && j["n"] != x.rows()) fail(root / "n", "does not match the matrices");
  return validate(x, z);
}

CMChart cmchart_from_json(const Json& j) {
  Json::json_pointer root;
  CMChart c{gq_list_at(field(j, root, "lambda"), root / "lambda"), gq_list_at(field(j, root, "alpha"), root / "alpha")};
  if (c.lambda.size() != c.alpha.size()) fail(root, "lambda and alpha differ in length");
  return c;
}

QuasiExpSpace quasi_exp_from_json(const Json& j) {
  Json::json_pointer root;
  const Json& spaces = field(j, root, "spaces");
  if (!spaces.is_array()) fail(root / "spaces", "expected an array");
  QuasiExpSpace s;
  for (size_t k = 0; k < spaces.size(); ++k) {
    auto at = root / "spaces" / k;
    s.mus.push_back(gq_at(field(spaces[k], at, "mu"), at / "mu"));
    const Json& basis = field(spaces[k], at, "basis");
    if (!basis.is_array()) fail(at / "basis", "expected an array of coefficient lists");
    std::vector<PolyQ> b;
    for (size_t r = 0; r < basis.size(); ++r) b.emplace_back(gq_list_at(basis[r], at / "basis" / r));
    s.spaces.push_back(std::move(b));
  }
  try {
    check_space(s);
  } catch (const std::domain_error& e) {
    fail(root, e.what());
  }
  return s;
}

Partition partition_from_json(const Json& j) {
  Json::json_pointer root;
  const Json& parts = field(j, root, "parts");
  if (!parts.is_array()) fail(root / "parts", "expected an array");
  std::vector<int> p;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].is_number_integer()) fail(root / "parts" / k, "expected an integer");
    p.push_back(parts[k].get<int>());
  }
  try {
    return make_partition(std::move(p));
  } catch (const std::invalid_argument& e) {
    fail(root / "parts", e.what());
  }
}

}  // namespace cmreal
