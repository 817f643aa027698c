#include "cliffordkit/json_io.hpp"

#include <algorithm>

#include "cliffordkit/errors.hpp"

namespace cliffordkit {

json scalar_to_json(const Scalar& s) {
  json j;
  if (s.is_exact()) {
    j["re"] = s.real_part().get_str();
    j["im"] = s.imag_part().get_str();
  } else {
    j["re"] = s.to_double();
    j["im"] = "0";
  }
  return j;
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re"))
    throw BadMatrixFile("scalar entry must be an object with re/im");
  auto parse_part = [](const json& p) -> Scalar {
    if (p.is_string()) return Scalar::parse_rational(p.get<std::string>());
    if (p.is_number()) return Scalar::f64(p.get<double>());
    throw BadMatrixFile("scalar part must be a string or a number");
  };
  Scalar re = parse_part(j["re"]);
  Scalar im = j.contains("im") ? parse_part(j["im"]) : Scalar::rational(0);
  if (!re.is_exact() || !im.is_exact()) {
    if (!im.is_zero()) throw BadMatrixFile("Float64 scalars cannot carry an imaginary part");
    return re.is_exact() ? Scalar::f64(re.to_double()) : re;
  }
  return Scalar::gaussian(re.real_part(), im.real_part());
}

json multivector_to_json(const Multivector& a) {
  json j;
  j["n"] = a.space().dim();
  json q = json::array();
  for (const Scalar& v : a.space().q) q.push_back(v.real_part().get_str());
  j["q"] = q;
  j["algebra"] = a.algebra() == Algebra::clifford ? "clifford" : "exterior";
  std::vector<BladeBits> keys;
  for (const auto& [I, c] : a.terms()) keys.push_back(I);
  std::sort(keys.begin(), keys.end(), blades::graded_lex_less);
  json terms = json::array();
  for (BladeBits I : keys) {
    json t = scalar_to_json(a.coeff(I));
    t["blades"] = blades::indices(I);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Multivector multivector_from_json(const json& j) {
  std::vector<Scalar> q;
  for (const auto& v : j.at("q"))
    q.push_back(Scalar::parse_rational(v.get<std::string>()));
  if (static_cast<int>(q.size()) != j.at("n").get<int>())
    throw BadMatrixFile("q length does not match n");
  QuadraticSpace space = QuadraticSpace::with_values(std::move(q));
  Algebra alg = j.at("algebra").get<std::string>() == "exterior" ? Algebra::exterior
                                                                 : Algebra::clifford;
  Multivector a(space, alg);
  for (const auto& t : j.at("terms")) {
    std::vector<int> idx = t.at("blades").get<std::vector<int>>();
    a.add_term(blades::from_indices(idx), scalar_from_json(t));
  }
  return a;
}

json matrix_to_json(const OperatorMatrix& m, const std::vector<int>* basis_parity,
                    const std::vector<BladeBits>* basis) {
  json j;
  j["d"] = m.rows();
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  if (basis_parity) {
    switch (matrix_parity(m, *basis_parity)) {
      case Parity::even: j["parity"] = "even"; break;
      case Parity::odd: j["parity"] = "odd"; break;
      default: j["parity"] = "mixed"; break;
    }
  } else {
    j["parity"] = "mixed";
  }
  if (basis) {
    json b = json::array();
    for (BladeBits I : *basis) b.push_back(blades::indices(I));
    j["basis"] = b;
  }
  return j;
}

OperatorMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw BadMatrixFile("matrix JSON must contain entries");
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.empty())
    throw BadMatrixFile("matrix entries must be a nonempty array");
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows[0].size());
  OperatorMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw BadMatrixFile("ragged matrix rows");
    for (int k = 0; k < c; ++k)
      m.at(i, k) = scalar_from_json(rows[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  if (j.contains("d") && j["d"].get<int>() != r)
    throw BadMatrixFile("declared dimension does not match entries");
  return m;
}

json decomposition_to_json(const DecompositionResult& dec, const TwistedModule& mod) {
  json j;
  json terms = json::array();
  for (const auto& [I, comp] : dec.terms) {
    json t;
    t["I"] = blades::indices(I);
    t["matrix"] = matrix_to_json(comp, &mod.parity);
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["residual_zero"] = dec.residual_zero;
  return j;
}

}  // namespace cliffordkit
