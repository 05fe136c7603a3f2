#include "dmp/export.hpp"

#include <stdexcept>

namespace dmp {

namespace {

nlohmann::ordered_json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const FactoredRational& a) {
  nlohmann::ordered_json doc;
  doc["numerator"] = rational_array(a.numerator().coefficients());
  auto den = nlohmann::ordered_json::array();
  for (auto [k, e] : a.denominator()) den.push_back({k, e});
  doc["denominator"] = std::move(den);
  return doc;
}

FactoredRational factored_rational_from_json(const nlohmann::ordered_json& doc) {
  std::vector<Rational> coeffs;
  for (const auto& c : doc.at("numerator")) coeffs.push_back(parse_rational(c.get<std::string>()));
  Denominator den;
  for (const auto& factor : doc.at("denominator")) {
    if (!factor.is_array() || factor.size() != 2) throw std::invalid_argument("denominator factor must be [k, e]");
    const auto k = factor[0].get<unsigned>();
    const auto e = factor[1].get<unsigned>();
    if (k == 0 || e == 0 || den.contains(k)) throw std::invalid_argument("invalid denominator factor");
    den[k] = e;
  }
  return FactoredRational(DensePolynomial(std::move(coeffs)), std::move(den));
}

nlohmann::ordered_json to_json(const QuasiPolynomial& qp, std::uint64_t residue_limit) {
  nlohmann::ordered_json doc;
  doc["period"] = qp.period().get_str();
  doc["degree"] = qp.degree();
  doc["validity_threshold"] = qp.validity_threshold();
  doc["exceptional_indices"] = qp.exceptional_indices();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : qp.components()) {
    nlohmann::ordered_json item;
    item["modulus"] = c.modulus;
    item["power"] = c.power;
    item["values"] = rational_array(c.values);
    comps.push_back(std::move(item));
  }
  doc["components"] = std::move(comps);
  if (qp.period() <= residue_limit) {
    auto residues = nlohmann::ordered_json::array();
    const auto period = qp.period().get_ui();
    for (unsigned long r = 0; r < period; ++r) residues.push_back(rational_array(qp.coefficients(Integer(r))));
    doc["residues"] = std::move(residues);
  }
  return doc;
}

nlohmann::ordered_json to_json(const TermTable& table) {
  nlohmann::ordered_json doc;
  doc["method"] = std::string(to_string(table.method));
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : table.values) values.push_back(to_string(v));
  doc["values"] = std::move(values);
  return doc;
}

}  // namespace dmp
